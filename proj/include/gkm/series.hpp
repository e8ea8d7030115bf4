#pragma once

#include <cstddef>

#include "gkm/rat.hpp"

namespace gkm {

// Truncated power series over the rationals, stored as coefficient vectors
// indexed 0..bound. Inputs shorter than bound+1 are read as zero-padded.

RatVec series_mul(const RatVec& a, const RatVec& b, std::size_t bound);

/// Multiplicative inverse of a series with a[0] != 0.
RatVec series_inv(const RatVec& a, std::size_t bound);

/// a / b with b[0] != 0.
RatVec series_div(const RatVec& a, const RatVec& b, std::size_t bound);

}  // namespace gkm
