#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gkm {

/// Exact arbitrary-precision rational scalar. Every coefficient in the
/// library is one of these; there is no floating point anywhere.
using Rat = mpq_class;

using RatVec = std::vector<Rat>;

/// gmpxx has no long long constructor; long is 64-bit on every supported
/// target, so this conversion is loss-free.
inline Rat to_rat(long long v) { return Rat(static_cast<long>(v)); }

/// Parses "a" or "a/b" with optional leading minus. Throws Error(ParseError)
/// on anything else, including a zero denominator.
Rat rat_from_string(const std::string& text);

/// Canonical form: "a" or "a/b" with b > 1 and the sign on the numerator.
std::string rat_to_string(const Rat& q);

}  // namespace gkm
