#include "gkm/series.hpp"

#include "gkm/errors.hpp"

namespace gkm {

namespace {
Rat coeff(const RatVec& a, std::size_t i) { return i < a.size() ? a[i] : Rat(0); }
}  // namespace

RatVec series_mul(const RatVec& a, const RatVec& b, std::size_t bound) {
  RatVec out(bound + 1, Rat(0));
  for (std::size_t i = 0; i <= bound && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= bound && j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

RatVec series_inv(const RatVec& a, std::size_t bound) {
  if (a.empty() || a[0] == 0) {
    throw Error(Errc::BadArgument, "series_inv: constant term is zero");
  }
  RatVec out(bound + 1, Rat(0));
  out[0] = 1 / a[0];
  for (std::size_t k = 1; k <= bound; ++k) {
    Rat acc(0);
    for (std::size_t i = 1; i <= k; ++i) acc += coeff(a, i) * out[k - i];
    out[k] = -acc / a[0];
  }
  return out;
}

RatVec series_div(const RatVec& a, const RatVec& b, std::size_t bound) {
  if (b.empty() || b[0] == 0) {
    throw Error(Errc::BadArgument, "series_div: divisor constant term is zero");
  }
  RatVec out(bound + 1, Rat(0));
  for (std::size_t k = 0; k <= bound; ++k) {
    Rat acc = coeff(a, k);
    for (std::size_t i = 1; i <= k; ++i) acc -= coeff(b, i) * out[k - i];
    out[k] = acc / b[0];
  }
  return out;
}

}  // namespace gkm
