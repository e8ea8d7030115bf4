#include "gkm/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "gkm/rat.hpp"
#include "gkm/series.hpp"

namespace gkm {

bool Weight::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](long long x) { return x == 0; });
}

Weight operator+(const Weight& a, const Weight& b) {
  Weight out = a;
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] += b.c[i];
  return out;
}

Weight operator-(const Weight& a, const Weight& b) {
  Weight out = a;
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] -= b.c[i];
  return out;
}

Weight operator-(const Weight& a) {
  Weight out = a;
  for (auto& x : out.c) x = -x;
  return out;
}

Weight operator*(long long s, const Weight& a) {
  Weight out = a;
  for (auto& x : out.c) x *= s;
  return out;
}

bool lex_less(const Weight& a, const Weight& b) {
  return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.c.size(); ++i) {
    if (i) os << ",";
    os << w.c[i];
  }
  os << ")";
  return os.str();
}

WeylElement WeylElement::identity(std::size_t rank) {
  std::vector<std::vector<long long>> m(rank, std::vector<long long>(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) m[i][i] = 1;
  return WeylElement(std::move(m), "e");
}

bool WeylElement::is_identity() const {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[i][j] != (i == j ? 1 : 0)) return false;
    }
  }
  return !m.empty();
}

Weight WeylElement::apply(const Weight& w) const {
  if (w.size() != rank()) {
    throw Error(Errc::RankMismatch, "matrix of rank " + std::to_string(rank()) +
                                        " applied to weight of length " + std::to_string(w.size()));
  }
  Weight out = Weight::zero(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    long long acc = 0;
    for (std::size_t j = 0; j < rank(); ++j) acc += m[i][j] * w.c[j];
    out.c[i] = acc;
  }
  return out;
}

long long WeylElement::det() const {
  // Fraction-free Bareiss over arbitrary-precision integers.
  const std::size_t n = rank();
  if (n == 0) return 0;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);
  }
  mpz_class prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  mpz_class d = sign * a[n - 1][n - 1];
  return static_cast<long long>(d.get_si());
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
  if (rank() != other.rank()) {
    throw Error(Errc::RankMismatch, "composing matrices of different rank");
  }
  const std::size_t n = rank();
  WeylElement out;
  out.m.assign(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (m[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out.m[i][j] += m[i][k] * other.m[k][j];
    }
  }
  if (is_identity()) {
    out.label = other.label;
  } else if (other.is_identity()) {
    out.label = label;
  } else if (!label.empty() && !other.label.empty()) {
    out.label = label + "*" + other.label;
  }
  return out;
}

bool matrix_lex_less(const WeylElement& a, const WeylElement& b) {
  for (std::size_t i = 0; i < a.m.size(); ++i) {
    if (a.m[i] != b.m[i]) return a.m[i] < b.m[i];
  }
  return false;
}

WeylElement inverse_unimodular(const WeylElement& w) {
  if (!w.is_unimodular()) {
    throw Error(Errc::BadArgument, "inverse of a non-unimodular matrix");
  }
  const std::size_t n = w.rank();
  // Gauss-Jordan on [w | I] over the rationals; the result is integral.
  std::vector<RatVec> a(n, RatVec(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = to_rat(w.m[i][j]);
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (a[p][col] == 0) ++p;
    std::swap(a[col], a[p]);
    Rat inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (std::size_t j = col; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  WeylElement out;
  out.m.assign(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rat v = a[i][n + j];
      out.m[i][j] = static_cast<long long>(v.get_num().get_si());
    }
  }
  if (!w.label.empty()) out.label = w.label + "^-1";
  return out;
}

FiniteMatrixGroup FiniteMatrixGroup::trivial(std::size_t rank) {
  FiniteMatrixGroup g;
  g.elements.push_back(WeylElement::identity(rank));
  return g;
}

bool FiniteMatrixGroup::contains(const WeylElement& w) const {
  return std::find(elements.begin(), elements.end(), w) != elements.end();
}

std::vector<WeylElement> FiniteMatrixGroup::generator_elements() const {
  std::vector<WeylElement> out;
  out.reserve(generators.size());
  for (std::size_t idx : generators) out.push_back(elements[idx]);
  return out;
}

std::pair<Weight, long long> primitive_part(const Weight& v) {
  if (v.is_zero()) {
    throw Error(Errc::ZeroWeight, "primitive part of the zero weight");
  }
  long long g = 0;
  for (long long x : v.c) g = std::gcd(g, x);
  Weight p = v;
  for (auto& x : p.c) x /= g;
  return {p, g};
}

std::pair<WeylElement, WeylElement> extend_to_unimodular_basis_with_inverse(const Weight& chi) {
  const std::size_t n = chi.size();
  if (n == 0) throw Error(Errc::BadArgument, "empty weight");
  std::vector<long long> c = chi.c;

  WeylElement fwd = WeylElement::identity(n);   // becomes M with first row chi
  WeylElement inv = WeylElement::identity(n);   // becomes M^{-1}
  fwd.label.clear();
  inv.label.clear();

  // Column op "col_j += t*col_i" on the row vector c; mirrored as a row op on
  // fwd (the accumulated inverse of the op product) and a column op on inv.
  auto add_col = [&](std::size_t i, std::size_t j, long long t) {
    c[j] += t * c[i];
    for (std::size_t k = 0; k < n; ++k) fwd.m[i][k] -= t * fwd.m[j][k];
    for (std::size_t k = 0; k < n; ++k) inv.m[k][j] += t * inv.m[k][i];
  };

  auto nonzero_count = [&]() {
    return static_cast<std::size_t>(std::count_if(c.begin(), c.end(),
                                                  [](long long x) { return x != 0; }));
  };

  if (nonzero_count() == 0) throw Error(Errc::ZeroWeight, "zero weight has no completion");

  while (nonzero_count() > 1) {
    std::size_t imin = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i] == 0) continue;
      if (imin == n || std::llabs(c[i]) < std::llabs(c[imin])) imin = i;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (j == imin || c[j] == 0) continue;
      add_col(imin, j, -(c[j] / c[imin]));
    }
  }

  std::size_t pos = 0;
  while (c[pos] == 0) ++pos;
  if (std::llabs(c[pos]) != 1) {
    throw Error(Errc::NotPrimitive, "weight " + to_string(chi) + " is not primitive");
  }
  if (pos != 0) {
    std::swap(c[0], c[pos]);
    std::swap(fwd.m[0], fwd.m[pos]);
    for (std::size_t k = 0; k < n; ++k) std::swap(inv.m[k][0], inv.m[k][pos]);
  }
  if (c[0] == -1) {
    c[0] = 1;
    for (std::size_t k = 0; k < n; ++k) fwd.m[0][k] = -fwd.m[0][k];
    for (std::size_t k = 0; k < n; ++k) inv.m[k][0] = -inv.m[k][0];
  }
  return {fwd, inv};
}

WeylElement extend_to_unimodular_basis(const Weight& chi) {
  return extend_to_unimodular_basis_with_inverse(chi).first;
}

FiniteMatrixGroup generate_group(const std::vector<WeylElement>& gens, std::size_t bound) {
  if (gens.empty()) {
    throw Error(Errc::BadArgument, "generate_group needs the rank; pass trivial() instead");
  }
  const std::size_t n = gens.front().rank();
  std::vector<WeylElement> named_gens = gens;
  for (std::size_t i = 0; i < named_gens.size(); ++i) {
    if (named_gens[i].rank() != n) {
      throw Error(Errc::RankMismatch, "generators of mixed rank");
    }
    if (!named_gens[i].is_unimodular()) {
      throw Error(Errc::BadArgument, "generator " + std::to_string(i) + " is not unimodular");
    }
    if (named_gens[i].label.empty()) named_gens[i].label = "g" + std::to_string(i + 1);
  }

  FiniteMatrixGroup group;
  group.elements.push_back(WeylElement::identity(n));
  std::set<std::vector<std::vector<long long>>> seen;
  seen.insert(group.elements.front().m);

  std::vector<WeylElement> frontier = group.elements;
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& e : frontier) {
      for (const auto& g : named_gens) {
        WeylElement p = e * g;
        if (seen.insert(p.m).second) next.push_back(p);
      }
    }
    std::sort(next.begin(), next.end(), matrix_lex_less);
    for (auto& e : next) group.elements.push_back(std::move(e));
    if (group.elements.size() > bound) {
      throw Error(Errc::GroupTooLarge, "group closure exceeds bound " + std::to_string(bound) +
                                           "; the generators likely span an infinite group");
    }
    frontier.assign(group.elements.end() - static_cast<std::ptrdiff_t>(next.size()),
                    group.elements.end());
  }

  for (const auto& g : named_gens) {
    auto it = std::find(group.elements.begin(), group.elements.end(), g);
    group.generators.push_back(static_cast<std::size_t>(it - group.elements.begin()));
  }
  return group;
}

Orbit orbit_with_stabilizer(const FiniteMatrixGroup& g, const Weight& lambda) {
  if (g.rank() != lambda.size()) {
    throw Error(Errc::RankMismatch, "orbit of a weight of the wrong length");
  }
  Orbit orbit;
  orbit.points.emplace_back(lambda, WeylElement::identity(lambda.size()));
  std::set<std::vector<long long>> seen{lambda.c};
  const auto gens = g.generator_elements();

  std::vector<std::pair<Weight, WeylElement>> frontier = orbit.points;
  while (!frontier.empty()) {
    std::vector<std::pair<Weight, WeylElement>> next;
    for (const auto& [point, rep] : frontier) {
      for (const auto& gen : gens) {
        Weight q = gen.apply(point);
        if (seen.insert(q.c).second) next.emplace_back(q, gen * rep);
      }
    }
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    for (auto& p : next) orbit.points.push_back(std::move(p));
    frontier.assign(orbit.points.end() - static_cast<std::ptrdiff_t>(next.size()),
                    orbit.points.end());
  }

  FiniteMatrixGroup stab;
  for (const auto& e : g.elements) {
    if (e.apply(lambda) == lambda) stab.elements.push_back(e);
  }
  for (std::size_t i = 1; i < stab.elements.size(); ++i) stab.generators.push_back(i);
  orbit.stabilizer = std::move(stab);
  return orbit;
}

std::vector<std::size_t> molien_series(const FiniteMatrixGroup& g, std::size_t degree_bound) {
  const std::size_t r = g.rank();
  RatVec total(degree_bound + 1, Rat(0));
  for (const auto& w : g.elements) {
    // det(I - t w) = sum_k (-1)^k e_k t^k with e_k the elementary symmetric
    // functions of the eigenvalues, via Newton's identities on tr(w^k).
    std::vector<Rat> power_sums(r + 1, Rat(0));
    WeylElement wk = WeylElement::identity(r);
    for (std::size_t k = 1; k <= r; ++k) {
      wk = wk * w;
      long long tr = 0;
      for (std::size_t i = 0; i < r; ++i) tr += wk.m[i][i];
      power_sums[k] = static_cast<long>(tr);
    }
    RatVec elem(r + 1, Rat(0));
    elem[0] = 1;
    for (std::size_t k = 1; k <= r; ++k) {
      Rat acc(0);
      for (std::size_t i = 1; i <= k; ++i) {
        Rat term = elem[k - i] * power_sums[i];
        if (i % 2 == 0) term = -term;
        acc += term;
      }
      elem[k] = acc / Rat(static_cast<long>(k));
    }
    RatVec den(r + 1, Rat(0));
    for (std::size_t k = 0; k <= r; ++k) den[k] = (k % 2 == 0) ? elem[k] : -elem[k];
    RatVec inv = series_inv(den, degree_bound);
    for (std::size_t d = 0; d <= degree_bound; ++d) total[d] += inv[d];
  }

  std::vector<std::size_t> dims(degree_bound + 1, 0);
  Rat order(static_cast<long>(g.order()));
  for (std::size_t d = 0; d <= degree_bound; ++d) {
    Rat v = total[d] / order;
    if (v.get_den() != 1 || v < 0) {
      throw Error(Errc::BadArgument, "Molien series produced a non-integral coefficient");
    }
    dims[d] = static_cast<std::size_t>(v.get_num().get_ui());
  }
  return dims;
}

}  // namespace gkm
