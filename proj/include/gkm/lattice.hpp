#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "gkm/errors.hpp"

namespace gkm {

/// Integer vector in the weight lattice. Doubles as the linear form with
/// these coordinates (see Polynomial::linear_form).
struct Weight {
  std::vector<long long> c;

  Weight() = default;
  explicit Weight(std::vector<long long> coords) : c(std::move(coords)) {}
  Weight(std::initializer_list<long long> coords) : c(coords) {}
  static Weight zero(std::size_t rank) { return Weight(std::vector<long long>(rank, 0)); }

  std::size_t size() const { return c.size(); }
  long long operator[](std::size_t i) const { return c[i]; }
  bool is_zero() const;

  friend bool operator==(const Weight&, const Weight&) = default;
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight operator*(long long s, const Weight& a);

/// Coordinate-wise lexicographic order; used only for deterministic tie-breaks.
bool lex_less(const Weight& a, const Weight& b);

std::string to_string(const Weight& w);

/// Lattice automorphism: an r x r integer matrix of determinant +-1 acting on
/// column vectors. The optional label carries a word in the generators.
struct WeylElement {
  std::vector<std::vector<long long>> m;  // row major
  std::string label;

  WeylElement() = default;
  WeylElement(std::vector<std::vector<long long>> entries, std::string lbl = "")
      : m(std::move(entries)), label(std::move(lbl)) {}
  static WeylElement identity(std::size_t rank);

  std::size_t rank() const { return m.size(); }
  bool is_identity() const;
  Weight apply(const Weight& w) const;
  long long det() const;
  bool is_unimodular() const { return rank() > 0 && (det() == 1 || det() == -1); }

  /// Composition: (a * b)(v) = a(b(v)).
  WeylElement operator*(const WeylElement& other) const;

  // Labels are bookkeeping, not identity.
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.m == b.m; }
};

/// Flattened entry-wise lexicographic order on matrices.
bool matrix_lex_less(const WeylElement& a, const WeylElement& b);

/// Exact inverse of a unimodular integer matrix.
WeylElement inverse_unimodular(const WeylElement& w);

struct FiniteMatrixGroup {
  std::vector<WeylElement> elements;     // identity first, then by word length / entries
  std::vector<std::size_t> generators;   // indices into elements, in the order supplied

  static FiniteMatrixGroup trivial(std::size_t rank);

  std::size_t order() const { return elements.size(); }
  std::size_t rank() const { return elements.empty() ? 0 : elements.front().rank(); }
  bool is_trivial() const { return elements.size() == 1; }
  bool contains(const WeylElement& w) const;
  std::vector<WeylElement> generator_elements() const;
};

inline constexpr std::size_t kDefaultGroupBound = 10080;

/// Writes v = m * p with p primitive (coordinate gcd 1) and m > 0.
/// Throws Error(ZeroWeight) on the zero vector.
std::pair<Weight, long long> primitive_part(const Weight& v);

/// Unimodular integer matrix M whose first row is chi; under y = M x the
/// linear form chi becomes the first new variable. Requires chi primitive.
WeylElement extend_to_unimodular_basis(const Weight& chi);

/// Same M together with its inverse (the substitution x = M^{-1} y).
std::pair<WeylElement, WeylElement> extend_to_unimodular_basis_with_inverse(const Weight& chi);

/// Closure of the generators under multiplication, breadth-first by word
/// length with entry-wise lexicographic tie-breaks. Throws GroupTooLarge when
/// the closure exceeds the bound (the usual sign of an infinite group).
FiniteMatrixGroup generate_group(const std::vector<WeylElement>& gens,
                                 std::size_t bound = kDefaultGroupBound);

struct Orbit {
  /// Orbit points with a coset representative mapping the base point there.
  /// Breadth-first from the base point, ties broken lexicographically.
  std::vector<std::pair<Weight, WeylElement>> points;
  FiniteMatrixGroup stabilizer;
};

Orbit orbit_with_stabilizer(const FiniteMatrixGroup& g, const Weight& lambda);

/// Dimensions of the degree-d invariants of the polynomial ring under g,
/// for d = 0..degree_bound, by Molien's formula in exact rational truncated
/// power-series arithmetic.
std::vector<std::size_t> molien_series(const FiniteMatrixGroup& g, std::size_t degree_bound);

}  // namespace gkm
