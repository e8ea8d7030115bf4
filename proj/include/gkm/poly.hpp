#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkm/lattice.hpp"
#include "gkm/linalg.hpp"
#include "gkm/rat.hpp"

namespace gkm {

using Exponents = std::vector<int>;

/// Graded lexicographic order: total degree first, then exponent-wise with
/// x1 heaviest. Fixed globally; every matrix and printout uses it.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Immutable in spirit: operations return new values.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rat, GrlexLess>;

  explicit Polynomial(std::size_t rank) : rank_(rank) {}
  static Polynomial zero(std::size_t rank) { return Polynomial(rank); }
  static Polynomial constant(std::size_t rank, const Rat& value);
  static Polynomial variable(std::size_t rank, std::size_t index);  // 0-based
  static Polynomial linear_form(const Weight& w);

  std::size_t rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  Rat coefficient(const Exponents& e) const;
  const TermMap& terms() const { return terms_; }

  /// Accumulates a term, dropping the entry if the sum cancels.
  void add_term(const Exponents& e, const Rat& coeff);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rat& scalar);
  Polynomial pow(unsigned n) const;

  std::map<int, Polynomial> homogeneous_components() const;
  Polynomial homogeneous_component(int d) const;

  /// Substitutes x_i -> images[i]; images must share one rank.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  /// Canonical text form; parse_polynomial(str(), rank()) reproduces this.
  std::string str() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t rank_;
  TermMap terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rat& s, Polynomial a);

/// Exponent vectors of total degree d in `rank` variables, descending
/// graded-lex (x1^d first).
std::vector<Exponents> monomials_of_degree(std::size_t rank, int d);

/// Coordinates for one homogeneous slice of the polynomial ring.
struct GradedPiece {
  int degree = 0;
  std::vector<Exponents> monomials;  // descending graded-lex
  std::size_t dimension() const { return monomials.size(); }
};

GradedPiece graded_piece(std::size_t rank, int d);

RatVec coefficient_vector(const Polynomial& f, const GradedPiece& piece);
Polynomial polynomial_from_coefficients(std::size_t rank, const GradedPiece& piece,
                                        const RatVec& coeffs);

/// Recursive-descent parser for the expression grammar: variables x1..xr,
/// integer and rational literals a/b, operators + - * ^ and parentheses.
/// ^ binds tighter than * binds tighter than +/-; unary minus allowed;
/// juxtaposition is a syntax error.
Polynomial parse_polynomial(const std::string& text, std::size_t rank);

/// Substitution action induced by the lattice action: x_j is replaced by the
/// linear form of w applied to the j-th basis weight. A degree-preserving
/// ring homomorphism.
Polynomial weyl_apply(const WeylElement& w, const Polynomial& f);

/// Largest k with chi^k dividing f, via the unimodular change of variables
/// that moves chi into first position. nullopt means f == 0 (divisible by
/// every power). Requires chi primitive.
std::optional<int> divisibility_order(const Polynomial& f, const Weight& chi);

/// Basis of the degree-d invariants, by Reynolds averaging of the degree-d
/// monomials followed by exact row reduction.
std::vector<Polynomial> invariant_basis(const FiniteMatrixGroup& g, int degree);

}  // namespace gkm
