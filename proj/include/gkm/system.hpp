#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkm/lattice.hpp"
#include "gkm/linalg.hpp"
#include "gkm/poly.hpp"

namespace gkm {

/// Fixed-point datum: a moment label and the isotropy group fixing it.
struct Vertex {
  std::string id;
  Weight moment;
  FiniteMatrixGroup isotropy;
};

struct ConstraintTerm {
  Rat coeff;
  std::string vertex;
  std::optional<WeylElement> twist;
};

/// sum_t coeff_t * twist_t(f_{vertex_t}) == 0 (mod modulus^order).
/// Order 0 (or a zero modulus after validation) means exact equality.
struct CongruenceConstraint {
  std::vector<ConstraintTerm> terms;
  Weight modulus;
  int order = 1;
};

/// One polynomial per vertex; a candidate element of the ring.
class ClassTuple {
 public:
  ClassTuple() = default;
  void set(const std::string& vertex_id, Polynomial f);
  const Polynomial* find(const std::string& vertex_id) const;
  const std::map<std::string, Polynomial>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }

  friend bool operator==(const ClassTuple& a, const ClassTuple& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::map<std::string, Polynomial> parts_;
};

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  std::vector<std::string> notes;
  bool ok() const { return errors.empty(); }
};

/// The full presentation of a ring: vertices plus congruence constraints.
/// Mutable while being built; frozen once validate_system succeeds.
class CongruenceSystem {
 public:
  explicit CongruenceSystem(std::size_t rank) : rank_(rank) {}

  std::size_t rank() const { return rank_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<CongruenceConstraint>& constraints() const { return constraints_; }
  const std::map<std::string, ClassTuple>& named_classes() const { return named_classes_; }
  std::optional<std::size_t> vertex_index(const std::string& id) const;
  const ClassTuple* named_class(const std::string& name) const;
  bool is_validated() const { return validated_; }

  void add_vertex(Vertex v);
  void add_constraint(CongruenceConstraint c);
  void add_class(const std::string& name, ClassTuple t);

  friend ValidationReport validate_system(CongruenceSystem& sys);

 private:
  std::size_t rank_;
  std::vector<Vertex> vertices_;
  std::vector<CongruenceConstraint> constraints_;
  std::map<std::string, ClassTuple> named_classes_;
  bool validated_ = false;
};

/// Normalizes moduli to primitive parts (noting each change), rewrites
/// zero-modulus positive-order constraints as exact equalities (warning),
/// and checks vertex references, ranks, unimodularity and moment fixing.
/// The system counts as validated when no errors were found.
ValidationReport validate_system(CongruenceSystem& sys);

struct Violation {
  enum class Kind { Invariance, Congruence };
  Kind kind = Kind::Congruence;
  std::size_t constraint_index = 0;  // congruence violations
  std::string vertex_id;             // invariance violations
  Polynomial witness;                // the combination that fails
  std::string message;

  Violation() : witness(Polynomial::zero(1)) {}
};

struct SatisfiesResult {
  bool ok = false;
  std::optional<Violation> violation;
};

/// Pointwise membership test: every invariance and every congruence holds.
SatisfiesResult satisfies(const CongruenceSystem& sys, const ClassTuple& c);

/// Linearization of all constraints on the degree-d slice. Unknowns are the
/// concatenated graded-lex coefficient vectors of one degree-d polynomial per
/// vertex; invariance rows come first (vertices in order, generators in
/// order), then congruence rows (constraints in listed order), monomials in
/// graded-lex order throughout.
RationalMatrix constraint_rows(const CongruenceSystem& sys, int degree);

std::size_t tuple_space_dimension(const CongruenceSystem& sys, int degree);

/// Degree-d coefficient vector of a tuple (vertex-major, graded-lex).
RatVec tuple_coefficients(const CongruenceSystem& sys, const ClassTuple& c, int degree);
ClassTuple tuple_from_coefficients(const CongruenceSystem& sys, int degree, const RatVec& v);

/// (f, f, ..., f).
ClassTuple diagonal_tuple(const CongruenceSystem& sys, const Polynomial& f);
/// Componentwise product.
ClassTuple tuple_product(const ClassTuple& a, const ClassTuple& b);
ClassTuple tuple_scale(const Polynomial& f, const ClassTuple& a);

/// Transport of the whole system along a unimodular change of lattice basis:
/// weights map through u, twists and isotropy conjugate, class polynomials
/// transform by the induced substitution.
CongruenceSystem apply_basis_change(const CongruenceSystem& sys, const WeylElement& u);

}  // namespace gkm
