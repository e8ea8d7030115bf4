#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gkm/system.hpp"

namespace gkm {

/// Polynomial degree d corresponds to cohomological degree 2d; everything
/// internal is indexed by d.
inline constexpr int kDefaultDegreeBound = 8;

struct HilbertData {
  std::vector<std::size_t> dims;  // index d = dimension of the degree-d piece
  int bound = 0;
};

/// Basis of the solution space in degree d (kernel of constraint_rows,
/// free-variable parametrization), mapped back to polynomial tuples.
std::vector<ClassTuple> graded_basis(const CongruenceSystem& sys, int degree);

HilbertData hilbert_series(const CongruenceSystem& sys, int degree_bound);

enum class CoefficientRing { FullRing, Invariants };

struct Generator {
  int degree = 0;
  ClassTuple cls;
  RatVec coords;  // coefficient vector in the degree slice
};

struct GeneratorSet {
  CoefficientRing over = CoefficientRing::FullRing;
  std::optional<FiniteMatrixGroup> group;  // Invariants mode only
  std::vector<Generator> generators;
  std::vector<std::size_t> betti;  // generator count per degree, 0..bound
  int bound = 0;

  int max_degree() const;
};

/// Truncated freeness certificate: the verdict only ever claims equality of
/// Hilbert series through the stated degree, never actual freeness.
struct FreenessVerdict {
  bool pass = false;
  std::vector<long long> numerator;  // b(t) coefficients, 0..through_degree
  int through_degree = 0;
  std::vector<std::string> warnings;
};

struct MinimalGenerators {
  GeneratorSet generators;
  FreenessVerdict freeness;
};

/// Over the full ring: in each degree, a basis of a complement of
/// S^+ . H_(d-1) inside H_d (degree-1 multiplication suffices). Over
/// invariants(G): the complement of sum_e Diag(invariants_e) . H_(d-e), with
/// the verdict from truncated division of the Hilbert series by the Molien
/// series of G.
MinimalGenerators minimal_generators(const CongruenceSystem& sys, int degree_bound,
                                     CoefficientRing over = CoefficientRing::FullRing,
                                     const std::optional<FiniteMatrixGroup>& group = std::nullopt);

/// Coefficients f_k with c = sum_k f_k . e_k (diagonal module action),
/// solved degree by degree. Throws Error(NotInSpan) when no exact solution
/// exists, including when c does not satisfy the system.
std::vector<Polynomial> module_coordinates(const CongruenceSystem& sys, const GeneratorSet& gens,
                                           const ClassTuple& c);

struct StructureConstants {
  /// Keyed by (i, j) with i <= j; at() looks up either order.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Polynomial>> table;
  const std::vector<Polynomial>& at(std::size_t i, std::size_t j) const;
};

StructureConstants structure_constants(const CongruenceSystem& sys, const GeneratorSet& gens,
                                       int degree_bound);

enum class BettiMode { Full, Weyl };

/// Graded dimensions of the quotient by the ideal of diagonal positive-degree
/// polynomials (Full) or diagonal positive-degree invariants (Weyl). Entry d
/// is reported externally as cohomological degree 2d.
std::vector<std::size_t> ordinary_betti(const CongruenceSystem& sys, int degree_bound,
                                        BettiMode mode = BettiMode::Full,
                                        const std::optional<FiniteMatrixGroup>& group = std::nullopt);

}  // namespace gkm
