#pragma once

#include <string>
#include <vector>

#include "gkm/system.hpp"

namespace gkm {

enum class RootSystemId { A1, A1xA1, A2, B2, G2 };

RootSystemId root_system_id_from_string(const std::string& name);
std::string to_string(RootSystemId id);

/// Hard-coded integer realizations. A1 uses the weight lattice of SU(2)
/// (root = 2); A2 the SU(3) weight lattice in the fundamental-weight basis;
/// B2 the standard Z^2 with roots e1-e2, e2; G2 the root-lattice basis.
struct RootSystemData {
  RootSystemId id = RootSystemId::A1;
  std::size_t rank = 0;
  std::vector<Weight> simple_roots;
  std::vector<WeylElement> simple_reflections;
  std::vector<Weight> positive_roots;
  std::vector<WeylElement> positive_reflections;  // aligned with positive_roots
};

RootSystemData root_system(RootSystemId id);

/// The orbit model: one vertex per point of W.lambda (trivial isotropy), one
/// order-1 constraint per positive root and unordered swapped pair, and the
/// named class "sigma" assigning each vertex the linear form of its moment.
CongruenceSystem build_coadjoint_orbit(const RootSystemData& rs, const Weight& lambda);

enum class FiberCase { P1, Ruled, PV };

/// Constraint templates for the three one-dimensional-quotient fiber types:
/// P1 takes ids (y, z); Ruled (y, s(y), z, s(z)); PV (y, s(y), z).
std::vector<CongruenceConstraint> build_fiber_case(FiberCase fc, const Weight& chi,
                                                   const std::vector<std::string>& ids);

struct OrbitDatum {
  Weight moment;
  std::vector<WeylElement> isotropy_generators;
};

/// Segment [lambda_i, w(lambda_j)] of the one-skeleton image; input data,
/// never computed from geometry.
struct SegmentSpec {
  std::size_t i = 0;
  std::size_t j = 0;
  WeylElement w;
};

/// One vertex per orbit datum; per segment the constraint
/// f_i - w(f_j) == 0 mod primitive-part(lambda_i - w(lambda_j)), degenerating
/// to an exact equality when the moduli difference vanishes.
CongruenceSystem build_multiplicity_free(std::size_t rank, const std::vector<OrbitDatum>& data,
                                         const std::vector<SegmentSpec>& segments);

/// The space of complete conics under U(3), rank 3: vertices 2rho, 2rho-a1,
/// 2rho-a2 with isotropies 1, <s1>, <s2> and the three congruences of the
/// multiplicity-free presentation.
CongruenceSystem build_complete_conics();

// Standalone example systems wrapping the fiber templates, with moments
// chosen so that "sigma" (the moment linear forms) satisfies the system.
CongruenceSystem build_p1_example(const Weight& chi);
CongruenceSystem build_ruled_example(const Weight& chi);
CongruenceSystem build_pv_example(const Weight& chi);

}  // namespace gkm
