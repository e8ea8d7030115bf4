#include "gkm/builders.hpp"

#include <algorithm>

#include "gkm/linalg.hpp"

namespace gkm {

RootSystemId root_system_id_from_string(const std::string& name) {
  if (name == "A1") return RootSystemId::A1;
  if (name == "A1xA1") return RootSystemId::A1xA1;
  if (name == "A2") return RootSystemId::A2;
  if (name == "B2") return RootSystemId::B2;
  if (name == "G2") return RootSystemId::G2;
  throw Error(Errc::BadArgument, "unknown root system \"" + name + "\"");
}

std::string to_string(RootSystemId id) {
  switch (id) {
    case RootSystemId::A1: return "A1";
    case RootSystemId::A1xA1: return "A1xA1";
    case RootSystemId::A2: return "A2";
    case RootSystemId::B2: return "B2";
    case RootSystemId::G2: return "G2";
  }
  return "?";
}

namespace {

// Pointwise fixed sublattice has rank r-1 exactly for a reflection.
bool is_reflection(const WeylElement& w) {
  const std::size_t r = w.rank();
  if (w.is_identity()) return false;
  if (!((w * w).is_identity())) return false;
  RationalMatrix m(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      m.a[i][j] = to_rat(w.m[i][j]) - to_rat(i == j ? 1 : 0);
    }
  }
  return matrix_rank(m) == 1;
}

WeylElement reflection_for_root(const FiniteMatrixGroup& w_group, const Weight& root,
                                const std::string& label) {
  for (const auto& w : w_group.elements) {
    if (!(w.apply(root) == -root)) continue;
    if (!is_reflection(w)) continue;
    WeylElement out = w;
    out.label = label;
    return out;
  }
  throw Error(Errc::BadArgument, "no reflection for root " + to_string(root));
}

}  // namespace

RootSystemData root_system(RootSystemId id) {
  RootSystemData rs;
  rs.id = id;
  switch (id) {
    case RootSystemId::A1:
      // Weight lattice of SU(2): the simple root is twice the fundamental weight.
      rs.rank = 1;
      rs.simple_roots = {Weight{2}};
      rs.simple_reflections = {WeylElement({{-1}}, "s1")};
      rs.positive_roots = rs.simple_roots;
      break;
    case RootSystemId::A1xA1:
      rs.rank = 2;
      rs.simple_roots = {Weight{2, 0}, Weight{0, 2}};
      rs.simple_reflections = {WeylElement({{-1, 0}, {0, 1}}, "s1"),
                               WeylElement({{1, 0}, {0, -1}}, "s2")};
      rs.positive_roots = rs.simple_roots;
      break;
    case RootSystemId::A2:
      // SU(3) weight lattice in the fundamental-weight basis.
      rs.rank = 2;
      rs.simple_roots = {Weight{2, -1}, Weight{-1, 2}};
      rs.simple_reflections = {WeylElement({{-1, 0}, {1, 1}}, "s1"),
                               WeylElement({{1, 1}, {0, -1}}, "s2")};
      rs.positive_roots = {Weight{2, -1}, Weight{-1, 2}, Weight{1, 1}};
      break;
    case RootSystemId::B2:
      rs.rank = 2;
      rs.simple_roots = {Weight{1, -1}, Weight{0, 1}};
      rs.simple_reflections = {WeylElement({{0, 1}, {1, 0}}, "s1"),
                               WeylElement({{1, 0}, {0, -1}}, "s2")};
      rs.positive_roots = {Weight{1, -1}, Weight{0, 1}, Weight{1, 0}, Weight{1, 1}};
      break;
    case RootSystemId::G2:
      // Root-lattice basis (alpha1 short, alpha2 long).
      rs.rank = 2;
      rs.simple_roots = {Weight{1, 0}, Weight{0, 1}};
      rs.simple_reflections = {WeylElement({{-1, 3}, {0, 1}}, "s1"),
                               WeylElement({{1, 0}, {1, -1}}, "s2")};
      rs.positive_roots = {Weight{1, 0}, Weight{0, 1}, Weight{1, 1},
                           Weight{2, 1}, Weight{3, 1}, Weight{3, 2}};
      break;
  }
  FiniteMatrixGroup w = generate_group(rs.simple_reflections);
  for (const auto& root : rs.positive_roots) {
    rs.positive_reflections.push_back(reflection_for_root(w, root, "s" + to_string(root)));
  }
  return rs;
}

CongruenceSystem build_coadjoint_orbit(const RootSystemData& rs, const Weight& lambda) {
  if (lambda.size() != rs.rank) {
    throw Error(Errc::RankMismatch, "weight has length " + std::to_string(lambda.size()) +
                                        ", root system has rank " + std::to_string(rs.rank));
  }
  FiniteMatrixGroup w = generate_group(rs.simple_reflections);
  Orbit orbit = orbit_with_stabilizer(w, lambda);

  CongruenceSystem sys(rs.rank);
  for (std::size_t i = 0; i < orbit.points.size(); ++i) {
    Vertex v;
    v.id = "v" + std::to_string(i);
    v.moment = orbit.points[i].first;
    v.isotropy = FiniteMatrixGroup::trivial(rs.rank);
    sys.add_vertex(std::move(v));
  }

  auto point_index = [&](const Weight& mu) -> std::size_t {
    for (std::size_t i = 0; i < orbit.points.size(); ++i) {
      if (orbit.points[i].first == mu) return i;
    }
    throw Error(Errc::BadArgument, "orbit closure error at " + to_string(mu));
  };

  for (std::size_t ri = 0; ri < rs.positive_roots.size(); ++ri) {
    const Weight& alpha = rs.positive_roots[ri];
    const WeylElement& s = rs.positive_reflections[ri];
    for (std::size_t a = 0; a < orbit.points.size(); ++a) {
      Weight mu = orbit.points[a].first;
      Weight nu = s.apply(mu);
      if (nu == mu) continue;
      std::size_t b = point_index(nu);
      if (a >= b) continue;
      CongruenceConstraint cons;
      cons.terms = {{Rat(1), "v" + std::to_string(a), std::nullopt},
                    {Rat(-1), "v" + std::to_string(b), std::nullopt}};
      cons.modulus = alpha;
      cons.order = 1;
      sys.add_constraint(std::move(cons));
    }
  }

  ClassTuple sigma;
  for (std::size_t i = 0; i < orbit.points.size(); ++i) {
    sigma.set("v" + std::to_string(i), Polynomial::linear_form(orbit.points[i].first));
  }
  sys.add_class("sigma", std::move(sigma));

  ValidationReport report = validate_system(sys);
  if (!report.ok()) {
    throw Error(Errc::BadArgument, "coadjoint builder produced an invalid system: " +
                                       report.errors.front());
  }
  return sys;
}

std::vector<CongruenceConstraint> build_fiber_case(FiberCase fc, const Weight& chi,
                                                   const std::vector<std::string>& ids) {
  auto order1 = [&](const std::string& a, const std::string& b) {
    CongruenceConstraint c;
    c.terms = {{Rat(1), a, std::nullopt}, {Rat(-1), b, std::nullopt}};
    c.modulus = chi;
    c.order = 1;
    return c;
  };

  std::vector<CongruenceConstraint> out;
  switch (fc) {
    case FiberCase::P1: {
      if (ids.size() != 2) throw Error(Errc::BadArgument, "P1 takes ids (y, z)");
      out.push_back(order1(ids[0], ids[1]));
      break;
    }
    case FiberCase::Ruled: {
      if (ids.size() != 4) throw Error(Errc::BadArgument, "Ruled takes ids (y, s(y), z, s(z))");
      out.push_back(order1(ids[0], ids[1]));
      out.push_back(order1(ids[1], ids[2]));
      out.push_back(order1(ids[2], ids[3]));
      CongruenceConstraint c2;
      c2.terms = {{Rat(1), ids[0], std::nullopt},
                  {Rat(1), ids[1], std::nullopt},
                  {Rat(-1), ids[2], std::nullopt},
                  {Rat(-1), ids[3], std::nullopt}};
      c2.modulus = chi;
      c2.order = 2;
      out.push_back(std::move(c2));
      break;
    }
    case FiberCase::PV: {
      if (ids.size() != 3) throw Error(Errc::BadArgument, "PV takes ids (y, s(y), z)");
      out.push_back(order1(ids[0], ids[1]));
      out.push_back(order1(ids[1], ids[2]));
      CongruenceConstraint c2;
      c2.terms = {{Rat(1), ids[0], std::nullopt},
                  {Rat(1), ids[1], std::nullopt},
                  {Rat(-2), ids[2], std::nullopt}};
      c2.modulus = chi;
      c2.order = 2;
      out.push_back(std::move(c2));
      break;
    }
  }
  return out;
}

CongruenceSystem build_multiplicity_free(std::size_t rank, const std::vector<OrbitDatum>& data,
                                         const std::vector<SegmentSpec>& segments) {
  CongruenceSystem sys(rank);
  for (std::size_t i = 0; i < data.size(); ++i) {
    Vertex v;
    v.id = "v" + std::to_string(i);
    if (data[i].moment.size() != rank) {
      throw Error(Errc::RankMismatch, "orbit datum " + std::to_string(i) + " has wrong rank");
    }
    v.moment = data[i].moment;
    v.isotropy = data[i].isotropy_generators.empty()
                     ? FiniteMatrixGroup::trivial(rank)
                     : generate_group(data[i].isotropy_generators);
    sys.add_vertex(std::move(v));
  }

  for (const auto& seg : segments) {
    if (seg.i >= data.size() || seg.j >= data.size()) {
      throw Error(Errc::BadArgument, "segment references a missing orbit datum");
    }
    CongruenceConstraint cons;
    cons.terms.push_back({Rat(1), "v" + std::to_string(seg.i), std::nullopt});
    ConstraintTerm other{Rat(-1), "v" + std::to_string(seg.j), std::nullopt};
    if (!seg.w.is_identity()) other.twist = seg.w;
    cons.terms.push_back(std::move(other));
    Weight delta = data[seg.i].moment - seg.w.apply(data[seg.j].moment);
    if (delta.is_zero()) {
      cons.modulus = Weight::zero(rank);
      cons.order = 0;
    } else {
      cons.modulus = primitive_part(delta).first;
      cons.order = 1;
    }
    sys.add_constraint(std::move(cons));
  }

  ClassTuple sigma;
  for (std::size_t i = 0; i < data.size(); ++i) {
    sigma.set("v" + std::to_string(i), Polynomial::linear_form(data[i].moment));
  }
  sys.add_class("sigma", std::move(sigma));

  ValidationReport report = validate_system(sys);
  if (!report.ok()) {
    throw Error(Errc::BadArgument, "multiplicity-free builder produced an invalid system: " +
                                       report.errors.front());
  }
  return sys;
}

CongruenceSystem build_complete_conics() {
  // U(3) convention, lattice = integer triples. The third modulus comes out
  // as primitive-part(lambda_1 - s(lambda_2)) = (1,1,-2).
  WeylElement s12({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, "s1");
  WeylElement s23({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}, "s2");
  WeylElement s13({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}, "s13");

  std::vector<OrbitDatum> data = {
      {Weight{2, 0, -2}, {}},       // 2rho
      {Weight{1, 1, -2}, {s12}},    // 2rho - alpha1
      {Weight{2, -1, -1}, {s23}},   // 2rho - alpha2
  };
  std::vector<SegmentSpec> segments = {
      {0, 1, WeylElement::identity(3)},
      {0, 2, WeylElement::identity(3)},
      {1, 2, s13},
  };
  return build_multiplicity_free(3, data, segments);
}

namespace {

CongruenceSystem fiber_example(FiberCase fc, const Weight& chi,
                               const std::vector<long long>& moment_multiples) {
  auto [prim, scale] = primitive_part(chi);
  (void)prim;
  (void)scale;
  const std::size_t rank = chi.size();
  CongruenceSystem sys(rank);
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < moment_multiples.size(); ++i) {
    Vertex v;
    v.id = "v" + std::to_string(i);
    v.moment = moment_multiples[i] * chi;
    v.isotropy = FiniteMatrixGroup::trivial(rank);
    ids.push_back(v.id);
    sys.add_vertex(std::move(v));
  }
  for (auto& cons : build_fiber_case(fc, chi, ids)) sys.add_constraint(std::move(cons));
  ClassTuple sigma;
  for (std::size_t i = 0; i < moment_multiples.size(); ++i) {
    sigma.set(ids[i], Polynomial::linear_form(moment_multiples[i] * chi));
  }
  sys.add_class("sigma", std::move(sigma));
  ValidationReport report = validate_system(sys);
  if (!report.ok()) {
    throw Error(Errc::BadArgument, "fiber example is invalid: " + report.errors.front());
  }
  return sys;
}

}  // namespace

CongruenceSystem build_p1_example(const Weight& chi) {
  return fiber_example(FiberCase::P1, chi, {1, -1});
}

CongruenceSystem build_ruled_example(const Weight& chi) {
  // Moments y, s(y) = +-chi and z, s(z) = +-2chi; the signed sums cancel, so
  // sigma passes the order-2 congruence.
  return fiber_example(FiberCase::Ruled, chi, {1, -1, 2, -2});
}

CongruenceSystem build_pv_example(const Weight& chi) {
  return fiber_example(FiberCase::PV, chi, {1, -1, 0});
}

}  // namespace gkm
