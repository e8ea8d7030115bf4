#include "gkm/ring.hpp"

#include <algorithm>
#include <set>

#include "gkm/series.hpp"

namespace gkm {

namespace {

void require_validated(const CongruenceSystem& sys) {
  if (!sys.is_validated()) {
    throw Error(Errc::BadArgument, "system must pass validate_system first");
  }
}

struct DegreeSlice {
  std::vector<RatVec> vectors;
  std::vector<ClassTuple> tuples;
};

DegreeSlice solve_degree(const CongruenceSystem& sys, int d) {
  DegreeSlice slice;
  RrefResult rr = rref_kernel(constraint_rows(sys, d));
  slice.vectors = std::move(rr.kernel);
  slice.tuples.reserve(slice.vectors.size());
  for (const auto& v : slice.vectors) slice.tuples.push_back(tuple_from_coefficients(sys, d, v));
  return slice;
}

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Everything the derived group must fix for the invariant module action to
// make sense: constraint twists and isotropy elements.
bool group_covers_system(const CongruenceSystem& sys, const FiniteMatrixGroup& g) {
  for (const auto& v : sys.vertices()) {
    for (const auto& e : v.isotropy.elements) {
      if (!g.contains(e)) return false;
    }
  }
  for (const auto& cons : sys.constraints()) {
    for (const auto& term : cons.terms) {
      if (term.twist && !g.contains(*term.twist)) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<ClassTuple> graded_basis(const CongruenceSystem& sys, int degree) {
  require_validated(sys);
  return solve_degree(sys, degree).tuples;
}

HilbertData hilbert_series(const CongruenceSystem& sys, int degree_bound) {
  require_validated(sys);
  HilbertData data;
  data.bound = degree_bound;
  for (int d = 0; d <= degree_bound; ++d) {
    std::size_t cols = tuple_space_dimension(sys, d);
    std::size_t rank = matrix_rank(constraint_rows(sys, d));
    data.dims.push_back(cols - rank);
  }
  return data;
}

int GeneratorSet::max_degree() const {
  int out = 0;
  for (const auto& g : generators) out = std::max(out, g.degree);
  return out;
}

MinimalGenerators minimal_generators(const CongruenceSystem& sys, int degree_bound,
                                     CoefficientRing over,
                                     const std::optional<FiniteMatrixGroup>& group) {
  require_validated(sys);
  if (over == CoefficientRing::Invariants) {
    if (!group) throw Error(Errc::BadArgument, "invariants mode needs a group");
    if (group->rank() != sys.rank()) {
      throw Error(Errc::RankMismatch, "group acts in the wrong rank");
    }
  }

  MinimalGenerators out;
  out.generators.over = over;
  out.generators.group = group;
  out.generators.bound = degree_bound;
  out.generators.betti.assign(static_cast<std::size_t>(degree_bound) + 1, 0);
  out.freeness.through_degree = degree_bound;

  if (over == CoefficientRing::Invariants && !group_covers_system(sys, *group)) {
    out.freeness.warnings.push_back(
        "GroupActionMismatch: the group does not fix the constraint set; "
        "the invariant module action may not preserve the ring");
  }

  std::vector<DegreeSlice> slices;
  slices.reserve(static_cast<std::size_t>(degree_bound) + 1);
  for (int d = 0; d <= degree_bound; ++d) slices.push_back(solve_degree(sys, d));

  std::vector<std::vector<Polynomial>> invariants;  // degree -> basis, invariants mode
  if (over == CoefficientRing::Invariants) {
    invariants.resize(static_cast<std::size_t>(degree_bound) + 1);
    for (int e = 1; e <= degree_bound; ++e) {
      invariants[static_cast<std::size_t>(e)] = invariant_basis(*group, e);
    }
  }

  const std::size_t r = sys.rank();
  for (int d = 0; d <= degree_bound; ++d) {
    RowReducer reducer(tuple_space_dimension(sys, d));
    if (over == CoefficientRing::FullRing) {
      if (d >= 1) {
        for (const auto& h : slices[static_cast<std::size_t>(d - 1)].tuples) {
          for (std::size_t j = 0; j < r; ++j) {
            ClassTuple prod = tuple_scale(Polynomial::variable(r, j), h);
            reducer.add(tuple_coefficients(sys, prod, d));
          }
        }
      }
    } else {
      for (int e = 1; e <= d; ++e) {
        for (const auto& p : invariants[static_cast<std::size_t>(e)]) {
          for (const auto& h : slices[static_cast<std::size_t>(d - e)].tuples) {
            reducer.add(tuple_coefficients(sys, tuple_scale(p, h), d));
          }
        }
      }
    }
    const auto& slice = slices[static_cast<std::size_t>(d)];
    for (std::size_t i = 0; i < slice.vectors.size(); ++i) {
      if (reducer.add(slice.vectors[i])) {
        Generator gen;
        gen.degree = d;
        gen.cls = slice.tuples[i];
        gen.coords = slice.vectors[i];
        out.generators.generators.push_back(std::move(gen));
        ++out.generators.betti[static_cast<std::size_t>(d)];
      }
    }
  }

  std::vector<std::size_t> dims;
  dims.reserve(slices.size());
  for (const auto& s : slices) dims.push_back(s.vectors.size());

  if (over == CoefficientRing::FullRing) {
    // H(t) * (1-t)^r must reproduce the generator counts through the bound.
    bool pass = true;
    out.freeness.numerator.assign(static_cast<std::size_t>(degree_bound) + 1, 0);
    for (int m = 0; m <= degree_bound; ++m) {
      long long acc = 0;
      for (int k = 0; k <= m; ++k) {
        long long sign = ((m - k) % 2 == 0) ? 1 : -1;
        acc += static_cast<long long>(dims[static_cast<std::size_t>(k)]) * sign *
               binomial(static_cast<long long>(r), m - k);
      }
      out.freeness.numerator[static_cast<std::size_t>(m)] = acc;
      if (acc != static_cast<long long>(out.generators.betti[static_cast<std::size_t>(m)])) {
        pass = false;
      }
      if (acc < 0) pass = false;
    }
    out.freeness.pass = pass;
  } else {
    std::vector<std::size_t> molien = molien_series(*group, static_cast<std::size_t>(degree_bound));
    RatVec hs(dims.size()), ms(molien.size());
    for (std::size_t i = 0; i < dims.size(); ++i) hs[i] = static_cast<long>(dims[i]);
    for (std::size_t i = 0; i < molien.size(); ++i) ms[i] = static_cast<long>(molien[i]);
    RatVec b = series_div(hs, ms, static_cast<std::size_t>(degree_bound));
    bool pass = true;
    out.freeness.numerator.assign(static_cast<std::size_t>(degree_bound) + 1, 0);
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i].get_den() != 1 || b[i] < 0) {
        pass = false;
        out.freeness.numerator[i] = 0;
      } else {
        out.freeness.numerator[i] = b[i].get_num().get_si();
      }
      if (pass && out.freeness.numerator[i] !=
                      static_cast<long long>(out.generators.betti[i])) {
        out.freeness.warnings.push_back("series numerator disagrees with generator count in degree " +
                                        std::to_string(i));
      }
    }
    out.freeness.pass = pass;
  }
  return out;
}

std::vector<Polynomial> module_coordinates(const CongruenceSystem& sys, const GeneratorSet& gens,
                                           const ClassTuple& c) {
  require_validated(sys);
  SatisfiesResult sat = satisfies(sys, c);
  if (!sat.ok) {
    throw Error(Errc::NotInSpan, "class does not satisfy the system: " + sat.violation->message);
  }

  const std::size_t r = sys.rank();
  std::vector<Polynomial> coords(gens.generators.size(), Polynomial::zero(r));

  // Union of homogeneous degrees over the components.
  std::set<int> degrees;
  for (const auto& [id, f] : c.parts()) {
    for (const auto& [d, comp] : f.homogeneous_components()) degrees.insert(d);
  }

  for (int d : degrees) {
    RatVec rhs = tuple_coefficients(sys, c, d);
    // One column per (generator, coefficient-basis monomial).
    std::vector<RatVec> cols;
    std::vector<std::pair<std::size_t, Polynomial>> col_info;
    for (std::size_t k = 0; k < gens.generators.size(); ++k) {
      const Generator& gen = gens.generators[k];
      int cd = d - gen.degree;
      if (cd < 0) continue;
      std::vector<Polynomial> basis;
      if (gens.over == CoefficientRing::FullRing) {
        for (const auto& e : monomials_of_degree(r, cd)) {
          Polynomial mono(r);
          mono.add_term(e, Rat(1));
          basis.push_back(std::move(mono));
        }
      } else {
        basis = invariant_basis(*gens.group, cd);
      }
      for (const auto& p : basis) {
        cols.push_back(tuple_coefficients(sys, tuple_scale(p, gen.cls), d));
        col_info.emplace_back(k, p);
      }
    }
    RationalMatrix a(rhs.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (std::size_t i = 0; i < rhs.size(); ++i) a.a[i][j] = cols[j][i];
    }
    auto solution = solve_linear(a, rhs);
    if (!solution) {
      throw Error(Errc::NotInSpan,
                  "no expression in the generators for the degree-" + std::to_string(d) +
                      " component");
    }
    for (std::size_t j = 0; j < col_info.size(); ++j) {
      if ((*solution)[j] == 0) continue;
      coords[col_info[j].first] += (*solution)[j] * col_info[j].second;
    }
  }
  return coords;
}

const std::vector<Polynomial>& StructureConstants::at(std::size_t i, std::size_t j) const {
  auto key = std::minmax(i, j);
  auto it = table.find(std::make_pair(key.first, key.second));
  if (it == table.end()) throw Error(Errc::BadArgument, "no such generator pair");
  return it->second;
}

StructureConstants structure_constants(const CongruenceSystem& sys, const GeneratorSet& gens,
                                       int degree_bound) {
  require_validated(sys);
  if (2 * gens.max_degree() > degree_bound) {
    throw Error(Errc::BadArgument,
                "degree bound too small: products reach degree " +
                    std::to_string(2 * gens.max_degree()));
  }
  StructureConstants out;
  for (std::size_t i = 0; i < gens.generators.size(); ++i) {
    for (std::size_t j = i; j < gens.generators.size(); ++j) {
      ClassTuple prod = tuple_product(gens.generators[i].cls, gens.generators[j].cls);
      out.table.emplace(std::make_pair(i, j), module_coordinates(sys, gens, prod));
    }
  }
  return out;
}

std::vector<std::size_t> ordinary_betti(const CongruenceSystem& sys, int degree_bound,
                                        BettiMode mode,
                                        const std::optional<FiniteMatrixGroup>& group) {
  require_validated(sys);
  if (mode == BettiMode::Weyl) {
    if (!group) throw Error(Errc::BadArgument, "weyl mode needs a group");
    if (group->rank() != sys.rank()) throw Error(Errc::RankMismatch, "group acts in the wrong rank");
  }

  const std::size_t r = sys.rank();
  std::vector<DegreeSlice> slices;
  slices.reserve(static_cast<std::size_t>(degree_bound) + 1);
  for (int d = 0; d <= degree_bound; ++d) slices.push_back(solve_degree(sys, d));

  std::vector<std::vector<Polynomial>> diag(static_cast<std::size_t>(degree_bound) + 1);
  for (int e = 1; e <= degree_bound; ++e) {
    if (mode == BettiMode::Full) {
      for (const auto& exp : monomials_of_degree(r, e)) {
        Polynomial mono(r);
        mono.add_term(exp, Rat(1));
        diag[static_cast<std::size_t>(e)].push_back(std::move(mono));
      }
    } else {
      diag[static_cast<std::size_t>(e)] = invariant_basis(*group, e);
    }
  }

  std::vector<std::size_t> betti;
  betti.reserve(static_cast<std::size_t>(degree_bound) + 1);
  for (int d = 0; d <= degree_bound; ++d) {
    RowReducer reducer(tuple_space_dimension(sys, d));
    for (int e = 1; e <= d; ++e) {
      for (const auto& p : diag[static_cast<std::size_t>(e)]) {
        for (const auto& h : slices[static_cast<std::size_t>(d - e)].tuples) {
          reducer.add(tuple_coefficients(sys, tuple_scale(p, h), d));
        }
      }
    }
    std::size_t hd = slices[static_cast<std::size_t>(d)].vectors.size();
    std::size_t id = reducer.rank();
    betti.push_back(hd >= id ? hd - id : 0);
  }
  return betti;
}

}  // namespace gkm
