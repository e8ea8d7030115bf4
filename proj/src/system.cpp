#include "gkm/system.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gkm {

void ClassTuple::set(const std::string& vertex_id, Polynomial f) {
  parts_.insert_or_assign(vertex_id, std::move(f));
}

const Polynomial* ClassTuple::find(const std::string& vertex_id) const {
  auto it = parts_.find(vertex_id);
  return it == parts_.end() ? nullptr : &it->second;
}

std::optional<std::size_t> CongruenceSystem::vertex_index(const std::string& id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  return std::nullopt;
}

const ClassTuple* CongruenceSystem::named_class(const std::string& name) const {
  auto it = named_classes_.find(name);
  return it == named_classes_.end() ? nullptr : &it->second;
}

void CongruenceSystem::add_vertex(Vertex v) {
  validated_ = false;
  vertices_.push_back(std::move(v));
}

void CongruenceSystem::add_constraint(CongruenceConstraint c) {
  validated_ = false;
  constraints_.push_back(std::move(c));
}

void CongruenceSystem::add_class(const std::string& name, ClassTuple t) {
  named_classes_.insert_or_assign(name, std::move(t));
}

ValidationReport validate_system(CongruenceSystem& sys) {
  ValidationReport report;
  auto error = [&](const std::string& msg) { report.errors.push_back(msg); };

  if (sys.rank_ == 0) error("rank must be positive");

  std::set<std::string> ids;
  for (const auto& v : sys.vertices_) {
    if (!ids.insert(v.id).second) error("duplicate vertex id \"" + v.id + "\"");
    if (v.moment.size() != sys.rank_) {
      error("vertex \"" + v.id + "\": moment has length " + std::to_string(v.moment.size()) +
            ", expected " + std::to_string(sys.rank_));
      continue;
    }
    if (v.isotropy.order() == 0) {
      error("vertex \"" + v.id + "\": empty isotropy group (use the trivial group)");
      continue;
    }
    if (v.isotropy.rank() != sys.rank_) {
      error("vertex \"" + v.id + "\": isotropy acts in rank " + std::to_string(v.isotropy.rank()));
      continue;
    }
    for (const auto& g : v.isotropy.elements) {
      if (!g.is_unimodular()) {
        error("vertex \"" + v.id + "\": isotropy element is not unimodular");
        break;
      }
      if (!(g.apply(v.moment) == v.moment)) {
        error("vertex \"" + v.id + "\": isotropy does not fix the moment " + to_string(v.moment));
        break;
      }
    }
  }

  for (std::size_t k = 0; k < sys.constraints_.size(); ++k) {
    auto& cons = sys.constraints_[k];
    const std::string where = "constraint " + std::to_string(k);
    if (cons.terms.empty()) {
      error(where + ": no terms");
      continue;
    }
    bool bad = false;
    for (const auto& term : cons.terms) {
      if (!sys.vertex_index(term.vertex)) {
        error(where + ": unknown vertex \"" + term.vertex + "\"");
        bad = true;
      }
      if (term.twist) {
        if (term.twist->rank() != sys.rank_) {
          error(where + ": twist has rank " + std::to_string(term.twist->rank()));
          bad = true;
        } else if (!term.twist->is_unimodular()) {
          error(where + ": twist is not unimodular");
          bad = true;
        }
      }
    }
    if (cons.modulus.size() != sys.rank_) {
      error(where + ": modulus has length " + std::to_string(cons.modulus.size()));
      bad = true;
    }
    if (cons.order < 0) {
      error(where + ": negative order");
      bad = true;
    }
    if (bad) continue;

    if (cons.modulus.is_zero()) {
      if (cons.order > 0) {
        report.warnings.push_back(where +
                                  ": zero modulus with positive order rewritten as exact equality");
        cons.order = 0;
      } else {
        report.notes.push_back(where + ": exact-equality constraint (zero modulus)");
      }
    } else if (cons.order == 0) {
      report.notes.push_back(where + ": modulus " + to_string(cons.modulus) +
                             " dropped from exact-equality constraint");
      cons.modulus = Weight::zero(sys.rank_);
    } else {
      auto [prim, scale] = primitive_part(cons.modulus);
      if (scale != 1) {
        report.notes.push_back(where + ": modulus " + to_string(cons.modulus) +
                               " normalized to " + to_string(prim));
        cons.modulus = prim;
      }
    }
  }

  for (const auto& [name, cls] : sys.named_classes_) {
    for (const auto& v : sys.vertices_) {
      const Polynomial* f = cls.find(v.id);
      if (!f) {
        error("class \"" + name + "\": missing component for vertex \"" + v.id + "\"");
      } else if (f->rank() != sys.rank_) {
        error("class \"" + name + "\": component at \"" + v.id + "\" has wrong rank");
      }
    }
    for (const auto& [vid, f] : cls.parts()) {
      if (!sys.vertex_index(vid)) {
        error("class \"" + name + "\": component for unknown vertex \"" + vid + "\"");
      }
    }
  }

  sys.validated_ = report.ok();
  return report;
}

namespace {

void require_validated(const CongruenceSystem& sys) {
  if (!sys.is_validated()) {
    throw Error(Errc::BadArgument, "system must pass validate_system first");
  }
}

Polynomial combination_polynomial(const CongruenceSystem& sys, const CongruenceConstraint& cons,
                                  const ClassTuple& c) {
  Polynomial combo(sys.rank());
  for (const auto& term : cons.terms) {
    const Polynomial* f = c.find(term.vertex);
    Polynomial g = term.twist ? weyl_apply(*term.twist, *f) : *f;
    g *= term.coeff;
    combo += g;
  }
  return combo;
}

}  // namespace

SatisfiesResult satisfies(const CongruenceSystem& sys, const ClassTuple& c) {
  require_validated(sys);
  for (const auto& v : sys.vertices()) {
    const Polynomial* f = c.find(v.id);
    if (!f) throw Error(Errc::IncompleteTuple, "tuple has no component for vertex \"" + v.id + "\"");
    if (f->rank() != sys.rank()) {
      throw Error(Errc::RankMismatch, "tuple component at \"" + v.id + "\" has wrong rank");
    }
  }
  if (c.size() != sys.vertices().size()) {
    throw Error(Errc::IncompleteTuple, "tuple has components for unknown vertices");
  }

  for (const auto& v : sys.vertices()) {
    const Polynomial& f = *c.find(v.id);
    for (const auto& g : v.isotropy.generator_elements()) {
      Polynomial moved = weyl_apply(g, f);
      if (!(moved == f)) {
        Violation viol;
        viol.kind = Violation::Kind::Invariance;
        viol.vertex_id = v.id;
        viol.witness = f - moved;
        viol.message = "component at vertex \"" + v.id + "\" is not invariant under isotropy";
        return {false, viol};
      }
    }
  }

  for (std::size_t k = 0; k < sys.constraints().size(); ++k) {
    const auto& cons = sys.constraints()[k];
    Polynomial combo = combination_polynomial(sys, cons, c);
    bool ok;
    if (cons.order == 0 || cons.modulus.is_zero()) {
      ok = combo.is_zero();
    } else {
      auto ord = divisibility_order(combo, cons.modulus);
      ok = !ord.has_value() || *ord >= cons.order;
    }
    if (!ok) {
      Violation viol;
      viol.kind = Violation::Kind::Congruence;
      viol.constraint_index = k;
      viol.witness = combo;
      viol.message = "constraint " + std::to_string(k) + " fails: combination " + combo.str() +
                     (cons.order == 0 ? " is not zero"
                                      : " is not divisible by " + to_string(cons.modulus) + "^" +
                                            std::to_string(cons.order));
      return {false, viol};
    }
  }
  return {true, std::nullopt};
}

std::size_t tuple_space_dimension(const CongruenceSystem& sys, int degree) {
  return sys.vertices().size() * graded_piece(sys.rank(), degree).dimension();
}

RationalMatrix constraint_rows(const CongruenceSystem& sys, int degree) {
  require_validated(sys);
  const std::size_t r = sys.rank();
  const GradedPiece piece = graded_piece(r, degree);
  const std::size_t dim = piece.dimension();
  const std::size_t n = sys.vertices().size();
  const std::size_t cols = n * dim;

  std::vector<RatVec> rows;

  // (a) invariance rows: f_v - g(f_v) = 0 coefficient-wise.
  for (std::size_t vi = 0; vi < n; ++vi) {
    for (const auto& g : sys.vertices()[vi].isotropy.generator_elements()) {
      // Column block for unknown monomial e: coefficients of x^e - g(x^e).
      std::vector<RatVec> block(dim);
      for (std::size_t ei = 0; ei < dim; ++ei) {
        Polynomial mono(r);
        mono.add_term(piece.monomials[ei], Rat(1));
        Polynomial diff = mono - weyl_apply(g, mono);
        block[ei] = coefficient_vector(diff, piece);
      }
      for (std::size_t mu = 0; mu < dim; ++mu) {
        RatVec row(cols, Rat(0));
        bool nonzero = false;
        for (std::size_t ei = 0; ei < dim; ++ei) {
          if (block[ei][mu] == 0) continue;
          row[vi * dim + ei] = block[ei][mu];
          nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
  }

  // (b) congruence rows: after moving the modulus into first position, every
  // monomial with first-variable exponent below the order must vanish.
  for (const auto& cons : sys.constraints()) {
    const bool exact = cons.order == 0 || cons.modulus.is_zero();
    std::vector<Polynomial> images;
    if (!exact) {
      auto [fwd, inv] = extend_to_unimodular_basis_with_inverse(cons.modulus);
      images.reserve(r);
      for (std::size_t i = 0; i < r; ++i) {
        images.push_back(Polynomial::linear_form(Weight(inv.m[i])));
      }
    }
    // Accumulated contribution of each unknown (vertex, monomial) to the
    // combination polynomial, in the transformed variables.
    std::map<std::pair<std::size_t, std::size_t>, Polynomial> contrib;
    for (const auto& term : cons.terms) {
      std::size_t vi = *sys.vertex_index(term.vertex);
      for (std::size_t ei = 0; ei < dim; ++ei) {
        Polynomial mono(r);
        mono.add_term(piece.monomials[ei], Rat(1));
        Polynomial p = term.twist ? weyl_apply(*term.twist, mono) : mono;
        if (!exact) p = p.substitute(images);
        p *= term.coeff;
        auto key = std::make_pair(vi, ei);
        auto it = contrib.find(key);
        if (it == contrib.end()) {
          contrib.emplace(key, std::move(p));
        } else {
          it->second += p;
        }
      }
    }
    for (std::size_t mu = 0; mu < dim; ++mu) {
      if (!exact && piece.monomials[mu][0] >= cons.order) continue;
      RatVec row(cols, Rat(0));
      bool nonzero = false;
      for (const auto& [key, p] : contrib) {
        Rat coefficient = p.coefficient(piece.monomials[mu]);
        if (coefficient == 0) continue;
        row[key.first * dim + key.second] = coefficient;
        nonzero = true;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }

  return RationalMatrix::from_rows(std::move(rows), cols);
}

RatVec tuple_coefficients(const CongruenceSystem& sys, const ClassTuple& c, int degree) {
  const GradedPiece piece = graded_piece(sys.rank(), degree);
  RatVec out;
  out.reserve(tuple_space_dimension(sys, degree));
  for (const auto& v : sys.vertices()) {
    const Polynomial* f = c.find(v.id);
    if (!f) throw Error(Errc::IncompleteTuple, "tuple has no component for vertex \"" + v.id + "\"");
    Polynomial comp = f->homogeneous_component(degree);
    RatVec part = coefficient_vector(comp, piece);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

ClassTuple tuple_from_coefficients(const CongruenceSystem& sys, int degree, const RatVec& v) {
  const GradedPiece piece = graded_piece(sys.rank(), degree);
  const std::size_t dim = piece.dimension();
  if (v.size() != sys.vertices().size() * dim) {
    throw Error(Errc::BadArgument, "coefficient vector has wrong length");
  }
  ClassTuple out;
  for (std::size_t vi = 0; vi < sys.vertices().size(); ++vi) {
    RatVec slice(v.begin() + static_cast<std::ptrdiff_t>(vi * dim),
                 v.begin() + static_cast<std::ptrdiff_t>((vi + 1) * dim));
    out.set(sys.vertices()[vi].id, polynomial_from_coefficients(sys.rank(), piece, slice));
  }
  return out;
}

ClassTuple diagonal_tuple(const CongruenceSystem& sys, const Polynomial& f) {
  ClassTuple out;
  for (const auto& v : sys.vertices()) out.set(v.id, f);
  return out;
}

ClassTuple tuple_product(const ClassTuple& a, const ClassTuple& b) {
  ClassTuple out;
  for (const auto& [id, f] : a.parts()) {
    const Polynomial* g = b.find(id);
    if (!g) throw Error(Errc::IncompleteTuple, "tuple product: missing component \"" + id + "\"");
    out.set(id, f * *g);
  }
  return out;
}

ClassTuple tuple_scale(const Polynomial& f, const ClassTuple& a) {
  ClassTuple out;
  for (const auto& [id, g] : a.parts()) out.set(id, f * g);
  return out;
}

CongruenceSystem apply_basis_change(const CongruenceSystem& sys, const WeylElement& u) {
  if (u.rank() != sys.rank() || !u.is_unimodular()) {
    throw Error(Errc::BadArgument, "basis change must be unimodular of the system's rank");
  }
  WeylElement uinv = inverse_unimodular(u);
  CongruenceSystem out(sys.rank());
  for (const auto& v : sys.vertices()) {
    Vertex nv;
    nv.id = v.id;
    nv.moment = u.apply(v.moment);
    FiniteMatrixGroup iso;
    for (const auto& g : v.isotropy.elements) iso.elements.push_back(u * g * uinv);
    iso.generators = v.isotropy.generators;
    nv.isotropy = std::move(iso);
    out.add_vertex(std::move(nv));
  }
  for (const auto& cons : sys.constraints()) {
    CongruenceConstraint nc;
    nc.modulus = u.apply(cons.modulus);
    nc.order = cons.order;
    for (const auto& term : cons.terms) {
      ConstraintTerm nt;
      nt.coeff = term.coeff;
      nt.vertex = term.vertex;
      if (term.twist) nt.twist = u * *term.twist * uinv;
      nc.terms.push_back(std::move(nt));
    }
    out.add_constraint(std::move(nc));
  }
  for (const auto& [name, cls] : sys.named_classes()) {
    ClassTuple nt;
    for (const auto& [vid, f] : cls.parts()) nt.set(vid, weyl_apply(u, f));
    out.add_class(name, std::move(nt));
  }
  return out;
}

}  // namespace gkm
