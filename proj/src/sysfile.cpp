#include "gkm/sysfile.hpp"

#include <fstream>

namespace gkm {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json matrix_to_json(const WeylElement& w) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : w.m) rows.push_back(row);
  return rows;
}

WeylElement matrix_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) {
    throw Error(Errc::ParseError, where + ": expected a nonempty matrix");
  }
  WeylElement w;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != j.size()) {
      throw Error(Errc::ParseError, where + ": matrix is not square");
    }
    std::vector<long long> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw Error(Errc::ParseError, where + ": non-integer entry");
      r.push_back(x.get<long long>());
    }
    w.m.push_back(std::move(r));
  }
  return w;
}

Weight weight_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) throw Error(Errc::ParseError, where + ": expected an integer list");
  Weight w;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(Errc::ParseError, where + ": non-integer entry");
    w.c.push_back(x.get<long long>());
  }
  return w;
}

}  // namespace

nlohmann::ordered_json system_to_json(const CongruenceSystem& sys) {
  ordered_json doc;
  doc["rank"] = sys.rank();

  ordered_json vertices = ordered_json::array();
  for (const auto& v : sys.vertices()) {
    ordered_json jv;
    jv["id"] = v.id;
    jv["moment"] = v.moment.c;
    ordered_json iso = ordered_json::array();
    for (const auto& g : v.isotropy.generator_elements()) iso.push_back(matrix_to_json(g));
    jv["isotropy"] = iso;
    vertices.push_back(std::move(jv));
  }
  doc["vertices"] = std::move(vertices);

  ordered_json congruences = ordered_json::array();
  for (const auto& cons : sys.constraints()) {
    ordered_json jc;
    ordered_json terms = ordered_json::array();
    for (const auto& term : cons.terms) {
      ordered_json jt;
      jt["coeff"] = rat_to_string(term.coeff);
      jt["vertex"] = term.vertex;
      if (term.twist) jt["twist"] = matrix_to_json(*term.twist);
      terms.push_back(std::move(jt));
    }
    jc["terms"] = std::move(terms);
    jc["modulus"] = cons.modulus.c;
    jc["order"] = cons.order;
    congruences.push_back(std::move(jc));
  }
  doc["congruences"] = std::move(congruences);

  ordered_json classes = ordered_json::object();
  for (const auto& [name, cls] : sys.named_classes()) {
    ordered_json jm = ordered_json::object();
    for (const auto& [vid, f] : cls.parts()) jm[vid] = f.str();
    classes[name] = std::move(jm);
  }
  doc["classes"] = std::move(classes);
  return doc;
}

CongruenceSystem system_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(Errc::ParseError, "system file: expected a JSON object");
  if (!doc.contains("rank") || !doc["rank"].is_number_integer()) {
    throw Error(Errc::ParseError, "system file: missing integer field \"rank\"");
  }
  const std::size_t rank = doc["rank"].get<std::size_t>();
  CongruenceSystem sys(rank);

  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw Error(Errc::ParseError, "system file: missing list field \"vertices\"");
  }
  for (const auto& jv : doc["vertices"]) {
    Vertex v;
    if (!jv.contains("id") || !jv["id"].is_string()) {
      throw Error(Errc::ParseError, "vertex: missing string field \"id\"");
    }
    v.id = jv["id"].get<std::string>();
    v.moment = weight_from_json(jv.value("moment", nlohmann::json::array()),
                                "vertex \"" + v.id + "\" moment");
    std::vector<WeylElement> gens;
    if (jv.contains("isotropy")) {
      if (!jv["isotropy"].is_array()) {
        throw Error(Errc::ParseError, "vertex \"" + v.id + "\": isotropy must be a matrix list");
      }
      for (const auto& jm : jv["isotropy"]) {
        gens.push_back(matrix_from_json(jm, "vertex \"" + v.id + "\" isotropy"));
      }
    }
    v.isotropy = gens.empty() ? FiniteMatrixGroup::trivial(rank) : generate_group(gens);
    sys.add_vertex(std::move(v));
  }

  if (doc.contains("congruences")) {
    if (!doc["congruences"].is_array()) {
      throw Error(Errc::ParseError, "system file: \"congruences\" must be a list");
    }
    for (const auto& jc : doc["congruences"]) {
      CongruenceConstraint cons;
      if (!jc.contains("terms") || !jc["terms"].is_array()) {
        throw Error(Errc::ParseError, "congruence: missing list field \"terms\"");
      }
      for (const auto& jt : jc["terms"]) {
        ConstraintTerm term;
        if (!jt.contains("coeff") || !jt["coeff"].is_string()) {
          throw Error(Errc::ParseError, "congruence term: \"coeff\" must be a rational string");
        }
        term.coeff = rat_from_string(jt["coeff"].get<std::string>());
        if (!jt.contains("vertex") || !jt["vertex"].is_string()) {
          throw Error(Errc::ParseError, "congruence term: missing string field \"vertex\"");
        }
        term.vertex = jt["vertex"].get<std::string>();
        if (jt.contains("twist")) term.twist = matrix_from_json(jt["twist"], "congruence twist");
        cons.terms.push_back(std::move(term));
      }
      cons.modulus = weight_from_json(jc.value("modulus", nlohmann::json::array()),
                                      "congruence modulus");
      if (!jc.contains("order") || !jc["order"].is_number_integer()) {
        throw Error(Errc::ParseError, "congruence: missing integer field \"order\"");
      }
      cons.order = jc["order"].get<int>();
      sys.add_constraint(std::move(cons));
    }
  }

  if (doc.contains("classes")) {
    if (!doc["classes"].is_object()) {
      throw Error(Errc::ParseError, "system file: \"classes\" must be an object");
    }
    for (const auto& [name, jm] : doc["classes"].items()) {
      if (!jm.is_object()) {
        throw Error(Errc::ParseError, "class \"" + name + "\": expected vertex -> polynomial map");
      }
      ClassTuple cls;
      for (const auto& [vid, jf] : jm.items()) {
        if (!jf.is_string()) {
          throw Error(Errc::ParseError, "class \"" + name + "\" at \"" + vid +
                                            "\": expected a polynomial string");
        }
        try {
          cls.set(vid, parse_polynomial(jf.get<std::string>(), rank));
        } catch (const Error& e) {
          throw Error(e.code(), "class \"" + name + "\" at \"" + vid + "\": " + e.what(),
                      e.position());
        }
      }
      sys.add_class(name, std::move(cls));
    }
  }
  return sys;
}

void write_system_file(const CongruenceSystem& sys, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::BadArgument, "cannot write \"" + path + "\"");
  out << system_to_json(sys).dump(2) << "\n";
}

std::pair<CongruenceSystem, ValidationReport> read_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadArgument, "cannot read \"" + path + "\"");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::ParseError, std::string("\"") + path + "\": " + e.what());
  }
  CongruenceSystem sys = system_from_json(doc);
  ValidationReport report = validate_system(sys);
  return {std::move(sys), std::move(report)};
}

}  // namespace gkm
