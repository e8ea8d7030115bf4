#include "gkm/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gkm/builders.hpp"
#include "gkm/ring.hpp"
#include "gkm/sysfile.hpp"

namespace gkm {

namespace {

using ordered_json = nlohmann::ordered_json;

Weight parse_weight_csv(const std::string& text) {
  Weight w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      w.c.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw Error(Errc::BadArgument, "expected comma-separated integers, got \"" + text + "\"");
    }
  }
  if (w.c.empty()) throw Error(Errc::BadArgument, "empty weight \"" + text + "\"");
  return w;
}

/// The group generated by everything the system itself names: isotropy
/// generators and constraint twists. This is the Weyl group for every
/// instance shipped by `example`.
FiniteMatrixGroup derived_group(const CongruenceSystem& sys) {
  std::vector<WeylElement> gens;
  auto push = [&](const WeylElement& w) {
    if (w.is_identity()) return;
    if (std::find(gens.begin(), gens.end(), w) == gens.end()) gens.push_back(w);
  };
  for (const auto& v : sys.vertices()) {
    for (const auto& g : v.isotropy.generator_elements()) push(g);
  }
  for (const auto& cons : sys.constraints()) {
    for (const auto& term : cons.terms) {
      if (term.twist) push(*term.twist);
    }
  }
  if (gens.empty()) return FiniteMatrixGroup::trivial(sys.rank());
  return generate_group(gens);
}

CongruenceSystem load_system(const std::string& path, std::ostream& err, int& exit_code) {
  auto [sys, report] = read_system_file(path);
  if (!report.ok()) {
    for (const auto& e : report.errors) err << "error: " << e << "\n";
    exit_code = 1;
  }
  return std::move(sys);
}

std::vector<std::size_t> trim_trailing_zeros(std::vector<std::size_t> v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
  return v;
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(v[i]);
  }
  return out;
}

std::string join_longs(const std::vector<long long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(v[i]);
  }
  return out;
}

ordered_json class_to_json(const ClassTuple& cls) {
  ordered_json out = ordered_json::object();
  for (const auto& [vid, f] : cls.parts()) out[vid] = f.str();
  return out;
}

ordered_json generators_to_json(const GeneratorSet& gens) {
  ordered_json list = ordered_json::array();
  for (std::size_t i = 0; i < gens.generators.size(); ++i) {
    const auto& g = gens.generators[i];
    ordered_json jg;
    jg["index"] = i;
    jg["degree"] = g.degree;
    jg["cohomologicalDegree"] = 2 * g.degree;
    jg["class"] = class_to_json(g.cls);
    list.push_back(std::move(jg));
  }
  return list;
}

ordered_json freeness_to_json(const FreenessVerdict& fv) {
  ordered_json out;
  out["verdict"] = fv.pass ? "PASS" : "FAIL";
  out["b"] = fv.numerator;
  out["throughDegree"] = fv.through_degree;
  out["warnings"] = fv.warnings;
  return out;
}

ordered_json violation_to_json(const Violation& v) {
  ordered_json out;
  out["kind"] = v.kind == Violation::Kind::Invariance ? "invariance" : "congruence";
  if (v.kind == Violation::Kind::Invariance) {
    out["vertex"] = v.vertex_id;
  } else {
    out["constraint"] = v.constraint_index;
  }
  out["witness"] = v.witness.str();
  out["message"] = v.message;
  return out;
}

struct CommandContext {
  std::ostream& out;
  std::ostream& err;
  bool json = false;

  void emit(const ordered_json& doc) const { out << doc.dump(2) << "\n"; }
};

int cmd_validate(const CommandContext& ctx, const std::string& file) {
  auto [sys, report] = read_system_file(file);
  (void)sys;
  if (ctx.json) {
    ordered_json doc;
    doc["command"] = "validate";
    doc["file"] = file;
    doc["valid"] = report.ok();
    doc["errors"] = report.errors;
    doc["warnings"] = report.warnings;
    doc["notes"] = report.notes;
    ctx.emit(doc);
  } else {
    for (const auto& m : report.errors) ctx.out << "error: " << m << "\n";
    for (const auto& m : report.warnings) ctx.out << "warning: " << m << "\n";
    for (const auto& m : report.notes) ctx.out << "note: " << m << "\n";
    ctx.out << (report.ok() ? "valid" : "invalid") << "\n";
  }
  return report.ok() ? 0 : 1;
}

int cmd_hilbert(const CommandContext& ctx, const std::string& file, int bound) {
  int code = 0;
  CongruenceSystem sys = load_system(file, ctx.err, code);
  if (code) return code;
  HilbertData data = hilbert_series(sys, bound);
  if (ctx.json) {
    ordered_json doc;
    doc["command"] = "hilbert";
    doc["file"] = file;
    doc["D"] = bound;
    doc["dims"] = data.dims;
    ctx.emit(doc);
  } else {
    ctx.out << "D = " << bound << "\n" << join_sizes(data.dims) << "\n";
  }
  return 0;
}

int cmd_generators(const CommandContext& ctx, const std::string& file, int bound,
                   const std::string& over) {
  int code = 0;
  CongruenceSystem sys = load_system(file, ctx.err, code);
  if (code) return code;

  MinimalGenerators mg;
  std::size_t group_order = 0;
  if (over == "invariants") {
    FiniteMatrixGroup g = derived_group(sys);
    group_order = g.order();
    mg = minimal_generators(sys, bound, CoefficientRing::Invariants, g);
  } else {
    mg = minimal_generators(sys, bound, CoefficientRing::FullRing);
  }

  if (ctx.json) {
    ordered_json doc;
    doc["command"] = "generators";
    doc["file"] = file;
    doc["D"] = bound;
    doc["over"] = over;
    if (over == "invariants") doc["groupOrder"] = group_order;
    doc["freeness"] = freeness_to_json(mg.freeness);
    doc["betti"] = mg.generators.betti;
    doc["generators"] = generators_to_json(mg.generators);
    ctx.emit(doc);
  } else {
    ctx.out << "D = " << bound << "\n";
    ctx.out << "over = " << over;
    if (over == "invariants") ctx.out << " (group order " << group_order << ")";
    ctx.out << "\n";
    for (const auto& w : mg.freeness.warnings) ctx.out << "warning: " << w << "\n";
    ctx.out << "freeness: " << (mg.freeness.pass ? "PASS" : "FAIL") << " (verified through degree "
            << mg.freeness.through_degree << ")\n";
    ctx.out << "b(t): " << join_longs(mg.freeness.numerator) << "\n";
    for (std::size_t i = 0; i < mg.generators.generators.size(); ++i) {
      const auto& g = mg.generators.generators[i];
      ctx.out << "e" << i << " (cohomological degree " << 2 * g.degree << "):";
      for (const auto& [vid, f] : g.cls.parts()) ctx.out << " " << vid << "=" << f.str();
      ctx.out << "\n";
    }
  }
  return 0;
}

int cmd_betti(const CommandContext& ctx, const std::string& file, int bound,
              const std::string& mode) {
  int code = 0;
  CongruenceSystem sys = load_system(file, ctx.err, code);
  if (code) return code;

  std::vector<std::size_t> betti;
  std::size_t group_order = 0;
  if (mode == "weyl") {
    FiniteMatrixGroup g = derived_group(sys);
    group_order = g.order();
    betti = ordinary_betti(sys, bound, BettiMode::Weyl, g);
  } else {
    betti = ordinary_betti(sys, bound, BettiMode::Full);
  }
  betti = trim_trailing_zeros(std::move(betti));

  if (ctx.json) {
    ordered_json doc;
    doc["command"] = "betti";
    doc["file"] = file;
    doc["D"] = bound;
    doc["mode"] = mode;
    if (mode == "weyl") doc["groupOrder"] = group_order;
    doc["betti"] = betti;
    ctx.emit(doc);
  } else {
    ctx.out << "D = " << bound << " (cohomological degrees 0.." << 2 * (betti.size() - 1) << ")\n";
    ctx.out << join_sizes(betti) << "\n";
  }
  return 0;
}

int cmd_check(const CommandContext& ctx, const std::string& file, const std::string& name) {
  int code = 0;
  CongruenceSystem sys = load_system(file, ctx.err, code);
  if (code) return code;
  const ClassTuple* cls = sys.named_class(name);
  if (!cls) throw Error(Errc::BadArgument, "no class named \"" + name + "\" in " + file);
  SatisfiesResult res = satisfies(sys, *cls);

  if (ctx.json) {
    ordered_json doc;
    doc["command"] = "check";
    doc["file"] = file;
    doc["class"] = name;
    doc["satisfied"] = res.ok;
    ordered_json violations = ordered_json::array();
    if (res.violation) violations.push_back(violation_to_json(*res.violation));
    doc["violations"] = violations;
    ctx.emit(doc);
  } else {
    if (res.ok) {
      ctx.out << "satisfied\n";
    } else {
      ctx.out << "violated: " << res.violation->message << "\n";
    }
  }
  return res.ok ? 0 : 1;
}

int cmd_coords(const CommandContext& ctx, const std::string& file, const std::string& name,
               int bound) {
  int code = 0;
  CongruenceSystem sys = load_system(file, ctx.err, code);
  if (code) return code;
  const ClassTuple* cls = sys.named_class(name);
  if (!cls) throw Error(Errc::BadArgument, "no class named \"" + name + "\" in " + file);

  MinimalGenerators mg = minimal_generators(sys, bound, CoefficientRing::FullRing);
  std::vector<Polynomial> coords = module_coordinates(sys, mg.generators, *cls);

  if (ctx.json) {
    ordered_json doc;
    doc["command"] = "coords";
    doc["file"] = file;
    doc["class"] = name;
    doc["D"] = bound;
    ordered_json list = ordered_json::array();
    for (std::size_t i = 0; i < coords.size(); ++i) {
      ordered_json jc;
      jc["generator"] = i;
      jc["generatorDegree"] = mg.generators.generators[i].degree;
      jc["coefficient"] = coords[i].str();
      list.push_back(std::move(jc));
    }
    doc["coords"] = list;
    doc["generators"] = generators_to_json(mg.generators);
    ctx.emit(doc);
  } else {
    ctx.out << "D = " << bound << "\n";
    for (std::size_t i = 0; i < coords.size(); ++i) {
      ctx.out << "e" << i << " (cohomological degree " << 2 * mg.generators.generators[i].degree
              << "): " << coords[i].str() << "\n";
    }
  }
  return 0;
}

int cmd_mult(const CommandContext& ctx, const std::string& file, int bound) {
  int code = 0;
  CongruenceSystem sys = load_system(file, ctx.err, code);
  if (code) return code;

  MinimalGenerators mg = minimal_generators(sys, bound, CoefficientRing::FullRing);
  StructureConstants sc = structure_constants(sys, mg.generators, bound);

  if (ctx.json) {
    ordered_json doc;
    doc["command"] = "mult";
    doc["file"] = file;
    doc["D"] = bound;
    doc["generators"] = generators_to_json(mg.generators);
    ordered_json table = ordered_json::array();
    for (const auto& [key, coords] : sc.table) {
      ordered_json entry;
      entry["i"] = key.first;
      entry["j"] = key.second;
      ordered_json list = ordered_json::array();
      for (const auto& f : coords) list.push_back(f.str());
      entry["coords"] = list;
      table.push_back(std::move(entry));
    }
    doc["table"] = table;
    ctx.emit(doc);
  } else {
    ctx.out << "D = " << bound << "\n";
    for (const auto& [key, coords] : sc.table) {
      ctx.out << "e" << key.first << "*e" << key.second << " =";
      bool some = false;
      for (std::size_t k = 0; k < coords.size(); ++k) {
        if (coords[k].is_zero()) continue;
        ctx.out << (some ? " + " : " ") << "(" << coords[k].str() << ")*e" << k;
        some = true;
      }
      if (!some) ctx.out << " 0";
      ctx.out << "\n";
    }
  }
  return 0;
}

int cmd_example(const CommandContext& ctx, const std::string& name, const std::string& output,
                const std::string& root_system_name, const std::string& weight_csv,
                const std::string& chi_csv) {
  CongruenceSystem sys(1);
  if (name == "conics") {
    sys = build_complete_conics();
  } else if (name == "coadjoint") {
    RootSystemData rs = root_system(root_system_id_from_string(root_system_name));
    Weight lambda;
    if (!weight_csv.empty()) {
      lambda = parse_weight_csv(weight_csv);
    } else {
      switch (rs.id) {
        case RootSystemId::A1: lambda = Weight{1}; break;
        case RootSystemId::A1xA1: lambda = Weight{1, 1}; break;
        case RootSystemId::A2: lambda = Weight{1, 1}; break;
        case RootSystemId::B2: lambda = Weight{2, 1}; break;
        case RootSystemId::G2: lambda = Weight{5, 3}; break;
      }
    }
    sys = build_coadjoint_orbit(rs, lambda);
  } else {
    Weight chi = chi_csv.empty() ? Weight{1} : parse_weight_csv(chi_csv);
    if (name == "p1") {
      sys = build_p1_example(chi);
    } else if (name == "ruled") {
      sys = build_ruled_example(chi);
    } else if (name == "pv") {
      sys = build_pv_example(chi);
    } else {
      throw Error(Errc::BadArgument, "unknown example \"" + name + "\"");
    }
  }
  write_system_file(sys, output);
  if (ctx.json) {
    ordered_json doc;
    doc["command"] = "example";
    doc["name"] = name;
    doc["output"] = output;
    ctx.emit(doc);
  } else {
    ctx.out << "wrote " << output << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact calculator for congruence-presented equivariant cohomology rings"};
  app.name("gkm");
  app.fallthrough();
  app.require_subcommand(1);

  bool json = false;
  app.add_flag("--json", json, "emit one machine-readable JSON document");

  std::string file, class_name = "sigma";
  int bound = kDefaultDegreeBound;
  std::string over = "sym", mode = "full";

  auto* validate = app.add_subcommand("validate", "check a system file and report problems");
  validate->add_option("file", file, "system file")->required();

  auto* hilbert = app.add_subcommand("hilbert", "graded dimensions of the solution algebra");
  hilbert->add_option("file", file, "system file")->required();
  hilbert->add_option("-D,--degree-bound", bound, "truncation degree (polynomial degree)")
      ->capture_default_str()->check(CLI::NonNegativeNumber);

  auto* generators =
      app.add_subcommand("generators", "minimal generators and a truncated freeness certificate");
  generators->add_option("file", file, "system file")->required();
  generators->add_option("-D,--degree-bound", bound, "truncation degree")->capture_default_str()->check(CLI::NonNegativeNumber);
  generators->add_option("--over", over, "module coefficients: sym | invariants")
      ->check(CLI::IsMember({"sym", "invariants"}))
      ->capture_default_str();

  auto* betti = app.add_subcommand("betti", "ordinary-cohomology Betti numbers");
  betti->add_option("file", file, "system file")->required();
  betti->add_option("-D,--degree-bound", bound, "truncation degree")->capture_default_str()->check(CLI::NonNegativeNumber);
  betti->add_option("--mode", mode, "quotient by all diagonal polynomials (full) or invariants (weyl)")
      ->check(CLI::IsMember({"full", "weyl"}))
      ->capture_default_str();

  auto* check = app.add_subcommand("check", "test a named class against the system");
  check->add_option("file", file, "system file")->required();
  check->add_option("--class", class_name, "class name")->required();

  auto* coords = app.add_subcommand("coords", "module coordinates of a named class");
  coords->add_option("file", file, "system file")->required();
  coords->add_option("--class", class_name, "class name")->required();
  coords->add_option("-D,--degree-bound", bound, "truncation degree")->capture_default_str()->check(CLI::NonNegativeNumber);

  auto* mult = app.add_subcommand("mult", "structure constants of the generator products");
  mult->add_option("file", file, "system file")->required();
  mult->add_option("-D,--degree-bound", bound, "truncation degree")->capture_default_str()->check(CLI::NonNegativeNumber);

  std::string example_name, output, root_system_name = "A2", weight_csv, chi_csv;
  auto* example = app.add_subcommand("example", "write a built-in instance to a system file");
  example->add_option("name", example_name, "p1 | coadjoint | conics | ruled | pv")
      ->required()
      ->check(CLI::IsMember({"p1", "coadjoint", "conics", "ruled", "pv"}));
  example->add_option("-o,--output", output, "output file")->required();
  example->add_option("--root-system", root_system_name, "coadjoint: A1 | A1xA1 | A2 | B2 | G2")
      ->check(CLI::IsMember({"A1", "A1xA1", "A2", "B2", "G2"}))
      ->capture_default_str();
  example->add_option("--weight", weight_csv, "coadjoint: comma-separated weight coordinates");
  example->add_option("--chi", chi_csv, "p1/ruled/pv: comma-separated modulus coordinates");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  CommandContext ctx{out, err, json};
  try {
    if (!example->parsed() && !file.empty() && !std::filesystem::exists(file)) {
      err << "usage error: no such file \"" << file << "\"\n";
      return 2;
    }
    if (validate->parsed()) return cmd_validate(ctx, file);
    if (hilbert->parsed()) return cmd_hilbert(ctx, file, bound);
    if (generators->parsed()) return cmd_generators(ctx, file, bound, over);
    if (betti->parsed()) return cmd_betti(ctx, file, bound, mode);
    if (check->parsed()) return cmd_check(ctx, file, class_name);
    if (coords->parsed()) return cmd_coords(ctx, file, class_name, bound);
    if (mult->parsed()) return cmd_mult(ctx, file, bound);
    if (example->parsed()) {
      return cmd_example(ctx, example_name, output, root_system_name, weight_csv, chi_csv);
    }
  } catch (const Error& e) {
    err << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace gkm
