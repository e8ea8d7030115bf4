#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gkm/cli.hpp"
#include "gkm/sysfile.hpp"

using namespace gkm;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "gkm-cli-tests";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("example files re-parse and re-serialize byte-identically") {
  fs::path dir = scratch_dir();
  for (const std::string name : {"p1", "coadjoint", "conics", "ruled", "pv"}) {
    fs::path file = dir / (name + ".json");
    RunResult made = run({"example", name, "-o", file.string()});
    CHECK(made.code == 0);

    auto [sys, report] = read_system_file(file.string());
    CHECK(report.ok());
    fs::path copy = dir / (name + "-copy.json");
    write_system_file(sys, copy.string());
    CHECK(slurp(file) == slurp(copy));
  }
}

TEST_CASE("validate: clean file exits 0, broken file exits 1") {
  fs::path dir = scratch_dir();
  fs::path file = dir / "validate-me.json";
  REQUIRE(run({"example", "conics", "-o", file.string()}).code == 0);

  RunResult ok = run({"validate", file.string()});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("valid") != std::string::npos);

  fs::path broken = dir / "broken.json";
  std::ofstream(broken) << R"({
    "rank": 1,
    "vertices": [{"id": "a", "moment": [0], "isotropy": []}],
    "congruences": [{"terms": [{"coeff": "1", "vertex": "missing"}],
                     "modulus": [1], "order": 1}],
    "classes": {}
  })";
  RunResult bad = run({"validate", broken.string()});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("missing") != std::string::npos);
}

TEST_CASE("hilbert output matches the worked example") {
  fs::path file = scratch_dir() / "p1.json";
  REQUIRE(run({"example", "p1", "-o", file.string()}).code == 0);
  RunResult res = run({"hilbert", file.string(), "-D", "3"});
  CHECK(res.code == 0);
  CHECK(res.out.find("1 2 2 2") != std::string::npos);
  CHECK(res.out.find("D = 3") != std::string::npos);
}

TEST_CASE("check reports satisfaction and violations") {
  fs::path dir = scratch_dir();
  fs::path file = dir / "conics-check.json";
  REQUIRE(run({"example", "conics", "-o", file.string()}).code == 0);

  RunResult good = run({"check", file.string(), "--class", "sigma"});
  CHECK(good.code == 0);
  CHECK(good.out.find("satisfied") != std::string::npos);

  // Break sigma in the file and watch it fail.
  nlohmann::json doc = nlohmann::json::parse(slurp(file));
  doc["classes"]["sigma"]["v0"] = "x1";
  fs::path edited = dir / "conics-edited.json";
  std::ofstream(edited) << doc.dump(2) << "\n";
  RunResult bad = run({"check", edited.string(), "--class", "sigma"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("violated") != std::string::npos);

  RunResult unknown = run({"check", file.string(), "--class", "tau"});
  CHECK(unknown.code == 1);
}

TEST_CASE("betti weyl mode on conics") {
  fs::path file = scratch_dir() / "conics-betti.json";
  REQUIRE(run({"example", "conics", "-o", file.string()}).code == 0);
  RunResult res = run({"betti", file.string(), "-D", "8", "--mode", "weyl"});
  CHECK(res.code == 0);
  CHECK(res.out.find("1 2 3 3 2 1") != std::string::npos);
}

TEST_CASE("json output carries the same numbers as the human output") {
  fs::path file = scratch_dir() / "a2.json";
  REQUIRE(run({"example", "coadjoint", "--root-system", "A2", "-o", file.string()}).code == 0);

  RunResult human = run({"hilbert", file.string(), "-D", "4"});
  RunResult machine = run({"hilbert", file.string(), "-D", "4", "--json"});
  CHECK(machine.code == 0);
  nlohmann::json doc = nlohmann::json::parse(machine.out);
  CHECK(doc["command"] == "hilbert");
  CHECK(doc["D"] == 4);
  CHECK(doc["dims"] == nlohmann::json({1, 4, 9, 15, 21}));
  CHECK(human.out.find("1 4 9 15 21") != std::string::npos);

  RunResult gens = run({"generators", file.string(), "-D", "5", "--json"});
  nlohmann::json gdoc = nlohmann::json::parse(gens.out);
  CHECK(gdoc["freeness"]["verdict"] == "PASS");
  CHECK(gdoc["betti"] == nlohmann::json({1, 2, 2, 1, 0, 0}));
  CHECK(gdoc["generators"].size() == 6);
  for (const auto& g : gdoc["generators"]) {
    CHECK(g.contains("degree"));
    CHECK(g.contains("class"));
  }

  RunResult checkres = run({"--json", "check", file.string(), "--class", "sigma"});
  nlohmann::json cdoc = nlohmann::json::parse(checkres.out);
  CHECK(cdoc["satisfied"] == true);
  CHECK(cdoc["violations"].empty());
}

TEST_CASE("coords and mult runs on the projective line") {
  fs::path file = scratch_dir() / "p1-coords.json";
  REQUIRE(run({"example", "p1", "-o", file.string()}).code == 0);

  RunResult coords = run({"coords", file.string(), "--class", "sigma", "-D", "4", "--json"});
  CHECK(coords.code == 0);
  nlohmann::json doc = nlohmann::json::parse(coords.out);
  REQUIRE(doc["coords"].size() == 2);
  CHECK(doc["coords"][0]["coefficient"] == "-x1");
  CHECK(doc["coords"][1]["coefficient"] == "2");

  RunResult mult = run({"mult", file.string(), "-D", "4"});
  CHECK(mult.code == 0);
  CHECK(mult.out.find("(x1)*e1") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"hilbert", "/no/such/file.json"}).code == 2);
  CHECK(run({"betti", "x.json", "--mode", "sideways"}).code == 2);
  CHECK(run({"example", "conics"}).code == 2);  // missing -o
}

TEST_CASE("malformed json is a validation error with a message") {
  fs::path file = scratch_dir() / "garbage.json";
  std::ofstream(file) << "{ this is not json";
  RunResult res = run({"validate", file.string()});
  CHECK(res.code == 1);
  CHECK(!res.err.empty());
}

TEST_CASE("custom weights and moduli flow through example generation") {
  fs::path dir = scratch_dir();
  fs::path wall = dir / "wall.json";
  REQUIRE(run({"example", "coadjoint", "--root-system", "A2", "--weight", "1,0", "-o",
               wall.string()})
              .code == 0);
  RunResult res = run({"betti", wall.string(), "-D", "4"});
  CHECK(res.out.find("1 1 1") != std::string::npos);

  fs::path p1r2 = dir / "p1-rank2.json";
  REQUIRE(run({"example", "p1", "--chi", "1,-1", "-o", p1r2.string()}).code == 0);
  RunResult h = run({"hilbert", p1r2.string(), "-D", "2"});
  CHECK(h.out.find("1 3 5") != std::string::npos);
}
