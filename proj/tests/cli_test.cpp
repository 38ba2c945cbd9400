#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "eqhirz/cli/corpus.hpp"
#include "eqhirz/cli/expression.hpp"
#include "eqhirz/cli/run.hpp"
#include "eqhirz/error.hpp"
#include "eqhirz/hirz/local_classes.hpp"
#include "eqhirz/hirz/toric.hpp"
#include "cone_catalog.hpp"
#include "support.hpp"

using namespace testsupport;
using namespace eqhirz::cli;
namespace fs = std::filesystem;

namespace {

fs::path corpusDir() { return fs::path(EQHIRZ_SOURCE_DIR) / "corpus"; }

std::string readText(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

fs::path scratchDir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("eqhirz_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

RunResult run(const std::string& text, const std::string& command = "") { return runJobText(text, command, {}); }

}  // namespace

TEST_CASE("class text round trips through the parser in both bases") {
  RandomClasses rng(11);
  for (int i = 0; i < 200; ++i) {
    ClassFraction c = rng.fraction();
    for (auto b : {CoeffBasis::Delta, CoeffBasis::Y}) {
      std::string s = formatClass(c, b);
      CAPTURE(s);
      CHECK(parseClass(s, 2) == c);
    }
  }
  CHECK(parseClass("1/(1 - T[1])^2", 1) == parseClass("1/((1 - T[1])*(1 - T[1]))", 1));
  CHECK(parseClass("y", 0) == parseClass("-1 - d", 0));
}

TEST_CASE("class documents round trip exactly") {
  RandomClasses rng(12);
  for (int i = 0; i < 200; ++i) {
    ClassFraction c = rng.fraction();
    Json j = classToJson(c);
    ClassFraction back = classFromJson(Field(j, ""));
    CHECK(back == c);
    CHECK(classToJson(back).dump() == j.dump());
  }
}

TEST_CASE("expression errors carry a column") {
  auto message = [](const std::string& text) {
    try {
      parseClass(text, 2);
    } catch (const eqhirz::InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("1 + T[1,0") == "column 10: expected ']'");
  CHECK(message("T[1]") == "column 1: character [1] does not have rank 2");
  CHECK(message("1/(1 - T[1,0] - T[0,1])") == "column 3: divisor is not a monomial or a binomial");
  CHECK(message("2 $") == "column 3: unexpected '$'");
  CHECK(message("1/(T[1,0] - T[1,0])") == "column 3: division by zero");
}

TEST_CASE("jobs are deterministic") {
  for (const auto& name : {"positivity_grassmannian_cell", "fan_hirzebruch_surface", "whitney_umbrella",
                           "snc_log_class", "residue_auxiliary_character"}) {
    std::string text = readText(corpusDir() / (std::string(name) + ".json"));
    RunResult a = run(text), b = run(text);
    CAPTURE(name);
    CHECK(a.exitCode == kOk);
    CHECK(a.output == b.output);
    for (auto f : {OutputFormat::Text, OutputFormat::Json}) {
      RunOptions o;
      o.format = f;
      CHECK(runJobText(text, "", o).output == runJobText(text, "", o).output);
    }
  }
}

TEST_CASE("json output is a versioned document") {
  RunOptions o;
  o.format = OutputFormat::Json;
  RunResult r = runJobText(readText(corpusDir() / "chi_projective_line.json"), "", o);
  REQUIRE(r.exitCode == kOk);
  Json j = Json::parse(r.output);
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["command"] == "chi");
  CHECK(coeffFromJson(Field(j["chi"]["value"], "/chi/value")) == parseCoeff("1 - y"));
  CHECK(j["chi"]["text"] == "1 - y");
}

TEST_CASE("exit codes and error locations") {
  RunResult r = run(R"({"command": "toric", "rank": 2, "cone": {"rays": [[1, 0], [0, 1]], "side": "sideways"}})");
  CHECK(r.exitCode == kInputError);
  CHECK(r.error == R"(input error: /cone/side: expected one of "primal", "dual")");

  r = run(R"({"command": "toric", "rank": 2, "cone": {"rays": [[1, 0]], "side": "dual"}, "colour": 1})");
  CHECK(r.exitCode == kInputError);
  CHECK(r.error.find("/colour") != std::string::npos);

  r = run(R"j({"command": "chi", "rank": 1, "points": [{"weights": [[1]]}, {"class": "(1 + y*T[-1])/(1 - T[-1])"}]})j");
  CHECK(r.exitCode == kOk);

  r = run(R"({"command": "chi", "rank": 1, "points": [{"class": "1 + T[1"}]})");
  CHECK(r.exitCode == kInputError);
  CHECK(r.error == "input error: /points/0/class: column 8: expected ']'");

  r = run("{\"command\": ");
  CHECK(r.exitCode == kInputError);

  r = run(R"({"command": "chi", "rank": 1})", "toric");
  CHECK(r.exitCode == kInputError);

  r = run(R"({"command": "chi", "rank": 1, "points": [{"weights": [[1]]}]})");
  CHECK(r.exitCode == kMathError);
  CHECK(r.error.rfind("math error: ", 0) == 0);
  CHECK(r.output.empty());

  r = run(R"({"command": "solve", "rank": 1, "chi": "1 - y", "known": [], "denominator": [[0]]})");
  CHECK(r.exitCode == kInputError);
  CHECK(r.error.find("/denominator/0") != std::string::npos);
}

TEST_CASE("shipped corpus passes") {
  CorpusSummary s = runCorpus(corpusDir());
  CHECK(s.exitCode == 0);
  CHECK(s.rows.size() >= 40);
  for (const auto& row : s.rows) {
    CAPTURE(row.name);
    CHECK(row.pass);
  }
}

TEST_CASE("corpus runner: empty directory, mismatch diff, missing directory") {
  fs::path empty = scratchDir("empty");
  CorpusSummary e = runCorpus(empty);
  CHECK(e.rows.empty());
  CHECK(e.exitCode == 0);
  CHECK(e.table().find("0 passed, 0 failed") != std::string::npos);

  fs::path bad = scratchDir("bad");
  fs::copy_file(corpusDir() / "chi_projective_line.json", bad / "chi_projective_line.json");
  std::string expected = readText(corpusDir() / "chi_projective_line.expected");
  {
    std::ofstream out(bad / "chi_projective_line.expected", std::ios::binary);
    out << expected << "extra: line\n";
  }
  CorpusSummary m = runCorpus(bad);
  REQUIRE(m.rows.size() == 1);
  CHECK_FALSE(m.rows[0].pass);
  CHECK(m.exitCode == 1);
  CHECK(m.rows[0].detail == "-extra: line\n");
  CHECK(m.table().find("FAIL  chi_projective_line") != std::string::npos);

  fs::remove(bad / "chi_projective_line.expected");
  CorpusSummary missing = runCorpus(bad);
  REQUIRE(missing.rows.size() == 1);
  CHECK_FALSE(missing.rows[0].pass);

  CHECK_THROWS_AS(runCorpus(bad / "nowhere"), eqhirz::InputError);
  fs::remove_all(empty);
  fs::remove_all(bad);
}

TEST_CASE("line diff") {
  CHECK(lineDiff("a\nb\n", "a\nb\n").empty());
  CHECK(lineDiff("a\nb\n", "a\nc\n") == "-b\n+c\n");
  CHECK(lineDiff("a\n", "a\nb\n") == "+b\n");
  CHECK_FALSE(lineDiff("a\n", "a").empty());
}

TEST_CASE("the g24 complement job holds the complement of the toric class") {
  Json job = Json::parse(readText(corpusDir() / "positivity_g24_complement_rewrite.json"));
  Field f(job, "");
  std::vector<Character> weights = f.at("alphabet").asCharacters(4);
  CatalogCone g = g24Cone();
  ClassFraction space = eqhirz::hirz::sncLocalClass(4, 0, weights, eqhirz::hirz::SncVariant::Space);
  ClassFraction complement = space - eqhirz::hirz::toricLocalClass(g.cone(), g.lattice());
  CHECK(parseClass(f.at("class").asString(), 4) == complement);

  Json display = Json::parse(readText(corpusDir() / "positivity_g24_complement_display.json"));
  ClassFraction den = ClassFraction::one(4);
  for (const auto& w : weights) den *= S(w);
  CHECK(parseClass(display["polynomial"].get<std::string>(), 4) == complement * den);
}
