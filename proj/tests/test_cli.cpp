#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "schanuel/arith.hpp"
#include "schanuel/cli.hpp"

using namespace schanuel;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string l;
  while (std::getline(in, l)) out.push_back(l);
  return out;
}

// Value of a CSV metadata line "# key=value".
std::string meta(const std::string& csv, const std::string& key) {
  for (const auto& l : lines(csv)) {
    if (l.rfind("# " + key + "=", 0) == 0) return l.substr(key.size() + 3);
  }
  return {};
}

}  // namespace

TEST_CASE("config round trip") {
  RunConfig c;
  c.subcommand = "count-field";
  c.field = "-5";
  c.grid = {"1", "5/2"};
  c.tol = 1e-12;
  c.workers = 4;
  c.partition = "stride";
  c.seed = 99;
  c.zeta_bracket = true;
  CHECK(RunConfig::from_json(c.to_json()) == c);
  CHECK(RunConfig::from_json(RunConfig{}.to_json()) == RunConfig{});
  CHECK_THROWS_AS(RunConfig::from_json("[1]"), Error);
  CHECK_THROWS_AS(RunConfig::from_json(R"({"n": "three"})"), Error);
}

TEST_CASE("dry run prints the resolved config") {
  const Result r = invoke({"count-rational", "--n", "2", "--grid", "10,25/2", "--dry-run"});
  CHECK(r.code == 0);
  const RunConfig c = RunConfig::from_json(r.out);
  CHECK(c.subcommand == "count-rational");
  CHECK(c.n == 2);
  CHECK(c.grid == std::vector<std::string>{"10", "25/2"});
  CHECK(c.dry_run);
}

TEST_CASE("usage errors exit 2 with one line") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"no-such-command"},
           {"count-rational", "--grid", "2.5"},
           {"count-rational", "--workers", "0"},
           {"schanuel", "--field", "4"},
           {"schanuel", "--field", "mystery"},
           {"zeta", "--format", "xml"},
           {"count-field", "--n"}}) {
    const Result r = invoke(args);
    CAPTURE(r.err);
    CHECK(r.code == 2);
    CHECK(r.err.rfind("error: ", 0) == 0);
    CHECK(lines(r.err).size() == 1);
  }
  CHECK(invoke({"count-rational", "--grid", "2.5"}).err.rfind("error: ParseError:", 0) == 0);
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"schanuel", "--help"}).code == 0);
}

TEST_CASE("computation errors exit 1") {
  const Result r = invoke({"count-field", "--field", "5", "--grid", "3"});
  CHECK(r.code == 1);
  CHECK(r.err.rfind("error: UnsupportedClassNumber:", 0) == 0);
  const Result s = invoke({"ce-sum", "--n", "2"});
  CHECK(s.code == 1);
  CHECK(s.err.rfind("error: UnsupportedRegime:", 0) == 0);
  const Result q = invoke({"count-rational", "--grid", "1,2"});
  CHECK(q.code == 0);  // too few points for a fit: NaN exponent, still a report
  CHECK(meta(q.out, "fitted_error_exponent") == "nan");
}

TEST_CASE("schanuel over Q") {
  const Result r = invoke({"schanuel", "--field", "Q", "--n", "2"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[2] == "quantity,value_mid,value_rad,tail_bound,provenance");
  CHECK(ls[3].rfind("S_K(2),3.32762", 0) == 0);
  CHECK(ls[3].find(",computed") != std::string::npos);
}

TEST_CASE("count-rational report") {
  const Result r = invoke({"count-rational", "--n", "1", "--grid", "125,250,500,1000"});
  REQUIRE(r.code == 0);
  CHECK(!meta(r.out, "fitted_error_exponent").empty());
  CHECK(std::stod(meta(r.out, "fitted_error_exponent")) <= 1.15);
  const auto ls = lines(r.out);
  CHECK(ls.back().rfind("1000,", 0) == 0);
  const Result j = invoke({"count-rational", "--n", "1", "--grid", "125,250,500,1000", "--format", "json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["rows"].size() == 4);
  CHECK(doc["rows"][0]["X"] == 125);
}

TEST_CASE("lemma-check table") {
  const Result r = invoke({"lemma-check", "--m", "1", "--e", "2"});
  REQUIRE(r.code == 0);
  CHECK(meta(r.out, "result") == "pass");
  CHECK(meta(r.out, "n") == "11");
  CHECK(r.out.find("\n1,") != std::string::npos);
  CHECK(r.out.find(",-7/8,1") != std::string::npos);
}

TEST_CASE("subcommands with supplied data") {
  const Result d = invoke({"example-d", "--invariants", SCHANUEL_DATA_DIR "/quartic_fields.txt"});
  REQUIRE(d.code == 0);
  CHECK(meta(d.out, "coefficient") == "201326592*pi^24");
  const Result s = invoke({"schanuel", "--field", "Q(zeta8)", "--invariants", SCHANUEL_DATA_DIR "/quartic_fields.txt",
                           "--n", "3", "--zeta-bracket"});
  CHECK(s.code == 0);
  CHECK(s.out.find(",supplied") != std::string::npos);
  const Result m = invoke({"schanuel", "--field", "Q(zeta8)", "--invariants", SCHANUEL_DATA_DIR "/quartic_fields.txt"});
  CHECK(m.code == 1);
  const Result q = invoke({"schanuel", "--field", "Q(sqrt5)", "--invariants", SCHANUEL_DATA_DIR "/quadratic_sample.txt"});
  CHECK(q.code == 0);
  const Result v = invoke({"volumes", "--system", SCHANUEL_DATA_DIR "/twisted_system.json"});
  CHECK(v.code == 0);
  CHECK(v.out.find("V_fin") != std::string::npos);
  const Result t = invoke({"main-term", "--system", SCHANUEL_DATA_DIR "/twisted_system.json"});
  CHECK(t.code == 0);
}

TEST_CASE("every subcommand runs on small input") {
  const std::vector<std::vector<std::string>> runs = {
      {"field-info", "--field", "-23"},
      {"field-info", "--field", "15"},
      {"zeta", "--field", "-1", "--s", "3"},
      {"main-term", "--field", "-1", "--system", "l2"},
      {"ce-sum", "--n", "3", "--disc-max", "100"},
      {"count-field", "--field", "-1", "--grid", "1,2,4,8"},
      {"count-primitive", "--field", "-3", "--n", "1", "--grid", "1,2,3"},
      {"count-quadratic-p1", "--grid", "1,2,3,4"},
      {"delta", "--field", "2"},
      {"n-delta", "--grid", "1,2"},
      {"n-disc", "--grid", "8,100"},
      {"bounds-check", "--field", "-7", "--disc-max", "200", "--grid", "1,2"},
      {"volumes", "--field", "5", "--n", "2"},
  };
  for (const auto& args : runs) {
    const Result r = invoke(args);
    CAPTURE(args[0]);
    CAPTURE(r.err);
    CHECK(r.code == 0);
    CHECK(!r.out.empty());
  }
  CHECK(meta(invoke({"bounds-check", "--grid", "1,2,3"}).out, "schmidt_upper_holds") == "pass");
  CHECK(invoke({"n-disc", "--grid", "8"}).out.find("8,6") != std::string::npos);
}

TEST_CASE("output directory from the environment") {
  const auto dir = std::filesystem::temp_directory_path() / "schanuel_cli_test";
  std::filesystem::remove_all(dir);
  setenv(kOutputDirEnv, dir.c_str(), 1);
  const Result r = invoke({"n-disc", "--grid", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(std::filesystem::exists(dir / "n-disc.csv"));
  const Result named = invoke({"n-disc", "--grid", "8", "--output", "sub/x.json", "--format", "json"});
  CHECK(named.code == 0);
  CHECK(std::filesystem::exists(dir / "sub" / "x.json"));
  unsetenv(kOutputDirEnv);
  std::filesystem::remove_all(dir);
}

TEST_CASE("identical configs give identical bytes") {
  const std::vector<std::string> base = {"count-quadratic-p1", "--grid", "1,2,3,4"};
  const std::string ref = invoke(base).out;
  for (const std::string w : {"1", "2", "4"}) {
    for (const std::string p : {"block", "stride"}) {
      auto args = base;
      args.insert(args.end(), {"--workers", w, "--partition", p});
      CHECK(invoke(args).out == ref);
    }
  }
}

TEST_CASE("json output records the schedule") {
  const Result r = invoke({"count-quadratic-p1", "--grid", "1,2", "--workers", "4", "--partition", "stride",
                           "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["run"]["workers"] == "4");
  CHECK(doc["run"]["partition"] == "stride");
  const Result csv = invoke({"count-quadratic-p1", "--grid", "1,2", "--workers", "4", "--partition", "stride"});
  CHECK(csv.out.find("stride") == std::string::npos);
}
