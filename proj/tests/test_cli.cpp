#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "clift/cli.hpp"
#include "doctest.h"
#include "helpers.hpp"

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("clift");
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliResult r;
  r.code = clift::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string spec(const std::string& name) {
  return clift::testing::source_path("tests/specs/" + name);
}

// Writes a scratch spec file and removes it when the test ends.
struct TempSpec {
  std::filesystem::path path;
  explicit TempSpec(const std::string& body) {
    path = std::filesystem::temp_directory_path() /
           ("clift_spec_" + std::to_string(counter++) + ".json");
    std::ofstream out(path);
    out << body;
  }
  ~TempSpec() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
  static inline int counter = 0;
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("worked example matches the golden transcript") {
  auto r = run_cli({"example", "b3"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out == read_file(clift::testing::source_path("tests/golden/example_b3.txt")));

  // Byte-for-byte deterministic.
  auto again = run_cli({"example", "b3"});
  CHECK(again.out == r.out);

  CHECK(run_cli({"example", "b4"}).code == 2);
}

TEST_CASE("cell matrix command matches the golden transcript") {
  auto r = run_cli({"schubert", spec("b3.json"), "--grouped"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        read_file(clift::testing::source_path("tests/golden/schubert_b3_grouped.txt")));

  auto natural = run_cli({"schubert", spec("b3.json")});
  CHECK(natural.code == 0);
  CHECK(natural.out != r.out);
  CHECK(natural.out.find(" [2] ") != std::string::npos);
}

TEST_CASE("json output is machine readable") {
  auto r = run_cli({"schubert", spec("b3.json"), "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("schema") == "clift-matrix/1");
  CHECK(j.at("matrix").at("rows") == 6);
  CHECK(j.at("matrix").at("cols") == 3);
  CHECK(j.at("matrix").at("mutable_positions") == nlohmann::json({1, 2, 4}));

  auto l = run_cli({"lift", spec("b3.json"), "--json"});
  REQUIRE(l.code == 0);
  auto jl = nlohmann::json::parse(l.out);
  CHECK(jl.at("schema") == "clift-lift/1");
  CHECK(jl.at("convention") == "plain");
  CHECK(jl.at("matrix").at("rows") == 7);

  auto m = run_cli({"mutate", spec("sl3.json"), "--seq", "1", "--json"});
  REQUIRE(m.code == 0);
  auto jm = nlohmann::json::parse(m.out);
  CHECK(jm.at("schema") == "clift-seed/1");
  CHECK(jm.at("vars").at(0) == "n23");

  auto g = run_cli({"explore", spec("sl3.json"), "--max", "10", "--json"});
  REQUIRE(g.code == 0);
  auto jg = nlohmann::json::parse(g.out);
  CHECK(jg.at("schema") == "clift-graph/1");

  auto v = run_cli({"verify", spec("sl3.json"), "--suite", "oracle", "--json"});
  REQUIRE(v.code == 0);
  auto jv = nlohmann::json::parse(v.out);
  CHECK(jv.at("schema") == "clift-report/1");
  CHECK(jv.at("ok") == true);
  CHECK(jv.at("violations").empty());
}

TEST_CASE("verification suites succeed on sound input") {
  auto oracle = run_cli({"verify", spec("sl3.json"), "--suite", "oracle"});
  CHECK(oracle.code == 0);
  CHECK(oracle.out.find("ok") != std::string::npos);

  auto laurent = run_cli({"verify", spec("b3.json"), "--suite", "laurent",
                          "--walks", "5", "--depth", "3"});
  CHECK(laurent.code == 0);

  auto involution = run_cli({"verify", spec("b3.json"), "--suite", "involution",
                             "--walks", "5", "--depth", "3"});
  CHECK(involution.code == 0);

  auto grading = run_cli({"verify", spec("b3.json"), "--suite", "grading",
                          "--walks", "10", "--depth", "4"});
  CHECK(grading.code == 0);

  auto lifted = run_cli({"verify", spec("sl3.json"), "--suite", "lifted"});
  CHECK(lifted.code == 0);
}

TEST_CASE("violations exit with code one") {
  auto r = run_cli({"verify", spec("sl3_plain.json"), "--suite", "lifted"});
  CHECK(r.code == 1);
  CHECK(r.out.find("not_divisible") != std::string::npos);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("bad input exits with code two") {
  CHECK(run_cli({"schubert", "/nonexistent/path.json"}).code == 2);

  TempSpec malformed("{ this is not json");
  CHECK(run_cli({"schubert", malformed.str()}).code == 2);

  TempSpec wrong_schema(R"({"schema": "other/9", "type": {"series": "A", "rank": 2},
                            "word": [1], "J": [1]})");
  CHECK(run_cli({"schubert", wrong_schema.str()}).code == 2);

  TempSpec not_reduced(R"({"schema": "clift-cell/1", "type": {"series": "A", "rank": 2},
                           "word": [1, 1], "J": [1]})");
  CHECK(run_cli({"schubert", not_reduced.str()}).code == 2);

  TempSpec no_degrees(R"({"schema": "clift-cell/1", "type": {"series": "A", "rank": 2},
                          "word": [1, 2, 1], "J": [1, 2]})");
  CHECK(run_cli({"lift", no_degrees.str()}).code == 2);

  auto bad_suite = run_cli({"verify", spec("sl3.json"), "--suite", "bogus"});
  CHECK(bad_suite.code == 2);

  auto bad_seq = run_cli({"mutate", spec("sl3.json"), "--seq", "1,x"});
  CHECK(bad_seq.code == 2);
  CHECK(bad_seq.err.find("error") != std::string::npos);

  auto frozen = run_cli({"mutate", spec("sl3.json"), "--seq", "2"});
  CHECK(frozen.code == 2);

  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"unknown-command"}).code == 2);
}

TEST_CASE("help is printed on request") {
  auto r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("schubert") != std::string::npos);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("exploration reports the graph size") {
  auto r = run_cli({"explore", spec("sl3.json"), "--max", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("nodes:") != std::string::npos);
  CHECK(r.out.find("complete: yes") != std::string::npos);

  auto fixed = run_cli({"explore", spec("sl3.json"), "--max", "10", "--exec",
                        "parallel"});
  CHECK(fixed.out == r.out);
}

}  // TEST_SUITE
