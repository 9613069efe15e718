#include <doctest.h>

#include <fstream>
#include <sstream>

#include "weylexp/cli.hpp"
#include "weylexp/report.hpp"

using namespace weylexp;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

} // namespace

TEST_CASE("kind selection") {
  const auto ks = parse_kind_selection("A,B", "2-3");
  CHECK(ks == std::vector<RootSystemKind>{{Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::B, 3}});
  CHECK(parse_kind_selection("E6", "") == std::vector<RootSystemKind>{{Family::E, 6}});
  CHECK(parse_kind_selection("G", "") == std::vector<RootSystemKind>{{Family::G, 2}});
  CHECK(parse_kind_selection("C", "2,4") == std::vector<RootSystemKind>{{Family::C, 2}, {Family::C, 4}});
  CHECK_THROWS_AS(parse_kind_selection("Q", "2"), UsageError);
  CHECK_THROWS_AS(parse_kind_selection("A", ""), UsageError);
  CHECK(table_scope(6, false).size() == 15);
  CHECK(table_scope(8, true).size() == 17);
}

TEST_CASE("orbit listing") {
  auto r = run({"orbit", "A", "2", "1,0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "(-1, 1)\n(0, -1)\n(1, 0)\nsize 3\n");
  r = run({"orbit", "H2", "2", "1,0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("size 5") != std::string::npos);
  CHECK(r.out.find("tau") != std::string::npos);
  r = run({"orbit", "B", "2", "0,1"});
  CHECK(r.out.find("size 4") != std::string::npos);
  CHECK(run({"orbit", "B", "2", "0,1,0"}).code == kExitUsage);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"exponents", "--kind", "Q"}).code == kExitUsage);
  CHECK(run({"exponents", "--kind", "E", "--rank", "7"}).code == kExitUsage);
  CHECK(run({"exponents", "--kind", "A", "--rank", "2", "--max-degree", "5"}).code == kExitUsage);
  CHECK(run({"exponents", "--kind", "A", "--rank", "2", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"verify", "--perturb"}).code == kExitFailure);
  CHECK(run({"h2"}).code == kExitOk);
}

TEST_CASE("exponents output") {
  auto r = run({"exponents", "--kind", "A", "--rank", "3", "--max-degree", "4", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto j = Json::parse(r.out);
  CHECK(j.at("schema") == 1);
  const auto rep = exponent_report_from_json(j.at("reports").at(0));
  CHECK(rep.tau.at(2) == 1);
  CHECK(rep.tau.at(3) == 1);
  CHECK(rep.tau.at(4) == 1);
  CHECK(to_json(rep) == j.at("reports").at(0));

  r = run({"exponents", "--kind", "B", "--rank", "3", "--format", "csv"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("B3,2,2,2,2;8;2,2,4,12,72/8,ok") != std::string::npos);

  r = run({"h2", "--format", "json"});
  const auto h = h2_report_from_json(Json::parse(r.out));
  CHECK(h.tau2 == GoldenInt(-1, 2));
  CHECK(h.is_sqrt5);
}

TEST_CASE("verify is deterministic and independent of the worker count") {
  const auto a = run({"verify", "--max-rank", "3", "--seed", "4"});
  const auto b = run({"verify", "--max-rank", "3", "--seed", "4"});
  const auto c = run({"verify", "--max-rank", "3", "--seed", "4", "--jobs", "4"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.out.find(" 0 failed") != std::string::npos);

  const auto bad = run({"verify", "--perturb"});
  CHECK(bad.code == kExitFailure);
  CHECK(bad.out.find("FAIL orbits A2-perturbed") != std::string::npos);
  CHECK(bad.out.find("FAIL phi2-invariance A2-perturbed") != std::string::npos);
}

TEST_CASE("table matches the pinned golden file") {
  const auto r = run({"table", "--max-rank", "4"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out == read_file(std::string(WEYLEXP_GOLDEN_DIR) + "/table_rank4.txt"));
  const auto par = run({"table", "--max-rank", "4", "--jobs", "3"});
  CHECK(par.out == r.out);
}
