#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "test_support.hpp"

using projew::exactmath::BigRational;
using projew::exactmath::RatFunc;
using testsupport::expr;
using testsupport::q;

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(PROJEW_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

std::string example_path(const std::string& name) {
  return std::string(PROJEW_SOURCE_DIR) + "/examples/" + name;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli invariants", "[cli]") {
  RunResult at = run_cli("invariants " + example_path("ex1.json") + " --at 1 1");
  CHECK(at.exit_code == 0);
  CHECK(contains(at.output, "rho = 328"));
  CHECK(contains(at.output, "branch: generic"));

  RunResult flat = run_cli("invariants " + example_path("flat.json"));
  CHECK(flat.exit_code == 0);
  CHECK(contains(flat.output, "rho = 0"));
  CHECK(contains(flat.output, "Y = (0, 0)"));
  CHECK(contains(flat.output, "branch: flat"));

  RunResult ex2 = run_cli("invariants " + example_path("ex2.json"));
  CHECK(ex2.exit_code == 0);
  CHECK(contains(ex2.output, "rho = 0"));
  CHECK(contains(ex2.output, "branch: special"));
}

TEST_CASE("cli obstruction at a point", "[cli]") {
  RunResult r = run_cli("obstruction " + example_path("ex1.json") + " --at 1 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "Q12 = -1457890459574161592339200000/1681"));
  CHECK(contains(r.output, "Q23 = 1457890459574161592339200000/1681"));
  CHECK(contains(r.output,
                 "Q13 = -188610437798501965389961756672000000000/452190681"));
  CHECK(contains(r.output, "verdict: no local pEW solution"));
}

TEST_CASE("cli obstruction on the special branch", "[cli]") {
  RunResult r = run_cli("obstruction " + example_path("ex2.json"));
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "branch: special"));
  CHECK(contains(r.output, "obstruction = 32/75*x^30"));
  CHECK(contains(r.output, "27200"));
  CHECK(contains(r.output, "verdict: no local pEW solution"));
}

TEST_CASE("cli obstruction at a point on the rho locus", "[cli]") {
  // rho of example-1 vanishes at the origin; values are reported but no
  // verdict is asserted there
  RunResult r = run_cli("obstruction " + example_path("ex1.json") + " --at 0 0");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "rho = 0"));
  CHECK(contains(r.output, "no verdict is asserted"));
}

TEST_CASE("cli obstruction on the flat branch", "[cli]") {
  RunResult r = run_cli("obstruction " + example_path("flat.json"));
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "branch: flat"));
  CHECK(contains(r.output, "projectively flat; F = 0 forced"));
}

TEST_CASE("cli check-solution", "[cli]") {
  std::string flat = example_path("flat.json");
  RunResult zero = run_cli("check-solution " + flat + " --alpha 0 0");
  CHECK(zero.exit_code == 0);
  CHECK(contains(zero.output, "solution: yes"));

  RunResult one = run_cli("check-solution " + flat + " --alpha 1 0");
  CHECK(one.exit_code == 1);
  CHECK(contains(one.output, "residual_11 = 1"));
  CHECK(contains(one.output, "residual_12 = 0"));
  CHECK(contains(one.output, "residual_22 = 0"));

  RunResult y = run_cli("check-solution " + flat + " --alpha y 0");
  CHECK(y.exit_code == 1);
  CHECK(contains(y.output, "residual_11 = y^2"));
  CHECK(contains(y.output, "residual_12 = 1/2"));
  CHECK(contains(y.output, "residual_22 = 0"));

  RunResult sol = run_cli("check-solution " + flat + " --alpha 1/x 0");
  CHECK(sol.exit_code == 0);
  CHECK(contains(sol.output, "solution: yes"));
}

TEST_CASE("cli exit codes for bad inputs", "[cli]") {
  CHECK(run_cli("invariants /nonexistent.json").exit_code == 2);

  std::string bad = std::string(PROJEW_SOURCE_DIR) + "/README.md";
  CHECK(run_cli("invariants " + bad).exit_code == 2);

  // a rational connection entry with a pole on x = 1 makes every invariant
  // pole there
  std::string pole_file = "/tmp/projew_pole_test.json";
  {
    std::FILE* f = std::fopen(pole_file.c_str(), "w");
    REQUIRE(f != nullptr);
    std::fputs(
        R"js({"connection": {"1_22": "x*y/(x - 1)", "2_11": "-y"}})js", f);
    std::fclose(f);
  }
  RunResult pole = run_cli("invariants " + pole_file + " --at 1 1");
  CHECK(pole.exit_code == 3);
  CHECK(contains(pole.output, "vanishes"));
  std::remove(pole_file.c_str());

  RunResult budget = run_cli("obstruction " + example_path("ex1.json") +
                             " --symbolic --max-terms 10");
  CHECK(budget.exit_code == 4);
  CHECK(contains(budget.output, "term budget"));
}

TEST_CASE("cli json output round-trips", "[cli]") {
  RunResult r = run_cli("obstruction " + example_path("ex1.json") +
                        " --at 1 1 --format json");
  CHECK(r.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.output);
  CHECK(doc["branch"] == "generic");
  CHECK(q(doc["invariants"]["rho"].get<std::string>()) == q("328"));
  CHECK(q(doc["generic"]["determinants"]["Q12"].get<std::string>()) ==
        q("-1457890459574161592339200000/1681"));
  CHECK(q(doc["generic"]["coefficients"]["a1"].get<std::string>()) ==
        q("185760/328"));

  // symbolic expressions re-parse to equal values
  RunResult sym = run_cli("invariants " + example_path("ex1.json") +
                          " --format json");
  nlohmann::json sdoc = nlohmann::json::parse(sym.output);
  RatFunc rho = expr(sdoc["invariants"]["rho"].get<std::string>());
  CHECK(rho == expr("216*x^3*y^4 + 64*x*y^7 + 48*x*y^4"));
  RatFunc y0 = expr(sdoc["invariants"]["Y"][0].get<std::string>());
  CHECK(y0 == expr("4*y^2"));
}

TEST_CASE("cli output is deterministic", "[cli]") {
  std::string args = "obstruction " + example_path("ex2.json") + " --format json";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}
