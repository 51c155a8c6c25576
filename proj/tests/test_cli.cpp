#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>

#include "bft/boolfun.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(BFT_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("eval reports a bent function and round-trips through hex") {
  RunResult r = run("--json eval 'x1*x2 + x3*x4'");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["n"] == 4);
  CHECK(j["class"] == "bent");
  CHECK(j["s"] == 0);
  CHECK(j["degree"] == 2);
  CHECK(j["anf"] == "x1*x2 + x3*x4");
  CHECK(j.contains("dual"));

  RunResult r2 = run("--json eval " + j["table"].get<std::string>());
  REQUIRE(r2.code == 0);
  CHECK(json::parse(r2.out) == j);
}

TEST_CASE("eval prints the human field list") {
  RunResult r = run("eval 'x1*x2 + x3*x4'");
  REQUIRE(r.code == 0);
  CHECK(contains(r.out, "class:     bent"));
  CHECK(contains(r.out, "degree:    2"));
  CHECK(contains(r.out, "spectrum:"));
  CHECK(contains(r.out, "dual:"));
}

TEST_CASE("eval rejects malformed input with exit 1") {
  CHECK(run("eval x0").code == 1);
  CHECK(run("eval abc").code == 1);
  CHECK(contains(run("eval x0").out, "error"));
}

TEST_CASE("anchor option must match the arity") {
  CHECK(run("--v 101 eval 'x1*x2 + x3*x4'").code == 1);
  RunResult r = run("--json --v 0000 eval 'x1*x2 + x3*x4'");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["dual"]["v"] == "0000");
}

TEST_CASE("synth reproduces the five-variable regression from a file") {
  const char* path = "/tmp/bft_cli_support.txt";
  std::ofstream(path) << "00110\n01101\n10000\n11011\n\n1\n";

  RunResult r = run(std::string("--json synth ") + path);
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["n"] == 5);
  CHECK(j["class"] == "plateaued");
  CHECK(j["s"] == 3);
  std::string expect = bft::to_anf_text(bft::anf_of(bft::function_of(bft::parse_anf(
      "x2*x4 + x4*x5 + x1*x2 + x1*x4 + x1*x5 + x3 + x2*x3 + x3*x4 + x3*x5", 5))));
  CHECK(j["anf"] == expect);

  SECTION("a different anchor reorders the assignment") {
    RunResult rv = run(std::string("--json --v 10000 synth ") + path);
    REQUIRE(rv.code == 0);
    json jv = json::parse(rv.out);
    CHECK(jv["class"] == "plateaued");
    CHECK(jv["s"] == 3);
    CHECK(jv["dual"]["v"] == "10000");
  }

  SECTION("a dual off bent distance is diagnosed") {
    RunResult rd = run(std::string("synth --dual c ") + path);
    CHECK(rd.code == 2);
    CHECK(contains(rd.out, "bent distance"));
  }
}

TEST_CASE("construct checks preconditions unless told not to") {
  RunResult ok = run("construct rothaus 'x1*x2' 'x1*x2 + x1' 'x1*x2 + x2'");
  REQUIRE(ok.code == 0);
  CHECK(contains(ok.out, "verified:  yes"));
  CHECK(contains(ok.out, "class:     bent"));

  RunResult bad = run("construct rothaus 'x1*x2' 'x1*x2 + x1' 'x1 + x2'");
  CHECK(bad.code == 2);
  CHECK(contains(bad.out, "error"));

  RunResult skipped = run("construct rothaus --no-verify 'x1*x2' 'x1*x2 + x1' 'x1 + x2'");
  REQUIRE(skipped.code == 0);
  CHECK(contains(skipped.out, "verified:  no"));
}

TEST_CASE("indirect sum reports a formula dual that matches the spectral one") {
  RunResult r =
      run("--json construct indirect-sum 'x1*x2' 'x1*x2 + x1' 'x1*x2' 'x1*x2 + x2'");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["class"] == "bent");
  CHECK(j["verified"] == true);
  REQUIRE(j.contains("formula_dual"));
  CHECK(j["formula_dual"] == j["dual"]["table"]);
}

TEST_CASE("gis-k runs from selector flags") {
  RunResult r = run(
      "--json construct gis-k 'x1*x2' 'x1*x2 + x1' 'x1*x2 + x2' 'x1*x2 + 1' "
      "'x1*x2 + x1 + x2' 'x1*x2' --ell x1@2 --ell x2@2 --ell 'x1 + 1@2' "
      "--xi-dual 'x1*x2@2'");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["n"] == 6);
  CHECK(j["class"] == "bent");
  CHECK(j["formula_dual"] == j["dual"]["table"]);
}

TEST_CASE("construct maps usage mistakes to exit 1") {
  CHECK(run("construct rothaus 'x1*x2' 'x1*x2'").code == 1);
  CHECK(run("construct no-such-method 'x1*x2'").code == 1);
  CHECK(run("construct generic-a 'x1*x3 + x2*x4' 'x1*x3 + x2*x4 + x1' "
            "'x1*x3 + x2*x4 + x2'")
            .code == 1);  // missing --m
}

TEST_CASE("regression example table passes") {
  RunResult r = run("--json paper-examples");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["all_pass"] == true);
  CHECK(j["examples"].size() == 19);
  for (const auto& row : j["examples"]) CHECK(row["pass"] == true);

  RunResult human = run("paper-examples");
  CHECK(human.code == 0);
  CHECK(contains(human.out, "all examples pass"));
}

TEST_CASE("regression example filter selects one row") {
  RunResult r = run("--json paper-examples --only ex3.5");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["examples"].size() == 1);
  CHECK(j["examples"][0]["id"] == "ex3.5");
  CHECK(j["examples"][0]["pass"] == true);

  CHECK(run("paper-examples --only nope").code == 1);
}
