#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + std::string(HP_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("eig query emits the frozen value") {
  RunResult r = run_cli("eig --n 3 --lambda 1,1,0 --m 2 --theta 1");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["eigenvalue"] == "4");
}

TEST_CASE("symbolic eigenvalue uses the canonical text form") {
  RunResult r = run_cli("eig --n 2 --lambda 2,0 --m 2 --theta sym");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["eigenvalue"] == "2*θ + 4");
}

TEST_CASE("spectrum report round-trips and matches the oracle") {
  RunResult r = run_cli("spectrum --n 3 --lambda 1,1,0 --m 2 --theta 1");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  // structural check against the shipped schema
  CHECK(j["n"] == 3);
  CHECK(j["lambda"] == "1,1,0");
  CHECK(j["m"] == 2);
  CHECK(j["theta"] == "1");
  REQUIRE(j["eigenvalues"].is_array());
  REQUIRE(j["eigenvalues"].size() == 2);
  CHECK(j["eigenvalues"][0]["value"] == "4");
  CHECK(j["eigenvalues"][0]["mult"] == 1);
  CHECK(j["eigenvalues"][1]["value"] == "10");
  CHECK(j["eigenvalues"][1]["mult"] == 2);
  for (const auto& v : j["verdicts"]) {
    CHECK(v["ok"].is_boolean());
    CHECK(v["ok"] == true);
    CHECK(v["check"].is_string());
  }
  for (const auto& b : j["blocks"]) {
    CHECK(b["tau"].is_string());
    CHECK(b["dim"].is_number_integer());
    CHECK(b["charpoly"].is_string());
  }
}

TEST_CASE("csv output carries the fixed header") {
  RunResult r = run_cli("spectrum --n 3 --lambda 1,1,0 --m 2 --theta 1 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("n,lambda,tau,m,theta,value,mult,provenance\n", 0) == 0);
}

TEST_CASE("character queries") {
  CHECK(json::parse(run_cli("char --n 3 --tau 2,1 --class 3").out)["value"] == "-1");
  CHECK(json::parse(run_cli("char --n 3 --tau 2,1 --class 2,1").out)["value"] == "0");
  CHECK(json::parse(run_cli("avgchar --n 3 --tau 2,1 --blocks 2,1 --subset 1,2").out)["value"] ==
        "-1/2");
}

TEST_CASE("trace query reports both routes") {
  json j = json::parse(run_cli("trace --n 3 --lambda 2,1,0 --tau 2,1 --m 1 --theta sym").out);
  CHECK(j["closed"] == "12*θ + 12");
  CHECK(j["brute"] == "12*θ + 12");
  CHECK(j["match"] == true);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("eig --n 3 --lambda 1,1,0").exit_code == 2);            // missing --m
  CHECK(run_cli("nonsense").exit_code == 2);                            // unknown subcommand
  CHECK(run_cli("eig --n 3 --lambda not-a-partition --m 1").exit_code == 2);
  CHECK(run_cli("verify bogus --n 3").exit_code == 2);                  // unknown suite
}

TEST_CASE("symbolic cap violations advise the specialized mode") {
  // dim V_(2,1,0) = 6 > cap 4
  RunResult r = run_cli("spectrum --n 3 --lambda 2,1,0 --m 1 --theta sym --cap 4");
  CHECK(r.exit_code == 2);
  // env override works the same way
  RunResult r2 = run_cli("spectrum --n 3 --lambda 2,1,0 --m 1 --theta sym", "HP_SYMBOLIC_CAP=4");
  CHECK(r2.exit_code == 2);
  RunResult ok = run_cli("spectrum --n 3 --lambda 2,1,0 --m 1 --theta sym", "HP_SYMBOLIC_CAP=8");
  CHECK(ok.exit_code == 0);
}

TEST_CASE("series, catalog, jack, and basis emit well-formed JSON") {
  json s = json::parse(run_cli("series --n 3 --lambda 1,1,0 --theta sym --mmax 3").out);
  REQUIRE(s["series"].is_array());
  CHECK(s["series"].size() == 4);
  CHECK(s["series"][0]["value"] == "3");
  json c = json::parse(run_cli("catalog3 --n 3 --lambda 2,1,0 --m 2 --theta 1").out);
  REQUIRE(c["entries"].is_array());
  CHECK(c["entries"].size() == 3);
  json jk = json::parse(run_cli("jack --n 2 --lambda 2,0 --theta sym").out);
  CHECK(jk["msym_coefficients"][1]["coeff"] == "(2*θ)/(1*θ + 1)");
  json b = json::parse(run_cli("basis --n 3 --lambda 1,1,0 --m-list 1,2 --theta 1").out);
  REQUIRE(b["functions"].is_array());
  CHECK(b["functions"].size() == 3);
}

TEST_CASE("verify suites pass on the clean build and exit 0") {
  RunResult r = run_cli("verify cms --n 3 --maxdeg 3 --theta 1");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["violations"].empty());
}
