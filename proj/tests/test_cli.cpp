// End-to-end tests of the installed command line binary: exit codes and
// output stability, driven through popen.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunOutput {
  int exit_code;
  std::string out;
};

RunOutput run_cli(const std::string& args) {
  std::string cmd = std::string(M2COH_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("verify exits 0 on a valid restricted structure") {
  RunOutput r = run_cli("verify --prime 7 --lambda 0,0,0,0,0,0,1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("ok: true") != std::string::npos);
}

TEST_CASE("invalid input exits 2") {
  CHECK(run_cli("verify --prime 4").exit_code == 2);
  CHECK(run_cli("verify --prime 5 --lambda 1,2").exit_code == 2);
  CHECK(run_cli("cohomology --prime 19").exit_code == 2); // above the default cap
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("verification mismatch exits 1") {
  CHECK(run_cli("verify --prime 7 --tamper").exit_code == 1);
}

TEST_CASE("cohomology output carries the dimensions") {
  RunOutput r = run_cli("cohomology --prime 11 --lambda 1,0,0,0,0,0,0,0,0,0,0 --format json");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["results"]["h2_star"]["dimension"] == 13);
  CHECK(doc["results"]["h1"]["dimension"] == 2);
}

TEST_CASE("output is byte-stable across runs") {
  std::string args = "extensions --prime 7 --lambda zero --format json --seed 5";
  RunOutput a = run_cli(args);
  RunOutput b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("iso subcommand") {
  RunOutput r = run_cli("iso --prime 5 1,2,4,3,1 1,1,1,1,1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("mu = 2") != std::string::npos);
  RunOutput r2 = run_cli("iso --prime 5 0,0,0,0,0 1,0,0,0,0");
  CHECK(r2.exit_code == 0);
  CHECK(r2.out.find("not isomorphic") != std::string::npos);
}

TEST_CASE("field extension flag reaches GF(25)") {
  RunOutput r = run_cli("cohomology --prime 5 --field-ext 2,0 --format json");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["field"]["degree"] == 2);
  CHECK(doc["results"]["h2"]["dimension"] == 3);
}
