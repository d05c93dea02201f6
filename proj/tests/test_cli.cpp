// SPDX-License-Identifier: Apache-2.0
#include <appellfield/cli.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

using namespace appellfield;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli_run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"appellfield"};
  argv.insert(argv.end(), args);
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

double value_of(const std::string& text, const std::string& key) {
  const auto p = text.find(key + "=");
  REQUIRE(p != std::string::npos);
  return std::stod(text.substr(p + key.size() + 1));
}

}  // namespace

TEST_CASE("eval prints phi and psi", "[cli]") {
  const auto r = cli_run({"eval", "--body", "tube", "--R", "1", "--Z", "0.7", "--density", "1", "--r", "0", "--z", "5",
                          "--quantity", "phi"});
  REQUIRE(r.code == 0);
  const double phi = value_of(r.out, "phi");
  CHECK(std::fabs(phi - fields::phi_tube(0, 5, fields::TubeSpec{1, 0.7, 1})) < 1e-15);
  // Far-field sanity: close to Q / 5.
  CHECK(std::fabs(phi * 5 / (4 * std::numbers::pi * 0.7) - 1) < 0.02);
}

TEST_CASE("eval inside the cylinder prints the marker token", "[cli]") {
  const auto r = cli_run({"eval", "--body", "cyl", "--R", "1", "--Z", "0.7", "--density", "1", "--r", "0.5", "--z",
                          "0", "--quantity", "psi"});
  CHECK(r.code == 0);
  CHECK(r.out.find("psi=undefined(inside-charge)") != std::string::npos);
}

TEST_CASE("eval tube branch 1 adds the topological charge", "[cli]") {
  const auto a = cli_run({"eval", "--body", "tube", "--r", "0.5", "--z", "0.3", "--quantity", "psi"});
  const auto b = cli_run({"eval", "--body", "tube", "--r", "0.5", "--z", "0.3", "--quantity", "psi", "--branch", "1"});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(std::fabs(value_of(b.out, "psi") - value_of(a.out, "psi") - fields::TubeSpec{1, 0.7, 1}.psi_jump()) < 1e-12);
  CHECK(b.out.find("branch=1") != std::string::npos);
}

TEST_CASE("eval errors exit with status 2", "[cli][errors]") {
  CHECK(cli_run({"eval", "--body", "cyl", "--r", "1", "--z", "0.7"}).code == 2);  // edge circle
  CHECK(cli_run({"eval", "--body", "cone", "--r", "1", "--z", "0"}).code == 2);
  CHECK(cli_run({"eval", "--body", "disk", "--r", "1", "--z", "1", "--quantity", "psi"}).code == 2);
  CHECK(cli_run({"eval", "--body", "cyl", "--r", "2", "--z", "1", "--branch", "1"}).code == 2);
  CHECK(cli_run({"eval", "--body", "cyl", "--r", "-1", "--z", "1"}).code == 2);
  const auto r = cli_run({"eval", "--r", "1"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(cli_run({}).code == 2);
}

TEST_CASE("special evaluates functions by name", "[cli]") {
  auto r = cli_run({"special", "--fn", "comp_k", "0.85"});
  REQUIRE(r.code == 0);
  CHECK(std::fabs(std::stod(r.out) - 2.38901648632557999) < 1e-14);
  r = cli_run({"special", "--fn", "appell_f2", "0.5", "0.5", "1", "1", "1.5", "0", "0"});
  REQUIRE(r.code == 0);
  CHECK(std::stod(r.out) == 1.0);
  r = cli_run({"special", "--fn", "i_hyg", "0.5", "0.3", "2.0"});
  REQUIRE(r.code == 0);
  CHECK(std::fabs(std::stod(r.out) - 0.674784536677021828) < 1e-13);
  for (const char* fn : {"ellip_pi", "jacobi_zeta", "i_hyg_surface", "int_z_sc"}) CHECK(cli_run({"special", "--fn", fn}).code == 2);
}

TEST_CASE("special accepts negative positional numbers", "[cli]") {
  const auto r = cli_run({"special", "--fn", "i_hyg", "0.5", "-0.3", "-2.0"});
  REQUIRE(r.code == 0);
  CHECK(std::fabs(std::stod(r.out) - 0.674784536677021828) < 1e-13);
  const auto z = cli_run({"special", "--fn", "jacobi_zeta", "-1.3", "0.5"});
  REQUIRE(z.code == 0);
  CHECK(std::fabs(std::stod(z.out) + 0.112444816184460724) < 1e-14);
}

TEST_CASE("special errors exit with status 2", "[cli][errors]") {
  CHECK(cli_run({"special", "--fn", "nosuch", "1"}).code == 2);
  CHECK(cli_run({"special", "--fn", "comp_k", "1"}).code == 2);
  CHECK(cli_run({"special", "--fn", "comp_k", "0.1", "0.2"}).code == 2);
  CHECK(cli_run({"special", "--fn", "comp_k", "abc"}).code == 2);
}

TEST_CASE("grid writes CSV and JSON that read back exactly", "[cli]") {
  const auto dir = std::filesystem::temp_directory_path() / "appellfield_cli_test";
  std::filesystem::create_directories(dir);
  const auto csv = (dir / "g.csv").string(), json = (dir / "g.json").string();
  REQUIRE(cli_run({"grid", "--body", "tube", "--nr", "5", "--nz", "6", "--branch", "-1", "--branch", "0", "--branch",
                   "1", "--out", csv.c_str()})
              .code == 0);
  REQUIRE(cli_run({"grid", "--body", "tube", "--nr", "5", "--nz", "6", "--branch", "-1", "--branch", "0", "--branch",
                   "1", "--format", "json", "--out", json.c_str()})
              .code == 0);
  std::ifstream fc(csv), fj(json);
  const auto rows = grid::read_csv(fc);
  const auto data = grid::read_json(fj);
  CHECK(rows.size() == 90);
  CHECK(data.rows == rows);
  CHECK(data.spec.branches == std::vector<long>{-1, 0, 1});
  std::filesystem::remove_all(dir);
}

TEST_CASE("grid output is byte-identical across runs and thread counts", "[cli]") {
  const auto a = cli_run({"grid", "--nr", "6", "--nz", "7", "--threads", "1"});
  const auto b = cli_run({"grid", "--nr", "6", "--nz", "7", "--threads", "4"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("r,z,phi,psi,branch\n", 0) == 0);
}

TEST_CASE("grid errors exit with status 2", "[cli][errors]") {
  CHECK(cli_run({"grid", "--nr", "1"}).code == 2);
  CHECK(cli_run({"grid", "--body", "disk"}).code == 2);  // psi requested for the disk
  CHECK(cli_run({"grid", "--body", "disk", "--quantity", "phi", "--nr", "2", "--nz", "2"}).code == 0);
  CHECK(cli_run({"grid", "--format", "xml"}).code == 2);
  CHECK(cli_run({"grid", "--nr", "2", "--nz", "2", "--out", "/nonexistent-dir/x.csv"}).code == 2);
}

TEST_CASE("verify runs selected criteria and reports", "[cli]") {
  const auto r = cli_run({"verify", "--suite", "fast", "--seed", "42", "--only", "7", "--only", "15"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS [07]") != std::string::npos);
  CHECK(r.out.find("PASS [15]") != std::string::npos);
  const auto again = cli_run({"verify", "--suite", "fast", "--seed", "42", "--only", "7"});
  CHECK(again.out.substr(0, again.out.find(" (")) == r.out.substr(0, r.out.find(" (")));
  CHECK(cli_run({"verify", "--only", "3"}).code == 1);
  CHECK(cli_run({"verify", "--only", "16"}).code == 2);
  CHECK(cli_run({"verify", "--suite", "huge"}).code == 2);
}

TEST_CASE("term cap from the environment is honoured", "[cli]") {
  ::setenv("APPELLFIELD_MAX_TERMS", "2", 1);
  CHECK(cli_run({"special", "--fn", "gauss_2f1", "0.5", "0.3", "1.2", "0.9"}).code == 2);
  ::setenv("APPELLFIELD_MAX_TERMS", "x", 1);
  CHECK(cli_run({"special", "--fn", "comp_k", "0.5"}).code == 2);
  ::unsetenv("APPELLFIELD_MAX_TERMS");
}

#ifdef APPELLFIELD_CLI_PATH
TEST_CASE("installed binary handles negative positionals and exit codes", "[cli]") {
  const std::string exe = APPELLFIELD_CLI_PATH;
  FILE* p = ::popen((exe + " special --fn jacobi_sn -1.3 0.5").c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[128] = {};
  REQUIRE(std::fgets(buf, sizeof buf, p) != nullptr);
  const int status = ::pclose(p);
  CHECK(status == 0);
  CHECK(std::fabs(std::stod(buf) + 0.920446474210017825) < 1e-14);
  CHECK(WEXITSTATUS(std::system((exe + " special --fn comp_k 2 2>/dev/null").c_str())) == 2);
}
#endif
