#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

using std::string;

namespace {

const string kCli = CLIMBDESIGN_CLI_PATH;
const string kConfig = string(CLIMBDESIGN_CONFIG_DIR) + "/table3.cfg";
const string kCatalog = string(CLIMBDESIGN_CONFIG_DIR) + "/motors.csv";

struct RunResult {
  int exit_code = -1;
  string output;
};

RunResult run(const string& args, bool merge_stderr = false) {
  const string cmd =
      kCli + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), buf.size(), pipe))
    result.output += buf.data();
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

int count_lines(const string& text) {
  int lines = 0;
  for (char ch : text)
    if (ch == '\n') ++lines;
  return lines;
}

}  // namespace

TEST_CASE("check reports a feasible 90 mm design") {
  const RunResult r = run("check --config " + kConfig + " --diameter 90");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("links_per_arm: 3") != string::npos);
  CHECK(r.output.find("feasible: yes") != string::npos);
  CHECK(r.output.find("config_fingerprint: ") != string::npos);
}

TEST_CASE("check rejects an invalid diameter with exit 2") {
  const RunResult r =
      run("check --config " + kConfig + " --diameter 0", /*merge_stderr=*/true);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("d_c") != string::npos);
}

TEST_CASE("check flags an infeasible diameter with exit 1") {
  const RunResult r = run("check --config " + kConfig + " --diameter 320");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("feasible: no") != string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("check --config " + kConfig).exit_code == 2);      // no diameter
  CHECK(run("unknown-subcommand", true).exit_code == 2);
  CHECK(run("check --config /no/such/file --diameter 90", true).exit_code == 2);
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("sweep emits the documented CSV") {
  const string args =
      "sweep --config " + kConfig + " --min 60 --max 400 --step 5";
  const RunResult first = run(args);
  CHECK(first.exit_code == 1);  // the far end of the grid is infeasible
  REQUIRE(count_lines(first.output) == 70);  // header + 69 grid rows
  CHECK(first.output.rfind("d_c_mm,n,k_tw,d1_mm,total_mass_kg,tau_drive_nm,"
                           "tau_turret_nm,self_lock,no_slip,torque_ok,feasible\n",
                           0) == 0);
  CHECK(first.output.find("\n90,3,0,") != string::npos);

  SUBCASE("byte-identical across runs") {
    const RunResult second = run(args);
    CHECK(first.output == second.output);
  }
  SUBCASE("tau column never decreases") {
    double prev = 0.0;
    std::size_t pos = first.output.find('\n') + 1;
    while (pos < first.output.size()) {
      const std::size_t eol = first.output.find('\n', pos);
      const string row = first.output.substr(pos, eol - pos);
      // tau_drive_nm is the 6th comma-separated field
      std::size_t field_start = 0;
      for (int f = 0; f < 5; ++f) field_start = row.find(',', field_start) + 1;
      const double tau = std::stod(row.substr(field_start));
      CHECK(tau >= prev - 1e-12);
      prev = tau;
      pos = eol + 1;
    }
  }
}

TEST_CASE("sweep over a fully feasible range exits 0") {
  const RunResult r =
      run("sweep --config " + kConfig + " --min 60 --max 220 --step 5");
  CHECK(r.exit_code == 0);
}

TEST_CASE("sweep falls back to the config grid defaults") {
  const RunResult r = run("sweep --config " + kConfig);
  CHECK(count_lines(r.output) == 70);
}

TEST_CASE("sweep rejects a bad range with exit 2") {
  const RunResult r = run(
      "sweep --config " + kConfig + " --min 100 --max 60 --step 5", true);
  CHECK(r.exit_code == 2);
}

TEST_CASE("selflock reports the static balance") {
  const RunResult r = run("selflock --config " + kConfig + " --diameter 90");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("self_lock: ok") != string::npos);
  CHECK(r.output.find("d1_threshold_mm: 26.061") != string::npos);
  CHECK(r.output.find("denominator_sign: -1") != string::npos);
}

TEST_CASE("motors margins against the shipped catalog") {
  const RunResult r =
      run("motors --config " + kConfig + " --catalog " + kCatalog);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("catalog_covers_drive: yes") != string::npos);
  CHECK(r.output.find("catalog_covers_turret: yes") != string::npos);
  CHECK(r.output.find("motor: drive") != string::npos);
  CHECK(r.output.find("motor: turret") != string::npos);
}

TEST_CASE("verify runs the numerical suites") {
  const RunResult r =
      run("verify --config " + kConfig + " --seed 7 --cases 50");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("failures: 0") != string::npos);
}
