#include <catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef WEDGECRACK_CLI_PATH
#define WEDGECRACK_CLI_PATH "wedge-crack"
#endif
#ifndef WEDGECRACK_DATA_DIR_FOR_TESTS
#define WEDGECRACK_DATA_DIR_FOR_TESTS "data"
#endif

namespace {

int run_cli(const std::string& args, std::string* output = nullptr) {
  const std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                          "/wedgecrack_cli_out.txt";
  const std::string cmd = std::string(WEDGECRACK_CLI_PATH) + " " + args + " > " + tmp + " 2>&1";
  const int status = std::system(cmd.c_str());
  if (output) {
    std::ifstream f(tmp);
    std::stringstream ss;
    ss << f.rdbuf();
    *output = ss.str();
  }
  std::remove(tmp.c_str());
  if (status == -1) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

double kPi_ref() { return 3.14159265358979323846; }

}  // namespace

TEST_CASE("edge solve emits a CSV row consistent with the published row") {
  std::string out;
  const int rc = run_cli("edge --alpha 90deg --load 1,1 --no-timestamp", &out);
  REQUIRE(rc == 0);
  // K_I = D11 + D12, K_II = D21 + D22 at b = 1
  CHECK(out.find("alpha_rad") != std::string::npos);
  const double k1_ref = 1.776778 - 0.121477;
  const double k2_ref = -0.202058 + 1.813571;
  std::istringstream lines(out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  std::istringstream cells(row);
  std::vector<std::string> vals;
  std::string cell;
  while (std::getline(cells, cell, ',')) vals.push_back(cell);
  REQUIRE(vals.size() >= 9);
  CHECK(std::abs(std::stod(vals[7]) - k1_ref) < 1e-4);
  CHECK(std::abs(std::stod(vals[8]) - k2_ref) < 1e-4);
}

TEST_CASE("angle validation fails with exit code 2") {
  std::string out;
  CHECK(run_cli("edge --alpha 0deg --load 1,1", &out) == 2);
  CHECK(run_cli("edge --alpha 1.0 --load 1,1", &out) == 2);  // missing unit suffix
  CHECK(run_cli("internal --alpha 90deg --a 1 --b 1", &out) == 2);
}

TEST_CASE("half-plane edge limit route") {
  std::string out;
  REQUIRE(run_cli("halfplane --a 0 --b 1 --P 1 --no-timestamp", &out) == 0);
  std::istringstream lines(out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  std::istringstream cells(row);
  std::vector<std::string> vals;
  std::string cell;
  while (std::getline(cells, cell, ',')) vals.push_back(cell);
  REQUIRE(vals.size() >= 5);
  CHECK(std::abs(std::stod(vals[4]) - std::sqrt(kPi_ref()) * 1.1215222) < 1e-5);
}

TEST_CASE("deterministic output with the timestamp suppressed") {
  const std::string d = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
  const std::string f1 = d + "/wc_det_1.csv", f2 = d + "/wc_det_2.csv";
  REQUIRE(run_cli("internal --alpha 60deg --a 0.2 --b 1 --load 1,0.5 --no-timestamp --out " + f1) == 0);
  REQUIRE(run_cli("internal --alpha 60deg --a 0.2 --b 1 --load 1,0.5 --no-timestamp --out " + f2) == 0);
  CHECK(slurp(f1) == slurp(f2));
  CHECK(!slurp(f1).empty());
  std::remove(f1.c_str());
  std::remove(f2.c_str());
}

TEST_CASE("sweep emits ordered rows with diagnostics and per-point errors") {
  std::string out;
  REQUIRE(run_cli("sweep --alpha 30:90:30deg --delta 0.01 --load 1,1 --no-timestamp --jobs 2",
                  &out) == 0);
  std::istringstream lines(out);
  std::string header;
  std::getline(lines, header);
  CHECK(header.find("closure_defect") != std::string::npos);
  CHECK(header.find("status") != std::string::npos);
  int rows = 0;
  double prev_alpha = -1.0;
  std::string row;
  while (std::getline(lines, row)) {
    if (row.empty()) continue;
    ++rows;
    const double alpha = std::stod(row.substr(0, row.find(',')));
    CHECK(alpha > prev_alpha);
    prev_alpha = alpha;
    CHECK(row.find("ok") != std::string::npos);
  }
  CHECK(rows == 3);
}

TEST_CASE("tables command runs against the checked-in reference data") {
  std::string out;
  const std::string args = std::string("--data-dir ") + WEDGECRACK_DATA_DIR_FOR_TESTS +
                           " tables 3 --no-timestamp";
  REQUIRE(run_cli(args, &out) == 0);
  CHECK(out.find("rel_error") != std::string::npos);
  CHECK(out.find("mu0") != std::string::npos);
}

TEST_CASE("json output mirrors the CSV schema") {
  std::string out;
  REQUIRE(run_cli("edge --alpha 45deg --load 1,0 --format json", &out) == 0);
  CHECK(out.find("\"K_I\"") != std::string::npos);
  CHECK(out.find("\"D11\"") != std::string::npos);
}
