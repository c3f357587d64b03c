#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "hlpoly/constants.hpp"
#include "hlpoly/scan.hpp"

using hlpoly::Family;
using hlpoly::ScanReport;

TEST_CASE("build_scan covers the interval and finds the witness") {
  const ScanReport r = hlpoly::build_scan(3.0, 2.0, 1001);
  REQUIRE(r.points.size() == 1001);
  CHECK(r.points.front().a == 0.0);
  CHECK(r.points.back().a == 1.0);
  for (std::size_t i = 1; i < r.points.size(); ++i) {
    CHECK(r.points[i].a > r.points[i - 1].a);
  }
  CHECK(r.points.front().offdiagonal == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r.points.back().offdiagonal == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r.argmax.branch == Family::OffDiagonal);
  CHECK(r.argmax.value == doctest::Approx(std::pow(2.0, 2.0 / 3.0)).epsilon(1e-9));
  CHECK(r.argmax.a == doctest::Approx(std::pow(2.0, -1.0 / 3.0)).epsilon(1e-4));
  for (const auto& pt : r.points) {
    CHECK(pt.offdiagonal <= r.argmax.value * (1.0 + 1e-12));
  }
}

TEST_CASE("build_scan at q = 1 peaks on the off-diagonal branch") {
  const ScanReport r = hlpoly::build_scan(3.0, 1.0, 2001);
  CHECK(r.argmax.branch == Family::OffDiagonal);
  CHECK(r.argmax.value == doctest::Approx(2.5272817657330574).epsilon(1e-9));
  // the diagonal branch tops out at the closed-form value
  double diag_max = 0.0;
  for (const auto& pt : r.points) diag_max = std::max(diag_max, pt.diagonal);
  CHECK(diag_max == doctest::Approx(std::pow(2.0, 2.0 / 3.0)).epsilon(1e-6));
}

TEST_CASE("build_scan is deterministic and validates input") {
  const ScanReport a = hlpoly::build_scan(3.5, 2.5, 101);
  const ScanReport b = hlpoly::build_scan(3.5, 2.5, 101);
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    CHECK(a.points[i].diagonal == b.points[i].diagonal);
    CHECK(a.points[i].offdiagonal == b.points[i].offdiagonal);
  }
  CHECK(a.argmax.a == b.argmax.a);
  CHECK(a.argmax.value == b.argmax.value);
  CHECK_THROWS_AS(hlpoly::build_scan(2.0, 2.0, 100), std::invalid_argument);
  CHECK_THROWS_AS(hlpoly::build_scan(3.0, 0.5, 100), std::invalid_argument);
  CHECK_THROWS_AS(hlpoly::build_scan(3.0, 2.0, 1), std::invalid_argument);
}

namespace {

struct CmdResult {
  std::string out;
  int status = -1;
};

CmdResult run_cmd(const std::string& args) {
  const std::string cmd = std::string(HLCONST_BIN) + " " + args + " 2>/dev/null";
  CmdResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buf;
  while (fgets(buf.data(), buf.size(), pipe) != nullptr) {
    result.out += buf.data();
  }
  const int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

CmdResult run_cmd_env(const std::string& env, const std::string& args) {
  const std::string cmd =
      env + " " + std::string(HLCONST_BIN) + " " + args + " 2>/dev/null";
  CmdResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buf;
  while (fgets(buf.data(), buf.size(), pipe) != nullptr) {
    result.out += buf.data();
  }
  const int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (const char ch : s) {
    if (ch == '\n') ++n;
  }
  return n;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("constant subcommand prints the closed form") {
  const CmdResult r = run_cmd("constant --p 3 --q 3");
  CHECK(r.status == 0);
  CHECK(r.out.find("1.587401052") != std::string::npos);
  CHECK(r.out.find("ClosedForm") != std::string::npos);

  const CmdResult r42 = run_cmd("constant --p 4 --q 2");
  CHECK(r42.status == 0);
  CHECK(r42.out.find("1.414213562") != std::string::npos);

  const CmdResult num = run_cmd("constant --p 3 --q 3 --numeric");
  CHECK(num.status == 0);
  CHECK(num.out.find("NumericMax") != std::string::npos);
  CHECK(num.out.find("1.587401052") != std::string::npos);
}

TEST_CASE("constant respects --digits") {
  const CmdResult r = run_cmd("constant --p 3 --q 3 --digits 4");
  CHECK(r.status == 0);
  CHECK(r.out.find("1.587\n") != std::string::npos);
  const CmdResult bad = run_cmd("constant --p 3 --digits 40");
  CHECK(bad.status == 2);
}

TEST_CASE("constant defaults q to the critical exponent") {
  const CmdResult r = run_cmd("constant --p 4");
  CHECK(r.status == 0);
  CHECK(r.out.find("q          = 2\n") != std::string::npos);
}

TEST_CASE("json output round-trips") {
  const CmdResult r = run_cmd("constant --p 3 --q 3 --json");
  CHECK(r.status == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("method") == "ClosedForm");
  CHECK(std::fabs(j.at("value").get<double>() - std::pow(2.0, 2.0 / 3.0)) <= 1e-12);
  const std::string once = j.dump();
  const std::string twice = nlohmann::json::parse(once).dump();
  CHECK(once == twice);
}

TEST_CASE("table emits one closed-form row per step") {
  const CmdResult r = run_cmd("table --from 2.2 --to 4.0 --step 0.2");
  CHECK(r.status == 0);
  CHECK(count_lines(r.out) == 11);  // header + 10 rows
  CHECK(r.out.rfind("p,q,constant,method,argmax_a\n", 0) == 0);
  std::size_t closed = 0;
  for (std::size_t pos = 0; (pos = r.out.find("ClosedForm", pos)) != std::string::npos;
       ++pos) {
    ++closed;
  }
  CHECK(closed == 10);

  const CmdResult single = run_cmd("table --from 3 --to 3 --step 1");
  CHECK(single.status == 0);
  CHECK(count_lines(single.out) == 2);

  const CmdResult twice = run_cmd("table --from 2.2 --to 4.0 --step 0.2");
  CHECK(twice.out == r.out);  // byte-stable
}

TEST_CASE("table rejects an empty or invalid range") {
  CHECK(run_cmd("table --from 5 --to 4 --step 1").status == 2);
  CHECK(run_cmd("table --from 2.2 --to 4 --step 0").status == 2);
  CHECK(run_cmd("table --from 1.5 --to 4 --step 0.5").status == 2);
  CHECK(run_cmd("table --from 3 --to 4 --step 1 --q-rule fixed:0.5").status == 2);
  CHECK(run_cmd("table --from 3 --to 4 --step 1 --q-rule sometimes").status == 2);
}

TEST_CASE("table above p = 4 flags numeric rows") {
  const CmdResult r = run_cmd("table --from 4.5 --to 5.0 --step 0.5");
  CHECK(r.status == 0);
  std::size_t numeric = 0;
  for (std::size_t pos = 0; (pos = r.out.find("NumericMax", pos)) != std::string::npos;
       ++pos) {
    ++numeric;
  }
  CHECK(numeric == 2);
}

TEST_CASE("scan emits a parsable csv curve") {
  const CmdResult r = run_cmd("scan --p 3 --q 2 --n 11");
  CHECK(r.status == 0);
  CHECK(count_lines(r.out) == 12);
  CHECK(r.out.rfind("a,diagonal_objective,offdiag_objective\n", 0) == 0);
  CHECK(r.out.find("\n0,") != std::string::npos);
  CHECK(r.out.find("\n1,") != std::string::npos);
  const CmdResult again = run_cmd("scan --p 3 --q 2 --n 11");
  CHECK(again.out == r.out);
  const CmdResult js = run_cmd("scan --p 3 --q 2 --n 11 --json");
  CHECK(js.status == 0);
  const nlohmann::json j = nlohmann::json::parse(js.out);
  CHECK(j.at("points").size() == 11);
  CHECK(j.at("argmax").at("branch") == "OffDiagonal");
}

TEST_CASE("verify exits zero on a passing run and honors seeds") {
  const CmdResult r = run_cmd("verify --p 3 --q 3 --trials 500 --seed 42");
  CHECK(r.status == 0);
  CHECK(r.out.find("verdict    = PASS") != std::string::npos);
  const CmdResult again = run_cmd("verify --p 3 --q 3 --trials 500 --seed 42");
  CHECK(again.out == r.out);

  const CmdResult via_env = run_cmd_env("HL_SEED=42", "verify --p 3 --q 3 --trials 500");
  CHECK(via_env.out == r.out);

  const CmdResult flag_wins =
      run_cmd_env("HL_SEED=43", "verify --p 3 --q 3 --trials 500 --seed 42");
  CHECK(flag_wins.out == r.out);

  const CmdResult other = run_cmd_env("HL_SEED=43", "verify --p 3 --q 3 --trials 500");
  CHECK(other.out != r.out);

  const CmdResult bad_env = run_cmd_env("HL_SEED=banana", "verify --p 3 --q 3 --trials 500");
  CHECK(bad_env.status == 2);

  const CmdResult json_run = run_cmd("verify --p 3 --q 3 --trials 500 --seed 42 --json");
  CHECK(json_run.status == 0);
  const nlohmann::json j = nlohmann::json::parse(json_run.out);
  CHECK(j.at("pass") == true);
  CHECK(j.at("seed") == 42);
}

TEST_CASE("verify rejects invalid arguments") {
  CHECK(run_cmd("verify --p 3 --q 3 --trials 0").status == 2);
  CHECK(run_cmd("verify --p 2 --q 3 --trials 100").status == 2);
  CHECK(run_cmd("verify --p 3 --q 0.5 --trials 100").status == 2);
}

TEST_CASE("witness prints the attaining polynomial") {
  const CmdResult r = run_cmd("witness --p 3 --q 2");
  CHECK(r.status == 0);
  CHECK(r.out.find("OffDiagonal") != std::string::npos);
  CHECK(r.out.find("1.587401052") != std::string::npos);
  const CmdResult js = run_cmd("witness --p 3 --q 2 --json");
  CHECK(js.status == 0);
  const nlohmann::json j = nlohmann::json::parse(js.out);
  CHECK(std::fabs(j.at("ratio").get<double>() - std::pow(2.0, 2.0 / 3.0)) <= 1e-8);
  CHECK(j.at("exploratory") == false);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cmd("").status == 2);
  CHECK(run_cmd("frobnicate --p 3").status == 2);
  CHECK(run_cmd("constant").status == 2);
  CHECK(run_cmd("constant --p 3 --q 0.2").status == 2);
}

}  // TEST_SUITE("cli")
