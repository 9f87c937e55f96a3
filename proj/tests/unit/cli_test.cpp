#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "golden_values.hpp"
#include "json.hpp"
#include "report.hpp"
#include "support.hpp"

using json = nlohmann::ordered_json;
using testing::C;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "quintic");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = quintic::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("quintic_cli_test_" + name);
  std::ofstream(path) << text;
  return path;
}

// CSV rows without the two timing columns.
std::vector<std::string> strip_timing(const std::string& csv) {
  std::vector<std::string> rows;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    std::string kept;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (i != 4 && i != 5) kept += cells[i] + ",";
    rows.push_back(kept);
  }
  return rows;
}

bool is_string_field(const json& j, const char* key) { return j.contains(key) && j[key].is_string(); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("golden solve produces a schema-complete report that verifies") {
  Outcome r = run({"solve", "--m", "-200i", "--n", "1340", "--p", "12.34910", "--q", "-239.18200", "--r",
                   "339.2181700", "--digits", "200", "--json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["roots"].size() == 5);
  REQUIRE(j["residuals"].size() == 5);
  for (const auto& root : j["roots"]) {
    CHECK(is_string_field(root, "re"));
    CHECK(is_string_field(root, "im"));
  }
  for (const auto& res : j["residuals"]) CHECK(res.is_string());
  const json& d = j["diagnostics"];
  for (const char* key : {"alpha", "xi", "eta", "d", "A", "B", "s", "strategy", "shift", "precision_used"})
    CHECK_MESSAGE(is_string_field(d, key), key);
  CHECK(d["candidate_residuals"].size() == 4);
  const json& in = j["input"];
  for (const char* key : {"m", "n", "p", "q", "r", "digits", "seed"}) CHECK_MESSAGE(is_string_field(in, key), key);
  CHECK(d["strategy"] == "ode");

  const auto ctx = quintic::PrecisionCtx::with_digits(200);
  std::array<const char*, 5> printed{golden::kRoot1, golden::kRoot2, golden::kRoot3, golden::kRoot4,
                                     golden::kRoot5};
  for (std::size_t i = 0; i < 5; ++i) {
    quintic::Complex z(quintic::parse_real(j["roots"][i]["re"].get<std::string>(), ctx),
                       quintic::parse_real(j["roots"][i]["im"].get<std::string>(), ctx));
    CHECK(testing::rel(z, C(printed[i], ctx)) <= testing::tol10(-50, ctx));
  }

  auto path = write_temp("golden.json", r.out);
  Outcome v = run({"verify", path.string()});
  CHECK(v.code == 0);

  // One root moved by 1e-10 fails the residual check.
  json bad = j;
  std::string re = bad["roots"][2]["re"].get<std::string>();
  auto moved = quintic::parse_real(re, ctx) + quintic::pow10(-10, ctx.bits());
  bad["roots"][2]["re"] = quintic::format_real(moved, 200);
  auto bad_path = write_temp("perturbed.json", bad.dump());
  Outcome w = run({"verify", bad_path.string()});
  CHECK(w.code == 2);
  CHECK(w.out.find("FAIL") != std::string::npos);
}

TEST_CASE("fifth roots of unity in text mode") {
  Outcome r = run({"solve", "--m", "0", "--n", "0", "--p", "0", "--q", "0", "--r", "-1", "--digits", "50"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1.0000000000") != std::string::npos);
}

TEST_CASE("round trip on other inputs") {
  for (std::vector<std::string> coeffs : {std::vector<std::string>{"0", "0", "0", "-1", "0"},
                                          std::vector<std::string>{"1-2i", "3", "0.5i", "-7", "2+1i"},
                                          std::vector<std::string>{"0", "1340", "12.3491", "-239.182", "339.21817"}}) {
    Outcome r = run({"solve", "--m", coeffs[0], "--n", coeffs[1], "--p", coeffs[2], "--q", coeffs[3], "--r",
                     coeffs[4], "--digits", "60", "--json"});
    REQUIRE(r.code == 0);
    auto path = write_temp("roundtrip.json", r.out);
    CHECK(run({"verify", path.string()}).code == 0);
  }
}

TEST_CASE("usage and parse errors exit 1") {
  Outcome bogus = run({"solve", "--m", "bogus"});
  CHECK(bogus.code == 1);
  CHECK(bogus.err.find("--m") != std::string::npos);
  CHECK(run({"solve", "--digits", "10"}).code == 1);
  CHECK(run({"solve", "--strategy", "newton"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);

  auto path = write_temp("malformed.json", "{\"roots\": [");
  CHECK(run({"verify", path.string()}).code == 1);
  CHECK(run({"verify", "/nonexistent/quintic_report.json"}).code == 1);
}

TEST_CASE("QUINTIC_DIGITS sets the default precision and the flag wins") {
  ::setenv("QUINTIC_DIGITS", "40", 1);
  Outcome env = run({"solve", "--r", "-1", "--json"});
  Outcome flag = run({"solve", "--r", "-1", "--digits", "60", "--json"});
  ::unsetenv("QUINTIC_DIGITS");
  REQUIRE(env.code == 0);
  REQUIRE(flag.code == 0);
  CHECK(json::parse(env.out)["input"]["digits"] == "40");
  CHECK(json::parse(flag.out)["input"]["digits"] == "60");
}

TEST_CASE("bench output") {
  Outcome empty = run({"bench", "--count", "0"});
  CHECK(empty.code == 0);
  CHECK(empty.out == "seed,index,digits,strategy,cf_ms,oracle_ms,match_distance,status\n");

  Outcome a = run({"bench", "--count", "10", "--digits", "50", "--seed", "7"});
  Outcome b = run({"bench", "--count", "10", "--digits", "50", "--seed", "7"});
  CHECK(a.code == 0);
  auto rows = strip_timing(a.out);
  CHECK(rows.size() == 11);
  CHECK(rows == strip_timing(b.out));
  const auto ctx = quintic::PrecisionCtx::with_digits(50);
  std::istringstream in(a.out);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    auto last = line.rfind(',');
    auto prev = line.rfind(',', last - 1);
    CHECK(line.substr(last + 1) == "ok");
    CHECK(quintic::parse_real(line.substr(prev + 1, last - prev - 1), ctx) <= testing::tol10(-25, ctx));
  }
}

TEST_CASE("report verification catches a broken Vieta product") {
  quintic::cli::SolveInput in;
  in.r = "-1";
  in.digits = 50;
  const auto ctx = quintic::PrecisionCtx::with_digits(50);
  auto report = quintic::solve_quintic(testing::quintic({"0", "0", "0", "0", "-1"}, ctx), ctx);
  json j = quintic::cli::report_json(report, in);
  for (const auto& c : quintic::cli::verify_report(j)) CHECK_MESSAGE(c.ok, c.name);
  j["input"]["r"] = "-1.0001";
  bool any_failed = false;
  for (const auto& c : quintic::cli::verify_report(j)) any_failed = any_failed || !c.ok;
  CHECK(any_failed);
}

}  // TEST_SUITE
