#pragma once

// JSON reports for the command-line tool. Every number is a decimal string in
// the mpfield grammar so reports survive any precision.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "quintic/closedform.hpp"
#include "quintic/errors.hpp"

namespace quintic::cli {

struct SolveInput {
  std::string m = "0", n = "0", p = "0", q = "0", r = "0";
  int digits = 200;
  std::uint64_t seed = 0;
};

nlohmann::ordered_json input_json(const SolveInput& in);
nlohmann::ordered_json report_json(const RootReport& report, const SolveInput& in);
// Roots from the oracle after a closed-form failure. Diagnostics that only the
// closed-form path produces are left as empty strings.
nlohmann::ordered_json fallback_json(const std::vector<Complex>& roots, const MonicQuintic& f,
                             const SolveInput& in, const SolverError& cause);
nlohmann::ordered_json error_json(const SolverError& error, const SolveInput& in,
                          const BringReduction* reduction);

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

// Residual and Vieta checks of a stored report at the stored precision.
// Throws ParseError or nlohmann::ordered_json::exception on malformed reports.
std::vector<CheckResult> verify_report(const nlohmann::ordered_json& report);

}  // namespace quintic::cli
