#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "quintic/closedform.hpp"
#include "quintic/oracle.hpp"
#include "quintic/sampling.hpp"
#include "report.hpp"

namespace quintic::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;

int default_digits() {
  if (const char* env = std::getenv("QUINTIC_DIGITS")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
    }
  }
  return 200;
}

struct SolveArgs {
  SolveInput input;
  std::string strategy = "auto";
  std::string fallback = "none";
  bool json = false;
};

struct BenchArgs {
  int count = 10;
  std::vector<int> digits{50};
  std::uint64_t seed = 0;
  std::string strategy = "auto";
};

std::optional<MonicQuintic> parse_input(const SolveInput& in, const PrecisionCtx& ctx, std::ostream& err) {
  const std::pair<const char*, const std::string*> fields[] = {
      {"--m", &in.m}, {"--n", &in.n}, {"--p", &in.p}, {"--q", &in.q}, {"--r", &in.r}};
  MonicQuintic f;
  Complex* slots[] = {&f.m, &f.n, &f.p, &f.q, &f.r};
  for (std::size_t i = 0; i < 5; ++i) {
    try {
      *slots[i] = parse_complex(*fields[i].second, ctx);
    } catch (const ParseError& e) {
      err << "error: " << fields[i].first << " '" << *fields[i].second << "': " << e.what() << "\n";
      return std::nullopt;
    }
  }
  return f;
}

void print_text(const RootReport& report, int digits, std::ostream& out) {
  const int shown = std::max(1, digits - 15);
  for (std::size_t i = 0; i < 5; ++i)
    out << "r" << i + 1 << " = " << format_complex(report.roots[i], shown, MPFR_RNDZ) << "\n";
  for (std::size_t i = 0; i < 5; ++i)
    out << "residual r" << i + 1 << " = " << format_real(report.residuals[i], 3) << "\n";
  const BringReduction& red = report.reduction;
  out << "s = " << format_complex(red.s, shown, MPFR_RNDZ) << "\n";
  out << "strategy = " << to_string(report.bring.strategy) << "\n";
  out << "selected = y" << report.selected_index + 1 << "\n";
  if (red.shift_applied) out << "shift = " << format_complex(red.shift, 6) << "\n";
  out << "precision_used = " << report.precision_used << "\n";
}

void print_error(const SolverError& e, const BringReduction* red, std::ostream& err) {
  err << "error: " << to_string(e.code()) << " at " << e.stage() << ": " << e.what() << "\n";
  if (red) {
    err << "  A = " << format_complex(red->A, 20) << "\n";
    err << "  B = " << format_complex(red->B, 20) << "\n";
    err << "  s = " << format_complex(red->s, 20) << "\n";
  }
}

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  const SolveInput& in = args.input;
  PrecisionCtx ctx;
  SolveOptions options;
  try {
    ctx = PrecisionCtx::with_digits(in.digits, in.seed);
    ctx.validate();
    options.strategy = parse_strategy(args.strategy);
  } catch (const SolverError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::optional<MonicQuintic> f = parse_input(in, ctx, err);
  if (!f) return kExitUsage;

  try {
    RootReport report = solve_quintic(*f, ctx, options);
    if (args.json)
      out << report_json(report, in).dump(2) << "\n";
    else
      print_text(report, in.digits, out);
    return kExitOk;
  } catch (const SolverError& e) {
    if (args.fallback == "oracle") {
      try {
        std::vector<Complex> roots = aberth_solve(f->as_poly(), ctx);
        err << "warning: closed form failed (" << to_string(e.code()) << "); roots from the oracle\n";
        if (args.json) {
          out << fallback_json(roots, *f, in, e).dump(2) << "\n";
        } else {
          const int shown = std::max(1, in.digits - 15);
          for (std::size_t i = 0; i < roots.size(); ++i)
            out << "r" << i + 1 << " = " << format_complex(roots[i], shown, MPFR_RNDZ) << "\n";
          out << "strategy = oracle\n";
        }
        return kExitOk;
      } catch (const SolverError& oe) {
        err << "error: oracle fallback failed: " << oe.what() << "\n";
      }
    }
    std::optional<BringReduction> red;
    try {
      red = reduce_to_bring(*f, ctx);
    } catch (const SolverError&) {
    }
    if (args.json) out << error_json(e, in, red ? &*red : nullptr).dump(2) << "\n";
    print_error(e, red ? &*red : nullptr, err);
    return kExitFailure;
  }
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream file(path);
  if (!file) {
    err << "error: cannot open " << path << "\n";
    return kExitUsage;
  }
  std::vector<CheckResult> checks;
  try {
    nlohmann::ordered_json report = nlohmann::ordered_json::parse(file);
    checks = verify_report(report);
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed report: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: malformed number in report: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SolverError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: malformed report: " << e.what() << "\n";
    return kExitUsage;
  }
  bool ok = true;
  for (const auto& c : checks) {
    out << (c.ok ? "ok   " : "FAIL ") << c.name << " " << c.detail << "\n";
    ok = ok && c.ok;
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  StrategyChoice strategy;
  try {
    strategy = parse_strategy(args.strategy);
    for (int d : args.digits) PrecisionCtx::with_digits(d).validate();
  } catch (const SolverError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  using clock = std::chrono::steady_clock;
  auto ms = [](clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };
  out << "seed,index,digits,strategy,cf_ms,oracle_ms,match_distance,status\n";
  bool all_ok = true;
  for (int index = 0; index < args.count; ++index) {
    for (int digits : args.digits) {
      const PrecisionCtx ctx = PrecisionCtx::with_digits(digits, args.seed);
      std::seed_seq seq{static_cast<std::uint32_t>(args.seed), static_cast<std::uint32_t>(args.seed >> 32),
                        static_cast<std::uint32_t>(index)};
      std::mt19937_64 rng(seq);
      const MonicQuintic f = random_quintic(rng, ctx);

      std::string used = "-";
      std::string distance = "-";
      std::string status = "ok";
      double cf_ms = 0.0;
      double oracle_ms = 0.0;
      std::optional<RootReport> report;
      auto t0 = clock::now();
      try {
        report = solve_quintic(f, ctx, {strategy, true});
        used = std::string(to_string(report->bring.strategy));
      } catch (const SolverError& e) {
        status = "error:" + std::string(to_string(e.code()));
      }
      auto t1 = clock::now();
      cf_ms = ms(t1 - t0);
      std::vector<Complex> oracle;
      try {
        oracle = aberth_solve(f.as_poly(), ctx);
      } catch (const SolverError& e) {
        if (status == "ok") status = "oracle_error:" + std::string(to_string(e.code()));
      }
      oracle_ms = ms(clock::now() - t1);
      if (report && oracle.size() == 5) {
        std::array<Complex, 5> ys{oracle[0], oracle[1], oracle[2], oracle[3], oracle[4]};
        RootMatch match = match_rootsets(report->roots, ys);
        distance = format_real(match.max_distance, 3);
        if (match.max_distance > half_precision_tol(ctx)) status = "mismatch";
      }
      if (status != "ok") all_ok = false;
      std::ostringstream row;
      row.setf(std::ios::fixed);
      row.precision(3);
      row << args.seed << "," << index << "," << digits << "," << used << "," << cf_ms << ","
          << oracle_ms << "," << distance << "," << status << "\n";
      out << row.str() << std::flush;
    }
  }
  return all_ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form quintic solver (Bring-Jerrard reduction, hypergeometric root, Ferrari unwinding)"};
  app.require_subcommand(1);

  SolveArgs solve;
  solve.input.digits = default_digits();
  CLI::App* s = app.add_subcommand("solve", "Solve x^5 + m x^4 + n x^3 + p x^2 + q x + r = 0");
  s->add_option("--m", solve.input.m, "x^4 coefficient, e.g. -200i or 1.5-2e-3i")->capture_default_str();
  s->add_option("--n", solve.input.n, "x^3 coefficient")->capture_default_str();
  s->add_option("--p", solve.input.p, "x^2 coefficient")->capture_default_str();
  s->add_option("--q", solve.input.q, "x coefficient")->capture_default_str();
  s->add_option("--r", solve.input.r, "constant term")->capture_default_str();
  s->add_option("--digits", solve.input.digits, "significant decimal digits (env QUINTIC_DIGITS)")
      ->capture_default_str();
  s->add_option("--strategy", solve.strategy, "Bring root method")
      ->check(CLI::IsMember({"auto", "series", "ode"}))
      ->capture_default_str();
  s->add_option("--fallback", solve.fallback, "on closed-form failure")
      ->check(CLI::IsMember({"none", "oracle"}))
      ->capture_default_str();
  s->add_option("--seed", solve.input.seed, "oracle seed")->capture_default_str();
  s->add_flag("--json", solve.json, "print a JSON report");

  std::string report_path;
  CLI::App* v = app.add_subcommand("verify", "Recheck residuals and Vieta identities of a JSON report");
  v->add_option("report", report_path, "report file")->required();

  BenchArgs bench;
  CLI::App* b = app.add_subcommand("bench", "Closed form against the oracle on seeded random quintics (CSV)");
  b->add_option("--count", bench.count, "number of quintics")->check(CLI::NonNegativeNumber)->capture_default_str();
  b->add_option("--digits", bench.digits, "digit settings")->delimiter(',')->capture_default_str();
  b->add_option("--seed", bench.seed, "random seed")->capture_default_str();
  b->add_option("--strategy", bench.strategy, "Bring root method")
      ->check(CLI::IsMember({"auto", "series", "ode"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (s->parsed()) return cmd_solve(solve, out, err);
    if (v->parsed()) return cmd_verify(report_path, out, err);
    return cmd_bench(bench, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace quintic::cli
