// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "golden_values.hpp"
#include "quintic/bring.hpp"
#include "quintic/closedform.hpp"
#include "quintic/oracle.hpp"
#include "quintic/sampling.hpp"
#include "quintic/tschirnhaus.hpp"
#include "support.hpp"

using namespace quintic;
using testing::C;
using testing::tol10;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Verdict {
  bool ok = true;
  std::ostringstream detail;
  int failures = 0;

  // Records a failed instance; the first few are described.
  void fail(const std::string& what) {
    ok = false;
    if (++failures <= 3) detail << (failures > 1 ? "; " : "") << what;
  }
};

MonicQuintic golden_quintic(const PrecisionCtx& ctx) {
  return testing::quintic({golden::kM, golden::kN, golden::kP, golden::kQ, golden::kR}, ctx);
}

std::array<Complex, 5> oracle_roots(const MonicQuintic& f, const PrecisionCtx& ctx) {
  auto v = aberth_solve(f.as_poly(), ctx);
  return {v[0], v[1], v[2], v[3], v[4]};
}

std::string sci(const Real& x) { return format_real(x, 3); }

Real vanish_ratio(const Poly& transformed, const PrecisionCtx& ctx) {
  const mpfr_prec_t p = ctx.bits();
  Real worst(p);
  for (std::size_t k = 2; k <= 4; ++k) worst = max(worst, abs(transformed.coeff(k, p)));
  Real scale = max(Real(1, p), max(abs(transformed.coeff(0, p)), abs(transformed.coeff(1, p))));
  return worst / scale;
}

std::mt19937_64 rng_for(int criterion) {
  std::seed_seq seq{static_cast<std::uint32_t>(kSeed), static_cast<std::uint32_t>(criterion)};
  return std::mt19937_64(seq);
}

// The golden solve is shared by criteria 1 to 4.
const RootReport& golden_report() {
  static const RootReport report = [] {
    const auto ctx = PrecisionCtx::with_digits(200);
    return solve_quintic(golden_quintic(ctx), ctx);
  }();
  return report;
}

void golden_roots(Verdict& v) {
  const auto ctx = PrecisionCtx::with_digits(200);
  const RootReport& rep = golden_report();
  Complex s = C(golden::kS, ctx);
  Real s_gap = testing::rel(rep.reduction.s, s);
  if (s_gap > tol10(-50, ctx)) v.fail("s differs by " + sci(s_gap));
  std::array<const char*, 5> printed{golden::kRoot1, golden::kRoot2, golden::kRoot3, golden::kRoot4,
                                     golden::kRoot5};
  Real worst_gap(ctx.bits()), worst_residual(ctx.bits());
  for (std::size_t i = 0; i < 5; ++i) {
    Complex expect = C(printed[i], ctx);
    Real gap = abs(rep.roots[i] - expect) / abs(expect);
    worst_gap = max(worst_gap, gap);
    worst_residual = max(worst_residual, rep.residuals[i]);
    if (gap > tol10(-50, ctx)) v.fail("root " + std::to_string(i + 1) + " differs by " + sci(gap));
  }
  if (worst_residual > tol10(-150, ctx)) v.fail("residual " + sci(worst_residual));
  v.detail << (v.ok ? "" : "; ") << "s gap " << sci(s_gap) << ", max relative root gap " << sci(worst_gap)
           << ", max residual " << sci(worst_residual);
}

void bring_identity(Verdict& v) {
  const auto ctx = PrecisionCtx::with_digits(200);
  Complex s = C(golden::kS, ctx);
  BringSolution sol = solve_bring(s, ctx);
  if (sol.residual > tol10(-190, ctx)) v.fail("printed s residual " + sci(sol.residual));
  Real own = golden_report().bring.residual;
  if (own > tol10(-190, ctx)) v.fail("pipeline s residual " + sci(own));
  v.detail << (v.ok ? "" : "; ") << "|z^5 - z - s| = " << sci(sol.residual) << " (printed s), " << sci(own)
           << " (computed s), strategy " << to_string(sol.strategy);
}

void selection_evidence(Verdict& v) {
  const auto ctx = PrecisionCtx::with_digits(200);
  const RootReport& rep = golden_report();
  if (rep.selected_index != 0) v.fail("selected y" + std::to_string(rep.selected_index + 1));
  if (rep.candidate_residuals[0] > tol10(-150, ctx)) v.fail("y1 residual " + sci(rep.candidate_residuals[0]));
  std::array<const char*, 3> printed{golden::kCandidateResidual2, golden::kCandidateResidual3,
                                     golden::kCandidateResidual4};
  for (std::size_t i = 0; i < 3; ++i) {
    Real expect = abs(C(printed[i], ctx));
    const Real& got = rep.candidate_residuals[i + 1];
    if (abs(got - expect) > expect / 100)
      v.fail("y" + std::to_string(i + 2) + " residual " + sci(got) + " vs printed " + sci(expect));
  }
  v.detail << (v.ok ? "" : "; ") << "candidate residuals " << sci(rep.candidate_residuals[0]) << ", "
           << sci(rep.candidate_residuals[1]) << ", " << sci(rep.candidate_residuals[2]) << ", "
           << sci(rep.candidate_residuals[3]);
}

void vanishing(Verdict& v) {
  {
    const auto ctx = PrecisionCtx::with_digits(200);
    Real golden = vanish_ratio(golden_report().reduction.transformed, ctx);
    if (golden > tol10(-150, ctx)) v.fail("golden " + sci(golden));
    v.detail << "golden " << sci(golden);
  }
  const auto ctx = PrecisionCtx::with_digits(100);
  auto rng = rng_for(4);
  Real worst(ctx.bits());
  for (int i = 0; i < 100; ++i) {
    MonicQuintic f = random_quintic(rng, ctx);
    try {
      BringReduction red = reduce_to_bring(f, ctx);
      Real ratio = vanish_ratio(red.transformed, ctx);
      worst = max(worst, ratio);
      if (ratio > tol10(-50, ctx)) v.fail("instance " + std::to_string(i) + ": " + sci(ratio));
    } catch (const SolverError& e) {
      v.fail("instance " + std::to_string(i) + ": " + e.stage() + ": " + e.what());
    }
  }
  v.detail << ", worst of 100 random " << sci(worst);
}

void oracle_equivalence(Verdict& v) {
  const auto ctx = PrecisionCtx::with_digits(100);
  auto rng = rng_for(5);
  Real worst(ctx.bits());
  int forced = 0;
  for (int i = 0; i < 300; ++i) {
    MonicQuintic f = random_quintic(rng, ctx);
    // Forced degenerate families: m = 0; m = n = 0; 2m^2 - 5n = 0.
    switch (i % 10) {
      case 0: f.m = Complex(ctx.bits()); ++forced; break;
      case 1: f.m = Complex(ctx.bits()); f.n = Complex(ctx.bits()); ++forced; break;
      case 2: f.n = f.m * f.m * 2 / 5; ++forced; break;
      default: break;
    }
    try {
      RootReport rep = solve_quintic(f, ctx);
      RootMatch m = match_rootsets(rep.roots, oracle_roots(f, ctx));
      worst = max(worst, m.max_distance);
      if (m.max_distance > tol10(-50, ctx)) v.fail("instance " + std::to_string(i) + ": " + sci(m.max_distance));
    } catch (const SolverError& e) {
      v.fail("instance " + std::to_string(i) + ": " + e.stage() + ": " + e.what());
    }
  }
  v.detail << (v.ok ? "" : "; ") << "300 quintics (" << forced << " forced degenerate), worst distance "
           << sci(worst);
}

void trivial_roots(Verdict& v) {
  for (int digits : {50, 200}) {
    const auto ctx = PrecisionCtx::with_digits(digits);
    const Real tol = tol10(20 - digits, ctx);
    Real worst(ctx.bits());
    auto check = [&](const MonicQuintic& f, const std::array<Complex, 5>& expect, const std::string& name) {
      try {
        RootReport rep = solve_quintic(f, ctx);
        Real d = match_rootsets(rep.roots, expect).max_distance;
        worst = max(worst, d);
        if (d > tol) v.fail(name + " at " + std::to_string(digits) + " digits: " + sci(d));
      } catch (const SolverError& e) {
        v.fail(name + " at " + std::to_string(digits) + " digits: " + e.stage() + ": " + e.what());
      }
    };
    auto unit = [&](int k, int n) { return exp(Complex(Real(ctx.bits()), pi(ctx.bits()) * (2 * k) / n), ctx); };
    const Complex zero(ctx.bits());
    check(testing::quintic({"0", "0", "0", "0", "-1"}, ctx), {unit(0, 5), unit(1, 5), unit(2, 5), unit(3, 5), unit(4, 5)},
          "x^5-1");
    check(testing::quintic({"0", "0", "0", "-1", "0"}, ctx), {zero, unit(0, 4), unit(1, 4), unit(2, 4), unit(3, 4)},
          "x^5-x");
    check(testing::quintic({"0", "0", "0", "0", "1"}, ctx),
          {-unit(0, 5), -unit(1, 5), -unit(2, 5), -unit(3, 5), -unit(4, 5)}, "x^5+1");
    auto rng = rng_for(6);
    for (int i = 0; i < 50; ++i) {
      auto roots = random_roots(rng, ctx);
      check(quintic_from_roots(roots, ctx), roots, "from-roots " + std::to_string(i));
    }
    v.detail << (digits == 50 ? "" : ", ") << "worst at " << digits << " digits " << sci(worst);
  }
}

void dual_path(Verdict& v) {
  const auto ctx = PrecisionCtx::with_digits(100);
  auto rng = rng_for(7);
  std::uniform_real_distribution<double> radius(0.0, 0.8), angle(-3.141592653589793, 3.141592653589793);
  Real worst(ctx.bits());
  for (int i = 0; i < 50; ++i) {
    const double r = radius(rng), t = angle(rng);
    Complex x = Complex::from_double(r * std::cos(t), r * std::sin(t), ctx.bits());
    Complex s = pow_rational(x * 256 / 3125, 1, 4, ctx);
    try {
      // Raw series value, not Newton-polished, against the continuation.
      Complex series = -s * hyper4f3(bring_series_argument(s, ctx), ctx);
      Complex ode = bring_root_continuation(s, ctx);
      Real d = abs(series - ode);
      worst = max(worst, d);
      if (d > tol10(-90, ctx)) v.fail("point " + std::to_string(i) + ": " + sci(d));
    } catch (const SolverError& e) {
      v.fail("point " + std::to_string(i) + ": " + e.stage() + ": " + e.what());
    }
  }
  v.detail << (v.ok ? "" : "; ") << "50 points, worst |series - ode| " << sci(worst);
}

void degree_guards(Verdict& v) {
  const auto ctx = PrecisionCtx::with_digits(50);
  auto rng = rng_for(8);
  int reductions = 0;
  for (int i = 0; i < 200; ++i) {
    MonicQuintic f = random_quintic(rng, ctx);
    // reduce_once runs every guarded extraction at the base precision with no
    // escalation, so any guard miss surfaces as DegreeGuardFailure.
    try {
      BringReduction red = reduce_once(f, ctx);
      ++reductions;
      if (red.precision_used != ctx.digits) v.fail("instance " + std::to_string(i) + " escalated");
    } catch (const SolverError& e) {
      v.fail("instance " + std::to_string(i) + ": " + std::string(to_string(e.code())) + " at " + e.stage());
    }
  }
  v.detail << (v.ok ? "" : "; ") << reductions << "/200 reductions with every guard node inside tolerance";
}

void property_suite(Verdict& v) {
  const auto ctx = PrecisionCtx::with_digits(50);
  const Real half = half_precision_tol(ctx);
  auto rng = rng_for(9);
  int vieta = 0, conj_ok = 0, shift_ok = 0, deflation = 0;
  for (int i = 0; i < 100; ++i) {
    MonicQuintic f = random_quintic(rng, ctx);
    Complex t = random_millis(rng, 3000, ctx);
    const std::string tag = "instance " + std::to_string(i);
    try {
      RootReport rep = solve_quintic(f, ctx);
      const Real tol = half * f.scale(ctx);
      if (rep.vieta_sum_error <= tol && rep.vieta_product_error <= tol)
        ++vieta;
      else
        v.fail(tag + " Vieta");

      RootReport bar = solve_quintic(f.conjugated(), ctx);
      std::array<Complex, 5> conj_roots;
      for (std::size_t k = 0; k < 5; ++k) conj_roots[k] = conj(rep.roots[k]);
      if (match_rootsets(bar.roots, conj_roots).max_distance <= half)
        ++conj_ok;
      else
        v.fail(tag + " conjugation");

      RootReport moved = solve_quintic(f.shifted(t, ctx), ctx);
      std::array<Complex, 5> back;
      for (std::size_t k = 0; k < 5; ++k) back[k] = moved.roots[k] - t;
      if (match_rootsets(back, oracle_roots(f, ctx)).max_distance <= half)
        ++shift_ok;
      else
        v.fail(tag + " shift");

      const Complex& r1 = rep.roots[0];
      QuarticCoeffs a = deflate_quintic(f, r1, ctx);
      Poly b = deflate(f.as_poly(), r1, ctx);
      const Real dtol = tol10(15 - ctx.digits, ctx) * f.scale(ctx) * max(Real(1, ctx.bits()), ipow(Complex(abs(r1), Real(ctx.bits())), 4).re);
      if (abs(a.p3 - b[3]) <= dtol && abs(a.p2 - b[2]) <= dtol && abs(a.p1 - b[1]) <= dtol &&
          abs(a.p0 - b[0]) <= dtol)
        ++deflation;
      else
        v.fail(tag + " deflation");
    } catch (const SolverError& e) {
      v.fail(tag + ": " + e.stage() + ": " + e.what());
    }
  }
  v.detail << (v.ok ? "" : "; ") << "Vieta " << vieta << "/100, conjugation " << conj_ok << "/100, shift "
           << shift_ok << "/100, deflation " << deflation << "/100";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Verdict&)> run;
  };
  const std::vector<Criterion> criteria{
      {"golden roots", golden_roots},         {"Bring identity", bring_identity},
      {"selection evidence", selection_evidence}, {"vanishing checks", vanishing},
      {"oracle equivalence", oracle_equivalence}, {"trivial-root suites", trivial_roots},
      {"hypergeometric dual-path", dual_path}, {"degree guards", degree_guards},
      {"property suite", property_suite},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.fail(std::string("unexpected exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.ok) ++failed;
    std::printf("%s %d %s (%.1fs): %s\n", v.ok ? "PASS" : "FAIL", index, c.name, seconds, v.detail.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
