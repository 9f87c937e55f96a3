#include "quintic/bring.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace quintic {

namespace {

// Fraction of the distance to the nearest branch point used as step length.
// rho * ln(1/rho)^2 is maximal at rho = e^-2, which minimises work per unit
// path length for an O(N^2) Taylor recurrence.
constexpr double kStepFraction = 0.15;
constexpr double kDetourTrigger = 0.05;
constexpr double kDetourRadius = 0.1;
constexpr int kArcChords = 12;
constexpr long kMaxSteps = 100000;
constexpr mpfr_prec_t kInnerBits = 64;

PrecisionCtx inner_ctx(const PrecisionCtx& ctx) {
  PrecisionCtx c = ctx;
  c.guard_digits = ctx.guard_digits + 20;
  return c;
}

// The four s* with 3125 s*^4 = 256: 4 * 5^(-5/4) * i^k.
std::vector<Complex> branch_points(mpfr_prec_t p) {
  Real radius(p);
  Real five(5, p);
  Real exponent(p);
  mpfr_set_si(exponent.get(), -5, MPFR_RNDN);
  mpfr_div_si(exponent.get(), exponent.get(), 4, MPFR_RNDN);
  mpfr_pow(radius.get(), five.get(), exponent.get(), MPFR_RNDN);
  radius *= 4;
  Real zero(p);
  return {Complex(radius, zero), Complex(zero, radius), Complex(-radius, zero),
          Complex(zero, -radius)};
}

double distance_to_branch(const Complex& s, const std::vector<Complex>& bps) {
  double best = 1e300;
  for (const auto& b : bps) best = std::min(best, abs(s - b).to_double());
  return best;
}

// Polyline from 0 to s, with a semicircular detour when the chord passes
// within kDetourTrigger of a branch point.
std::vector<Complex> plan_path(const Complex& s, const std::vector<Complex>& bps, mpfr_prec_t p) {
  std::vector<Complex> path{Complex(p)};
  const Real len = abs(s);
  const Complex u = s / len;  // unit direction
  const double total = len.to_double();
  for (const auto& b : bps) {
    // Coordinates of b along and across the chord.
    Complex local = b * conj(u);
    const double along = local.re.to_double();
    const double across = local.im.to_double();
    if (along <= 0.0 || along >= total || std::fabs(across) >= kDetourTrigger) continue;
    // Arc on the side opposite the branch point; exactly on the chord: left of travel.
    const double side = across > 0.0 ? -1.0 : 1.0;
    const double start = along - kDetourRadius;
    path.push_back(u * Real::from_double(start, p));
    const bool ends_inside = total - along < kDetourRadius;
    const int chords = ends_inside ? kArcChords / 2 : kArcChords;
    for (int k = 1; k <= chords; ++k) {
      const double theta = M_PI * k / kArcChords;  // 0 .. pi measured from the start point
      const double x = along - kDetourRadius * std::cos(theta);
      const double y = side * kDetourRadius * std::sin(theta);
      path.push_back(u * Complex::from_double(x, y, p));
    }
    break;
  }
  path.push_back(s);
  return path;
}

// One Taylor step of dz/ds = 1/(5 z^4 - 1) from (s0, z0) by h with `order`
// terms. Returns false when the tail estimate exceeds the tolerance.
bool taylor_step(const Complex& z0, const Complex& h, int order, const Real& tol, Complex& z1) {
  const mpfr_prec_t p = z0.prec();
  std::vector<Complex> z, z2, z4, D;
  z.reserve(order + 1);
  z2.reserve(order + 1);
  z4.reserve(order + 1);
  D.reserve(order + 1);
  z.push_back(z0);
  for (int k = 0; k < order; ++k) {
    Complex acc(p);
    for (int i = 0; i <= k; ++i) fma_acc(acc, z[i], z[k - i]);
    z2.push_back(std::move(acc));
    Complex acc4(p);
    for (int i = 0; i <= k; ++i) fma_acc(acc4, z2[i], z2[k - i]);
    z4.push_back(std::move(acc4));
    Complex dk = z4[k] * 5;
    if (k == 0) dk = dk - 1;
    D.push_back(std::move(dk));
    // (k+1) D_0 z_{k+1} = [k == 0] - sum_{j=1..k} D_j (k-j+1) z_{k-j+1}
    Complex rhs(k == 0 ? 1 : 0, 0, p);
    for (int j = 1; j <= k; ++j) {
      Complex t = D[j] * z[k - j + 1];
      t *= static_cast<long>(k - j + 1);
      rhs -= t;
    }
    z.push_back(rhs / (D[0] * static_cast<long>(k + 1)));
  }
  // Tail: the last two terms must be negligible.
  Real ah = abs(h);
  Real hp(1, p);
  mpfr_pow_ui(hp.get(), ah.get(), static_cast<unsigned long>(order - 1), MPFR_RNDN);
  Real tail = abs(z[order - 1]) * hp + abs(z[order]) * hp * ah;
  if (tail > tol * max(Real(1, p), abs(z0))) return false;
  Complex acc = z[order];
  for (int k = order - 1; k >= 0; --k) acc = acc * h + z[k];
  z1 = std::move(acc);
  return true;
}

}  // namespace

std::string_view to_string(BringStrategy s) {
  switch (s) {
    case BringStrategy::Series: return "series";
    case BringStrategy::OdeContinuation: return "ode";
    case BringStrategy::NewtonOnly: return "newton";
    case BringStrategy::PureRadical: return "pure_radical";
  }
  return "unknown";
}

std::string_view to_string(StrategyChoice s) {
  switch (s) {
    case StrategyChoice::Auto: return "auto";
    case StrategyChoice::Series: return "series";
    case StrategyChoice::Ode: return "ode";
  }
  return "unknown";
}

StrategyChoice parse_strategy(std::string_view text) {
  if (text == "auto") return StrategyChoice::Auto;
  if (text == "series") return StrategyChoice::Series;
  if (text == "ode") return StrategyChoice::Ode;
  throw SolverError(ErrorCode::InvalidArgument, "bring.strategy",
                    "unknown strategy '" + std::string(text) + "' (auto|series|ode)");
}

Complex bring_series_argument(const Complex& s, const PrecisionCtx& ctx) {
  Complex s2 = with_prec(s, ctx.bits()) * s;
  return s2 * s2 * 3125 / 256;
}

Real bring_residual(const Complex& z, const Complex& s, const PrecisionCtx& ctx) {
  Complex z2 = with_prec(z, std::max(z.prec(), ctx.bits())) * z;
  return abs(z2 * z2 * z - z - s);
}

Complex hyper4f3(const Complex& x, const PrecisionCtx& ctx, long* terms) {
  const mpfr_prec_t p = ctx.bits() + kInnerBits;
  if (abs(x) > Real::from_double(0.9, p))
    throw SolverError(ErrorCode::SeriesOutOfRange, "bring.hyper4f3",
                      "|x| = " + format_real(abs(x), 6) + " exceeds 0.9");
  const Real cutoff = pow10(-(ctx.digits + 10), p);
  const long limit = ctx.series_term_limit();
  const Complex xw = with_prec(x, p);
  Complex sum(1, 0, p);
  Complex term(1, 0, p);
  int small_run = 0;
  long k = 0;
  for (; small_run < 3; ++k) {
    if (k >= limit)
      throw SolverError(ErrorCode::SeriesDivergence, "bring.hyper4f3",
                        "no convergence within " + std::to_string(limit) + " terms");
    // term_{k+1}/term_k = 32 (5k+1)(5k+2)(5k+3)(5k+4) / (625 (2k+1)(4k+3)(4k+5)(k+1)) * x
    Real ratio(32 * (5 * k + 1) * (5 * k + 2), p);
    ratio *= (5 * k + 3) * (5 * k + 4);
    ratio /= 625 * (2 * k + 1) * (k + 1);
    ratio /= (4 * k + 3) * (4 * k + 5);
    term = term * xw;
    term *= ratio;
    sum += term;
    if (abs(term) < cutoff * abs(sum))
      ++small_run;
    else
      small_run = 0;
  }
  if (terms) *terms = k;
  return with_prec(sum, ctx.bits());
}

Complex bring_newton(const Complex& z0, const Complex& s, const PrecisionCtx& ctx, int* iterations) {
  const mpfr_prec_t p = ctx.bits() + kInnerBits;
  Complex z = with_prec(z0, p);
  const Complex sw = with_prec(s, p);
  auto residual_of = [&](const Complex& w, Complex& f, Complex& w4) {
    Complex w2 = w * w;
    w4 = w2 * w2;
    f = w4 * w - w - sw;
    return abs(f);
  };
  Complex f(p), z4(p);
  Real res = residual_of(z, f, z4);
  int it = 0;
  for (; it < 200 && !res.is_zero(); ++it) {
    Complex next = z - f / (z4 * 5 - 1);
    Complex fn(p), n4(p);
    Real rn = residual_of(next, fn, n4);
    if (!(rn < res)) break;
    z = std::move(next);
    f = std::move(fn);
    z4 = std::move(n4);
    res = std::move(rn);
  }
  if (iterations) *iterations = it;
  return with_prec(z, ctx.bits());
}

Complex bring_root_continuation(const Complex& s, const PrecisionCtx& ctx, long* steps) {
  const PrecisionCtx ic = inner_ctx(ctx);
  const mpfr_prec_t p = ic.bits();
  if (steps) *steps = 0;
  if (s.is_zero()) return Complex(ctx.bits());
  const std::vector<Complex> bps = branch_points(p);
  const Complex sw = with_prec(s, p);
  for (const auto& b : bps)
    if (abs(sw - b) <= pow10(-(ctx.digits / 4), p))
      throw SolverError(ErrorCode::NearBranchPoint, "bring.continuation",
                        "s is within 10^-" + std::to_string(ctx.digits / 4) +
                            " of a branch point (double root of the Bring form)");

  const double target_digits = ic.digits + ic.guard_digits + 5;
  const int order = static_cast<int>(std::ceil(target_digits / std::log10(1.0 / kStepFraction))) + 2;
  const Real tol = pow10(-(ic.digits + ic.guard_digits), p);
  const std::vector<Complex> path = plan_path(sw, bps, p);

  Complex z(p);
  long count = 0;
  for (std::size_t leg = 1; leg < path.size(); ++leg) {
    Complex here = path[leg - 1];
    const Complex& there = path[leg];
    while (true) {
      Complex remaining = there - here;
      Real rem = abs(remaining);
      if (rem.is_zero()) break;
      double radius = distance_to_branch(here, bps);
      Real h_len = min(rem, Real::from_double(kStepFraction * radius, p));
      bool last = h_len == rem;
      Complex h = remaining * (h_len / rem);
      Complex z1(p);
      int halvings = 0;
      while (!taylor_step(z, h, order, tol, z1)) {
        if (++halvings > 40)
          throw SolverError(ErrorCode::StepLimitExceeded, "bring.continuation",
                            "Taylor step could not meet the tail tolerance");
        h /= 2;
        last = false;
      }
      z = std::move(z1);
      here = last ? there : here + h;
      if (++count > kMaxSteps)
        throw SolverError(ErrorCode::StepLimitExceeded, "bring.continuation",
                          "more than " + std::to_string(kMaxSteps) + " steps");
      if (last) break;
    }
  }
  if (steps) *steps = count;
  return bring_newton(z, s, ctx);
}

BringSolution solve_bring(const Complex& s, const PrecisionCtx& ctx, StrategyChoice choice) {
  const mpfr_prec_t p = ctx.bits();
  BringSolution out{Complex(p), BringStrategy::Series, Real(p), 0};
  if (s.is_zero()) return out;
  const Complex x = bring_series_argument(s, ctx);
  bool series = choice == StrategyChoice::Series ||
                (choice == StrategyChoice::Auto && abs(x) <= Real::from_double(0.8, p));
  if (series) {
    long terms = 0;
    Complex v = hyper4f3(x, ctx, &terms);
    out.z = bring_newton(-s * v, s, ctx);
    out.strategy = BringStrategy::Series;
    out.terms_or_steps = terms;
  } else {
    long steps = 0;
    out.z = bring_root_continuation(s, ctx, &steps);
    out.strategy = BringStrategy::OdeContinuation;
    out.terms_or_steps = steps;
  }
  out.residual = bring_residual(out.z, s, ctx);
  return out;
}

}  // namespace quintic
