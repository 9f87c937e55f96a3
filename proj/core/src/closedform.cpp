#include "quintic/closedform.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace quintic {

namespace {

Real max_abs(std::initializer_list<const Complex*> values, mpfr_prec_t p) {
  Real m(p);
  for (const Complex* v : values) m = max(m, abs(*v));
  return m;
}

// |q(x)| relative to sum |c_k| |x|^k.
Real relative_quartic_residual(const QuarticCoeffs& quartic, const Complex& x,
                               const PrecisionCtx& ctx) {
  // |q(x)| / (max(1, |p_i|) * max(1, |x|)^4); an absolute floor keeps roots
  // near zero of a quartic with p0 ~ 0 from looking inaccurate.
  const mpfr_prec_t p = ctx.bits();
  Real reach = max(Real(1, p), abs(x));
  reach = reach * reach;
  reach = reach * reach;
  const Real scale = max(Real(1, p), max_abs({&quartic.p3, &quartic.p2, &quartic.p1, &quartic.p0}, p));
  return abs(eval_quartic(quartic, x, ctx)) / (scale * reach);
}

// max(1, |m|, ..., |r|, |x|^5): magnitude of the largest term of f(x).
Real quintic_term_scale(const MonicQuintic& f, const Complex& x, const PrecisionCtx& ctx) {
  Real ax = abs(x);
  Real x5 = ax * ax;
  x5 = x5 * x5 * ax;
  return max(f.scale(ctx), x5);
}

}  // namespace

// ------------------------------------------------------------ Cardano

std::array<Complex, 3> cardano_roots(const Complex& c3, const Complex& c2, const Complex& c1,
                                     const Complex& c0, const PrecisionCtx& ctx) {
  const mpfr_prec_t p = ctx.bits();
  const Real tol = half_precision_tol(ctx);
  if (abs(c3) <= tol * max_abs({&c3, &c2, &c1, &c0}, p))
    throw SolverError(ErrorCode::DegenerateCubic, "closedform.cardano", "leading coefficient vanishes");

  const Complex c2sq = c2 * c2;
  const Complex c2cu = c2sq * c2;
  const Complex c3sq = c3 * c3;
  Complex delta = c1 * c1 * c1 * c3 * 4 - c1 * c1 * c2sq - c1 * c2 * c3 * c0 * 18 +
                  c0 * c0 * c3sq * 27 + c0 * c2cu * 4;
  Real sqrt3(3, p);
  sqrt3 = sqrt(sqrt3);
  const Complex radical = sqrt_principal(delta, ctx) * sqrt3 * c3 * 12;
  const Complex t1 = c1 * c2 * c3 * 36;
  const Complex t2 = c0 * c3sq * 108;
  const Complex t3 = c2cu * 8;
  const Complex base = t1 - t2 - t3;
  const Real x_scale = max_abs({&t1, &t2, &t3, &radical}, p);

  const Complex shift = -c2 / (c3 * 3);
  Complex x = base + radical;
  if (abs(x) <= tol * x_scale) x = base - radical;
  if (abs(x) <= tol * x_scale) {
    // Both signs cancel: a triple root.
    Complex resid = ((c3 * shift + c2) * shift + c1) * shift + c0;
    Real scale = max_abs({&c3, &c2, &c1, &c0}, p);
    Real as = abs(shift);
    if (abs(resid) > tol * scale * max(Real(1, p), as * as * as))
      throw SolverError(ErrorCode::CancellationFailure, "closedform.cardano",
                        "cube-root radicand cancels for both square-root signs");
    return {shift, shift, shift};
  }

  const Complex cube = pow_rational(x, 1, 3, ctx);
  const Complex q = (c1 * c3 * 3 - c2sq) * 2 / (c3 * 3);  // (2/3)(3 c1 c3 - c2^2)/c3
  Real half_sqrt3 = sqrt3 / 2;
  const Complex omega(Real(-1, p) / 2, half_sqrt3);
  std::array<Complex, 3> roots;
  Complex ck = cube;
  for (std::size_t k = 0; k < 3; ++k) {
    roots[k] = ck / (c3 * 6) - q / ck + shift;
    ck = ck * omega;
  }
  return roots;
}

// ------------------------------------------------------------ Ferrari

Complex eval_quartic(const QuarticCoeffs& quartic, const Complex& x, const PrecisionCtx& ctx) {
  Complex acc = x + quartic.p3;
  acc = acc * x + quartic.p2;
  acc = acc * x + quartic.p1;
  acc = acc * x + quartic.p0;
  return with_prec(acc, std::max(acc.prec(), ctx.bits()));
}

Complex ferrari_resolvent(const QuarticCoeffs& quartic, int index, const PrecisionCtx& ctx) {
  const Complex& p3 = quartic.p3;
  const Complex& p2 = quartic.p2;
  const Complex& p1 = quartic.p1;
  const Complex& p0 = quartic.p0;
  // (p3 g - p1)^2 = 4 (p3^2/4 + 2g - p2)(g^2 - p0), expanded and divided by -8:
  // g^3 - (p2/2) g^2 + ((p1 p3 - 4 p0)/4) g - (p1^2 + p3^2 p0 - 4 p2 p0)/8 = 0
  const Complex one(1, 0, ctx.bits());
  auto roots = cardano_roots(one, -p2 / 2, (p1 * p3 - p0 * 4) / 4,
                             -(p1 * p1 + p3 * p3 * p0 - p2 * p0 * 4) / 8, ctx);
  return roots.at(static_cast<std::size_t>(index));
}

std::array<Complex, 4> ferrari_roots(const QuarticCoeffs& quartic, const PrecisionCtx& ctx,
                                     int* resolvent_index) {
  const mpfr_prec_t p = ctx.bits();
  const Complex& p3 = quartic.p3;
  const Complex& p2 = quartic.p2;
  const Complex& p1 = quartic.p1;
  const Complex& p0 = quartic.p0;
  const Real tol = half_precision_tol(ctx);
  const Real accept = pow10(-(ctx.digits - 12), p);
  const Real scale = max(Real(1, p), max_abs({&p3, &p2, &p1, &p0}, p));
  Real best_worst(p);
  bool have_best = false;

  for (int index = 0; index < 3; ++index) {
    Complex g = ferrari_resolvent(quartic, index, ctx);
    Complex e = sqrt_principal(p3 * p3 / 4 + g * 2 - p2, ctx);
    Complex f(p);
    if (abs(e) <= tol * scale)
      f = sqrt_principal(g * g - p0, ctx);
    else
      f = (p3 * g - p1) / (e * 2);
    const Complex common = p3 * p3 + e * e * 4 - g * 16;
    const Complex cross = p3 * e * 4;
    const Complex r12 = sqrt_principal(common - cross + f * 16, ctx) / 4;
    const Complex r34 = sqrt_principal(common + cross - f * 16, ctx) / 4;
    const Complex base = -p3 / 4;
    const Complex half_e = e / 2;
    std::array<Complex, 4> roots{base + half_e + r12, base + half_e - r12, base - half_e + r34,
                                 base - half_e - r34};
    Real worst(p);
    for (const auto& y : roots) worst = max(worst, relative_quartic_residual(quartic, y, ctx));
    if (worst <= accept) {
      if (resolvent_index) *resolvent_index = index;
      return roots;
    }
    if (!have_best || worst < best_worst) {
      best_worst = worst;
      have_best = true;
    }
  }
  throw SolverError(ErrorCode::ResolventFailure, "closedform.ferrari",
                    "no resolvent root gives a valid factorisation (best relative residual " +
                        format_real(best_worst, 6) + ")");
}

// ------------------------------------------------------------ selection and deflation

Selection select_quintic_root(const MonicQuintic& f, const std::array<Complex, 4>& candidates,
                              const PrecisionCtx& ctx, bool require_separation) {
  const mpfr_prec_t p = ctx.bits();
  Selection out{Complex(p), 0, {Real(p), Real(p), Real(p), Real(p)}};
  for (std::size_t i = 0; i < 4; ++i) out.residuals[i] = abs(f.eval(candidates[i], ctx));
  Real best = out.residuals[0];
  for (const auto& r : out.residuals) best = min(best, r);
  // Ties within a factor 10 go to the smallest index.
  std::size_t win = 0;
  while (out.residuals[win] > best * 10) ++win;
  out.index = static_cast<int>(win);
  out.root = candidates[win];

  const Real& r = out.residuals[win];
  if (r > half_precision_tol(ctx) * quintic_term_scale(f, out.root, ctx))
    throw SolverError(ErrorCode::NotARoot, "closedform.select",
                      "no candidate satisfies the quintic (best residual " + format_real(r, 6) + ")");
  if (!require_separation) return out;
  const Real separation = pow10(ctx.digits / 4, p);
  for (std::size_t i = 0; i < 4; ++i) {
    if (i == win) continue;
    if (out.residuals[i] <= r * separation)
      throw SolverError(ErrorCode::AmbiguousSelection, "closedform.select",
                        "candidates " + std::to_string(win + 1) + " and " + std::to_string(i + 1) +
                            " both nearly satisfy the quintic (residuals " + format_real(r, 6) +
                            ", " + format_real(out.residuals[i], 6) + ")");
  }
  return out;
}

QuarticCoeffs deflate_quintic(const MonicQuintic& f, const Complex& r1, const PrecisionCtx& ctx) {
  Complex value = f.eval(r1, ctx);
  if (abs(value) > half_precision_tol(ctx) * quintic_term_scale(f, r1, ctx))
    throw SolverError(ErrorCode::NotARoot, "closedform.deflate",
                      "|f(r1)| = " + format_real(abs(value), 6) + " exceeds tolerance");
  const Complex r2 = r1 * r1;
  const Complex r3 = r2 * r1;
  const Complex r4 = r3 * r1;
  return {f.m + r1, f.n + r2 + f.m * r1, f.p + r1 * f.n + r3 + f.m * r2,
          f.q + r1 * f.p + r2 * f.n + r4 + f.m * r3};
}

// ------------------------------------------------------------ orchestration

namespace {

bool escalation_helps(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotARoot:
    case ErrorCode::AmbiguousSelection:
    case ErrorCode::ResolventFailure:
    case ErrorCode::CancellationFailure:
    case ErrorCode::DegreeGuardFailure:
    case ErrorCode::PrecisionExhausted:
      return true;
    default:
      return false;
  }
}

RootReport solve_at(const MonicQuintic& f, const PrecisionCtx& ctx, const SolveOptions& options) {
  BringReduction red = reduce_to_bring(f, ctx);
  PrecisionCtx cw = ctx;
  cw.digits = std::max(ctx.digits, red.precision_used);
  const mpfr_prec_t p = cw.bits();

  RootReport out;
  out.precision_used = cw.digits;
  out.shift_applied = red.shift;

  switch (red.kind) {
    case ReductionKind::PureRadicalA:
      // y^5 = -B; any fifth root serves, the quartic picks the matching x.
      out.y = pow_rational(-red.B, 1, 5, cw);
      out.bring = {out.y, BringStrategy::PureRadical, Real(p), 0};
      break;
    case ReductionKind::PureRadicalB:
      out.y = Complex(p);
      out.bring = {Complex(p), BringStrategy::PureRadical, Real(p), 0};
      break;
    case ReductionKind::Generic:
      out.bring = solve_bring(red.s, cw, options.strategy);
      out.y = red.quartic_root_scale * out.bring.z;
      break;
  }

  const TschirnhausParams& t = red.params;
  const MonicQuintic& g = red.reduced;
  Selection sel;
  if (red.identity) {
    // y = x: the Bring root is already a root of the (shifted) quintic.
    out.candidates.fill(out.y);
    sel = select_quintic_root(g, out.candidates, cw, false);
  } else {
    QuarticCoeffs tsch{t.d, t.c, t.b, t.a + out.y};
    out.candidates = ferrari_roots(tsch, cw);
    sel = select_quintic_root(g, out.candidates, cw);
  }
  out.selected_index = sel.index;
  out.candidate_residuals = sel.residuals;

  QuarticCoeffs rest = deflate_quintic(g, sel.root, cw);
  std::array<Complex, 4> others = ferrari_roots(rest, cw);
  out.roots = {sel.root, others[0], others[1], others[2], others[3]};
  if (red.shift_applied)
    for (auto& x : out.roots) x -= red.shift;

  // Verification against the caller's quintic.
  const Real tol = half_precision_tol(cw) * f.scale(cw);
  Complex sum = f.m;
  Complex prod(1, 0, p);
  for (std::size_t i = 0; i < 5; ++i) {
    out.residuals[i] = abs(f.eval(out.roots[i], cw));
    sum += out.roots[i];
    prod = prod * out.roots[i];
  }
  out.vieta_sum_error = abs(sum);
  out.vieta_product_error = abs(prod + f.r);
  out.reduction = std::move(red);
  for (std::size_t i = 0; i < 5; ++i)
    if (out.residuals[i] > tol)
      throw SolverError(ErrorCode::PrecisionExhausted, "closedform.verify",
                        "root " + std::to_string(i + 1) + " residual " +
                            format_real(out.residuals[i], 6) + " above tolerance");
  if (out.vieta_sum_error > tol || out.vieta_product_error > tol)
    throw SolverError(ErrorCode::PrecisionExhausted, "closedform.verify", "Vieta identities fail");
  return out;
}

}  // namespace

RootReport solve_quintic(const MonicQuintic& f, const PrecisionCtx& ctx, const SolveOptions& options) {
  ctx.validate();
  for (const Complex* c : {&f.m, &f.n, &f.p, &f.q, &f.r}) require_finite(*c, "closedform.input");
  const int max_factor = options.escalate ? 4 : 1;
  for (int factor = 1; factor <= max_factor; factor *= 2) {
    const PrecisionCtx c = factor == 1 ? ctx : ctx.escalated(factor);
    try {
      return solve_at(f, c, options);
    } catch (const SolverError& e) {
      SolverError wrapped = e.with_stage("closedform.solve_quintic");
      if (!escalation_helps(e.code()) || factor == max_factor) throw wrapped;
    }
  }
  throw SolverError(ErrorCode::PrecisionExhausted, "closedform.solve_quintic", "escalation exhausted");
}

}  // namespace quintic
