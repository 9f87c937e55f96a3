#include "quintic/tschirnhaus.hpp"

#include <string>
#include <utility>
#include <vector>

#include "quintic/closedform.hpp"

namespace quintic {

namespace {

struct Measured {
  Complex value;
  Real scale;
};

struct Fitted {
  std::vector<Complex> coeffs;  // lowest power first
  Real scale;                   // largest raw magnitude seen while sampling
};

Real noise_floor(const Real& raw, const PrecisionCtx& ctx);

// Samples f at the integer nodes 0..degree+1 (the last is the guard) and fits.
template <class F>
Fitted sample_and_fit(F&& f, int degree, const PrecisionCtx& ctx, const char* stage) {
  std::vector<Sample> samples;
  samples.reserve(static_cast<std::size_t>(degree) + 2);
  Real scale(ctx.bits());
  for (long node = 0; node <= degree + 1; ++node) {
    Measured mv = f(node);
    scale = max(scale, mv.scale);
    samples.push_back({Complex(node, 0, ctx.bits()), std::move(mv.value)});
  }
  try {
    return {fit_coeffs(samples, degree, ctx, noise_floor(scale, ctx)), scale};
  } catch (const SolverError& e) {
    throw e.with_stage(stage);
  }
}

Complex node_value(long k, const PrecisionCtx& ctx) { return Complex(k, 0, ctx.bits()); }

// Transformed polynomial with a solved from Poly4 = 0, for given alpha, xi,
// eta and d (b = alpha d + xi, c = d + eta).
Poly reduced_poly(const MonicQuintic& f, const Complex& alpha, const Complex& xi,
                  const Complex& eta, const Complex& d, const PrecisionCtx& ctx) {
  Complex b = alpha * d + xi;
  Complex c = d + eta;
  Complex a = solve_a(f, b, c, d, ctx);
  return transformed_poly(f, a, b, c, d, ctx);
}

// Poly3 as a quadratic in d at fixed alpha, xi, eta.
Fitted poly3_fit(const MonicQuintic& f, const Complex& alpha, const Complex& xi,
                 const Complex& eta, const PrecisionCtx& ctx, const char* stage) {
  return sample_and_fit(
      [&](long node) {
        Poly y = reduced_poly(f, alpha, xi, eta, node_value(node, ctx), ctx);
        return Measured{y.coeff(3, ctx.bits()), max_coeff_abs(y, ctx)};
      },
      2, ctx, stage);
}

// Rounding floor of a quantity sampled from determinants whose coefficients
// reach `raw`: half the guard digits above the working precision.
Real noise_floor(const Real& raw, const PrecisionCtx& ctx) {
  return pow10(-(ctx.digits + ctx.guard_digits / 2), ctx.bits()) * raw;
}

// A sampled coefficient counts as zero when it is 10^(-digits/2) below its
// siblings or under the rounding floor.
bool negligible(const Real& value, const Real& siblings, const Real& raw, const PrecisionCtx& ctx) {
  return value <= half_precision_tol(ctx) * siblings || value <= noise_floor(raw, ctx);
}

QuadraticSolve solve_quadratic(Complex lead, Complex mid, Complex constant, const Real& raw,
                               const PrecisionCtx& ctx, const char* stage) {
  const Real siblings = max(abs(lead), max(abs(mid), abs(constant)));
  QuadraticSolve out{Complex(ctx.bits()), lead, mid, constant, false};
  if (negligible(abs(lead), siblings, raw, ctx)) {
    if (negligible(abs(mid), siblings, raw, ctx)) {
      // All three at the rounding floor: every value solves it; keep 0.
      if (abs(constant) <= noise_floor(raw, ctx)) {
        out.trivial = true;
        return out;
      }
      throw SolverError(ErrorCode::DegenerateLeading, stage,
                        "quadratic and linear coefficients both vanish");
    }
    out.linear = true;
    out.root = -constant / mid;
    return out;
  }
  Complex disc = mid * mid - lead * constant * 4;
  out.root = (-mid + sqrt_principal(disc, ctx)) / (lead * 2);
  return out;
}

}  // namespace

// ------------------------------------------------------------ MonicQuintic

MonicQuintic MonicQuintic::shifted(const Complex& t, const PrecisionCtx& ctx) const {
  // Q(X) = P(X - t), built by Horner in polynomial arithmetic.
  const mpfr_prec_t p = ctx.bits();
  Poly lin = Poly::linear(-t, Complex(1, 0, p));
  Poly acc = Poly::constant(Complex(1, 0, p));
  for (const Complex* c : {&m, &n, &this->p, &q, &r}) acc = acc * lin + Poly::constant(*c);
  return {acc.coeff(4, p), acc.coeff(3, p), acc.coeff(2, p), acc.coeff(1, p), acc.coeff(0, p)};
}

MonicQuintic MonicQuintic::conjugated() const {
  return {conj(m), conj(n), conj(p), conj(q), conj(r)};
}

Poly MonicQuintic::as_poly() const {
  return Poly(std::vector<Complex>{r, q, p, n, m, Complex(1, 0, m.prec())});
}

Real MonicQuintic::scale(const PrecisionCtx& ctx) const {
  Real s(1, ctx.bits());
  for (const Complex* c : {&m, &n, &p, &q, &r}) s = max(s, abs(*c));
  return s;
}

Complex MonicQuintic::eval(const Complex& x, const PrecisionCtx& ctx) const {
  Complex acc = x + m;
  for (const Complex* c : {&n, &p, &q, &r}) acc = acc * x + *c;
  return with_prec(acc, std::max(acc.prec(), ctx.bits()));
}

MonicQuintic MonicQuintic::parse(const std::array<std::string_view, 5>& text,
                                 const PrecisionCtx& ctx) {
  return {parse_complex(text[0], ctx), parse_complex(text[1], ctx), parse_complex(text[2], ctx),
          parse_complex(text[3], ctx), parse_complex(text[4], ctx)};
}

// ------------------------------------------------------------ matrix

PolyMatrix5 build_matrix(const MonicQuintic& f, const Complex& a, const Complex& b,
                         const Complex& c, const Complex& d) {
  const Complex& m = f.m;
  const Complex& n = f.n;
  const Complex& p = f.p;
  const Complex& q = f.q;
  const Complex& r = f.r;
  const mpfr_prec_t prec = std::max({m.prec(), a.prec(), b.prec(), c.prec(), d.prec()});
  const Complex one(1, 0, prec);
  const Complex m2 = m * m;
  const Complex m3 = m2 * m;
  const Complex m4 = m3 * m;
  const Complex n2 = n * n;

  auto k = [](const Complex& v) { return Poly::constant(v); };
  // constant + sign * y
  auto ky = [&](const Complex& v, long sign) { return Poly::linear(v, Complex(sign, 0, prec)); };

  PolyMatrix5 M;
  M(0, 0) = ky(a, 1);
  M(0, 1) = k(b);
  M(0, 2) = k(c);
  M(0, 3) = k(d);
  M(0, 4) = k(one);

  M(1, 0) = k(r);
  M(1, 1) = ky(q - a, -1);
  M(1, 2) = k(p - b);
  M(1, 3) = k(n - c);
  M(1, 4) = k(m - d);

  M(2, 0) = k(d * r - m * r);
  M(2, 1) = k(r - m * q + d * q);
  M(2, 2) = ky(q - a - m * p + d * p, -1);
  M(2, 3) = k(p - b - m * n + d * n);
  M(2, 4) = k(n + d * m - m2 - c);

  M(3, 0) = k(n * r - m2 * r - c * r + d * m * r);
  M(3, 1) = k(m * r - d * r - m2 * q - c * q + d * m * q + n * q);
  M(3, 2) = k(n * p - r + d * m * p - d * q + m * q - m2 * p - c * p);
  M(3, 3) = ky(a + d * m * n - d * p - m2 * n - q + n2 + m * p - c * n, 1);
  M(3, 4) = k(b - c * m - m3 - p + d * m2 + m * n * 2 - d * n);

  M(4, 0) = k(b * r - m3 * r - d * n * r + d * m2 * r + m * n * r * 2 - p * r - c * m * r);
  M(4, 1) = k(b * q - c * m * q - n * r - d * m * r - d * n * q + c * r + m2 * r - m3 * q +
              m * n * q * 2 - p * q + d * m2 * q);
  M(4, 2) = k(c * q + m * n * p * 2 - d * n * p - p * p + b * p - n * q + d * m2 * p - m * r -
              d * m * q - c * m * p + m2 * q - m3 * p + d * r);
  M(4, 3) = k(d * m2 * n - d * m * p + c * p + d * q + m * n2 * 2 - c * m * n - m3 * n -
              n * p * 2 - m * q + m2 * p + b * n - d * n2 + r);
  M(4, 4) = ky(b * m - m * p * 2 + q + c * n - d * m * n * 2 - a + m2 * n * 3 - c * m2 + d * m3 -
                   n2 - m4 + d * p,
               -1);
  return M;
}

Poly transformed_poly(const MonicQuintic& f, const Complex& a, const Complex& b, const Complex& c,
                      const Complex& d, const PrecisionCtx& ctx) {
  const PolyMatrix5 matrix = build_matrix(f, a, b, c, d);
  Poly det = det5(matrix, ctx);
  // The y^5 coefficient is a product of one y-coefficient per row, so it is
  // measured against the product of the largest y-coefficient in each row.
  Real structural(1, ctx.bits());
  for (int i = 0; i < 5; ++i) {
    Real row(ctx.bits());
    for (int j = 0; j < 5; ++j)
      if (matrix(i, j).degree() == 1) row = max(row, abs(matrix(i, j)[1]));
    structural *= row;
  }
  if (det.degree() < 5 || abs(det.leading()) <= half_precision_tol(ctx) * structural)
    throw SolverError(ErrorCode::DegenerateTransform, "tschirnhaus.transformed_poly",
                      "determinant is not of degree 5 in y");
  Complex lead = det.leading();
  std::vector<Complex> coeffs;
  coeffs.reserve(6);
  for (std::size_t i = 0; i < 5; ++i) coeffs.push_back(det[i] / lead);
  coeffs.push_back(Complex(1, 0, ctx.bits()));
  return Poly(std::move(coeffs));
}

// ------------------------------------------------------------ parameter solves

Complex solve_a(const MonicQuintic& f, const Complex& b, const Complex& c, const Complex& d,
                const PrecisionCtx& ctx) {
  Fitted fit = sample_and_fit(
      [&](long node) {
        Poly y = transformed_poly(f, node_value(node, ctx), b, c, d, ctx);
        return Measured{y.coeff(4, ctx.bits()), max_coeff_abs(y, ctx)};
      },
      1, ctx, "tschirnhaus.solve_a");
  if (fit.coeffs[1].is_zero())
    throw SolverError(ErrorCode::DegenerateTransform, "tschirnhaus.solve_a",
                      "Poly4 does not depend on a");
  return -fit.coeffs[0] / fit.coeffs[1];
}

QuadraticSolve solve_alpha(const MonicQuintic& f, const PrecisionCtx& ctx) {
  const Complex zero(ctx.bits());
  Fitted quad = sample_and_fit(
      [&](long node) {
        Fitted in_d = poly3_fit(f, node_value(node, ctx), zero, zero, ctx, "tschirnhaus.solve_alpha");
        return Measured{in_d.coeffs[2], in_d.scale};
      },
      2, ctx, "tschirnhaus.solve_alpha");
  // Scaled by -5 so the leading coefficient is 2m^2 - 5n, the normalisation
  // under which the '+' branch gives the printed alpha.
  return solve_quadratic(quad.coeffs[2] * -5, quad.coeffs[1] * -5, quad.coeffs[0] * -5,
                         quad.scale, ctx, "tschirnhaus.solve_alpha");
}

EtaXi solve_eta_xi(const MonicQuintic& f, const Complex& alpha, const PrecisionCtx& ctx) {
  const char* stage = "tschirnhaus.solve_eta_xi";
  const mpfr_prec_t p = ctx.bits();
  Real scale(p);
  auto d1 = [&](long eta, long xi) {
    Fitted in_d = poly3_fit(f, alpha, Complex(xi, 0, p), Complex(eta, 0, p), ctx, stage);
    scale = max(scale, in_d.scale);
    return in_d.coeffs[1];
  };
  EtaXi out{Complex(p), Complex(p), d1(0, 0), Complex(p), Complex(p), {}};
  out.u_eta = d1(1, 0) - out.u0;
  out.u_xi = d1(0, 1) - out.u0;
  const Complex guard = d1(1, 1);
  const Real siblings = max(abs(out.u0), max(abs(out.u_eta), abs(out.u_xi)));
  if (abs(guard - (out.u0 + out.u_eta + out.u_xi)) > half_precision_tol(ctx) * max(siblings, abs(guard)))
    throw SolverError(ErrorCode::DegreeGuardFailure, stage,
                      "d^1 coefficient of Poly3 is not affine in (eta, xi)");
  if (negligible(abs(out.u_eta), siblings, scale, ctx))
    throw SolverError(ErrorCode::DegenerateLeading, stage, "d^1 coefficient does not depend on eta");

  auto eta_of = [&](const Complex& xi) { return -(out.u0 + out.u_xi * xi) / out.u_eta; };
  Fitted quad = sample_and_fit(
      [&](long node) {
        Complex xi = node_value(node, ctx);
        Fitted in_d = poly3_fit(f, alpha, xi, eta_of(xi), ctx, stage);
        return Measured{in_d.coeffs[0], in_d.scale};
      },
      2, ctx, stage);
  // Scaled by -125 u_eta^2, the normalisation of the printed xi3, xi2, xi1.
  Complex k = out.u_eta * out.u_eta * -125;
  out.xi_quadratic = solve_quadratic(quad.coeffs[2] * k, quad.coeffs[1] * k, quad.coeffs[0] * k,
                                     max(quad.scale, scale), ctx, stage);
  out.xi = out.xi_quadratic.root;
  out.eta = eta_of(out.xi);
  return out;
}

DSolve solve_d(const MonicQuintic& f, const Complex& alpha, const Complex& eta, const Complex& xi,
               const PrecisionCtx& ctx) {
  const char* stage = "tschirnhaus.solve_d";
  Fitted cubic = sample_and_fit(
      [&](long node) {
        Poly y = reduced_poly(f, alpha, xi, eta, node_value(node, ctx), ctx);
        return Measured{y.coeff(2, ctx.bits()), max_coeff_abs(y, ctx)};
      },
      3, ctx, stage);
  Real siblings(ctx.bits());
  for (const auto& c : cubic.coeffs) siblings = max(siblings, abs(c));
  if (negligible(abs(cubic.coeffs[3]), siblings, cubic.scale, ctx))
    throw SolverError(ErrorCode::DegenerateLeading, stage, "Poly2 is not cubic in d");
  DSolve out{Complex(ctx.bits()),
             {cubic.coeffs[3], cubic.coeffs[2], cubic.coeffs[1], cubic.coeffs[0]},
             {}};
  try {
    out.roots = cardano_roots(out.cubic[0], out.cubic[1], out.cubic[2], out.cubic[3], ctx);
  } catch (const SolverError& e) {
    throw e.with_stage(stage);
  }
  out.d = out.roots[0];
  return out;
}

std::array<Complex, 3> poly3_in_d(const MonicQuintic& f, const Complex& alpha, const Complex& eta,
                                  const Complex& xi, const PrecisionCtx& ctx) {
  Fitted fit = poly3_fit(f, alpha, xi, eta, ctx, "tschirnhaus.poly3_in_d");
  return {fit.coeffs[0], fit.coeffs[1], fit.coeffs[2]};
}

TschirnhausParams solve_params(const MonicQuintic& f, const PrecisionCtx& ctx, int d_root) {
  const mpfr_prec_t p = ctx.bits();
  TschirnhausParams out{Complex(p), Complex(p), Complex(p), Complex(p), Complex(p), Complex(p),
                        Complex(p), {Real(p), Real(p), Real(p)}, {}, {}, {}, Real(p)};
  out.alpha_quadratic = solve_alpha(f, ctx);
  out.alpha = out.alpha_quadratic.root;
  out.eta_xi = solve_eta_xi(f, out.alpha, ctx);
  out.eta = out.eta_xi.eta;
  out.xi = out.eta_xi.xi;
  out.cubic = solve_d(f, out.alpha, out.eta, out.xi, ctx);
  out.d = out.cubic.roots.at(static_cast<std::size_t>(d_root));
  out.b = out.alpha * out.d + out.xi;
  out.c = out.d + out.eta;
  out.a = solve_a(f, out.b, out.c, out.d, ctx);
  Complex printed_a = printed::a(f, out.b, out.c, out.d, ctx);
  out.a_formula_gap = abs(out.a - printed_a) / max(Real(1, p), abs(out.a));
  return out;
}

// ------------------------------------------------------------ reduction

std::array<Complex, 8> shift_ladder(const PrecisionCtx& ctx) {
  const mpfr_prec_t p = ctx.bits();
  return {Complex(1, 0, p), Complex(-1, 0, p), Complex(0, 1, p), Complex(0, -1, p),
          Complex(2, 0, p), Complex(-2, 0, p), Complex(1, 1, p), Complex(1, -1, p)};
}

namespace {

// A, B known: classify and set the Bring scaling.
void finish_reduction(BringReduction& out, const PrecisionCtx& ctx) {
  const mpfr_prec_t p = ctx.bits();
  const Real tol = half_precision_tol(ctx);
  const Real scale = max(Real(1, p), max(abs(out.A), abs(out.B)));
  if (abs(out.A) <= tol * scale) {
    out.kind = ReductionKind::PureRadicalA;
    return;
  }
  Complex minus_a = -out.A;
  out.quartic_root_scale = pow_rational(minus_a, 1, 4, ctx);
  if (abs(out.B) <= tol * scale) {
    out.kind = ReductionKind::PureRadicalB;
    return;
  }
  out.s = -out.B / pow_rational(minus_a, 5, 4, ctx);
  require_finite(out.s, "tschirnhaus.reduce");
}

}  // namespace

std::optional<BringReduction> reduce_trivially(const MonicQuintic& f, const PrecisionCtx& ctx) {
  const mpfr_prec_t p = ctx.bits();
  const Complex t = f.m / 5;
  MonicQuintic g = t.is_zero() ? f : f.shifted(t, ctx);
  const Real tol = half_precision_tol(ctx) * g.scale(ctx);
  if (abs(g.m) > tol || abs(g.n) > tol || abs(g.p) > tol) return std::nullopt;
  g.m = Complex(p);
  g.n = Complex(p);
  g.p = Complex(p);
  BringReduction out{g.q,  g.r,   Complex(p), Complex(p), t,
                     !t.is_zero(), 0, ctx.digits, ReductionKind::Generic,
                     g,    {},    g.as_poly()};
  out.identity = true;
  out.params = TschirnhausParams{};
  for (auto& v : out.params.vanish_residuals) v = Real(p);
  finish_reduction(out, ctx);
  return out;
}

BringReduction reduce_once(const MonicQuintic& f, const PrecisionCtx& ctx) {
  const mpfr_prec_t p = ctx.bits();
  BringReduction out{Complex(p), Complex(p), Complex(p), Complex(p), Complex(p),
                     false,      0,          ctx.digits, ReductionKind::Generic,
                     f,          {},         {}};
  out.params = solve_params(f, ctx);
  const TschirnhausParams& t = out.params;
  out.transformed = transformed_poly(f, t.a, t.b, t.c, t.d, ctx);
  out.A = out.transformed.coeff(1, p);
  out.B = out.transformed.coeff(0, p);

  Real largest = max_coeff_abs(out.transformed, ctx);
  for (int k = 0; k < 3; ++k)
    out.params.vanish_residuals[static_cast<std::size_t>(k)] =
        abs(out.transformed.coeff(static_cast<std::size_t>(4 - k), p)) / largest;
  const Real tol = half_precision_tol(ctx);
  for (int k = 0; k < 3; ++k)
    if (out.params.vanish_residuals[static_cast<std::size_t>(k)] > tol)
      throw SolverError(ErrorCode::CancellationFailure, "tschirnhaus.vanish",
                        "Poly" + std::to_string(4 - k) + " residual " +
                            format_real(out.params.vanish_residuals[static_cast<std::size_t>(k)], 6) +
                            " above 10^-" + std::to_string(ctx.digits / 2));

  finish_reduction(out, ctx);
  return out;
}

BringReduction reduce_to_bring(const MonicQuintic& f, const PrecisionCtx& ctx) {
  ctx.validate();
  std::string last_failure;
  for (int factor : {1, 2, 4}) {
    const PrecisionCtx c = factor == 1 ? ctx : ctx.escalated(factor);
    try {
      try {
        return reduce_once(f, c);
      } catch (const SolverError& e) {
        if (e.code() != ErrorCode::DegenerateLeading) throw;
      }
      if (auto trivial = reduce_trivially(f, c)) return std::move(*trivial);
      int attempts = 0;
      for (const Complex& t : shift_ladder(c)) {
        ++attempts;
        try {
          BringReduction out = reduce_once(f.shifted(t, c), c);
          out.shift = t;
          out.shift_applied = true;
          out.shift_attempts = attempts;
          return out;
        } catch (const SolverError& e) {
          if (e.code() != ErrorCode::DegenerateLeading) throw;
        }
      }
      throw SolverError(ErrorCode::ShiftLadderExhausted, "tschirnhaus.reduce_to_bring",
                        "every pre-shift left a degenerate leading coefficient");
    } catch (const SolverError& e) {
      if (e.code() != ErrorCode::CancellationFailure && e.code() != ErrorCode::DegreeGuardFailure)
        throw;
      last_failure = e.stage() + ": " + e.what();
    }
  }
  throw SolverError(ErrorCode::PrecisionExhausted, "tschirnhaus.reduce_to_bring",
                    "vanishing checks failed at x4 precision (" + last_failure + ")");
}

}  // namespace quintic
