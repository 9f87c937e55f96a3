#include <random>

#include "doctest.h"
#include "golden_values.hpp"
#include "quintic/oracle.hpp"
#include "quintic/sampling.hpp"
#include "quintic/tschirnhaus.hpp"
#include "support.hpp"

using namespace quintic;
using testing::C;
using testing::tol10;

namespace {

MonicQuintic golden_quintic(const PrecisionCtx& ctx) {
  return testing::quintic({golden::kM, golden::kN, golden::kP, golden::kQ, golden::kR}, ctx);
}

Real ab_scale(const BringReduction& red) {
  return max(Real(1, red.A.prec()), max(abs(red.A), abs(red.B)));
}

// max(|Poly4|, |Poly3|, |Poly2|) / max(1, |A|, |B|)
Real vanish_ratio(const Poly& transformed, const PrecisionCtx& ctx) {
  const mpfr_prec_t p = ctx.bits();
  Real worst(p);
  for (std::size_t k = 2; k <= 4; ++k) worst = max(worst, abs(transformed.coeff(k, p)));
  Real scale = max(Real(1, p), max(abs(transformed.coeff(0, p)), abs(transformed.coeff(1, p))));
  return worst / scale;
}

Complex substitute(const Complex& x, const TschirnhausParams& t, const PrecisionCtx& ctx) {
  Poly quartic(std::vector<Complex>{t.a, t.b, t.c, t.d, Complex(1, 0, ctx.bits())});
  return -eval(quartic, x, ctx);
}

}  // namespace

TEST_SUITE("tschirnhaus") {

TEST_CASE("printed matrix entries") {
  const auto ctx = PrecisionCtx::with_digits(30);
  auto f = testing::quintic({"2", "0", "0", "3", "7"}, ctx);
  const Complex zero(ctx.bits());
  PolyMatrix5 m = build_matrix(f, C("1", ctx), zero, zero, C("1", ctx));
  // M25 = m - d
  CHECK(m(1, 4).degree() == 0);
  CHECK(abs(m(1, 4)[0] - C("1", ctx)).is_zero());
  // M21 = r
  CHECK(abs(m(1, 0)[0] - C("7", ctx)).is_zero());
  // M22 = -y + q - a
  REQUIRE(m(1, 1).degree() == 1);
  CHECK(abs(m(1, 1)[0] - C("2", ctx)).is_zero());
  CHECK(abs(m(1, 1)[1] + C("1", ctx)).is_zero());
}

TEST_CASE("x^5 - 1 with zero parameters transforms to y^5 + 1") {
  const auto ctx = PrecisionCtx::with_digits(50);
  auto f = testing::quintic({"0", "0", "0", "0", "-1"}, ctx);
  const Complex zero(ctx.bits());
  Poly y = transformed_poly(f, zero, zero, zero, zero, ctx);
  REQUIRE(y.degree() == 5);
  CHECK(abs(y[0] - C("1", ctx)) <= tol10(-45, ctx));
  for (std::size_t k = 1; k < 5; ++k) CHECK(abs(y.coeff(k, ctx.bits())) <= tol10(-45, ctx));
}

TEST_CASE("zero parameters give the power-sum resultant") {
  // With a = b = c = d = 0 the transformed roots are -x_i^4.
  const auto ctx = PrecisionCtx::with_digits(50);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    MonicQuintic f = random_quintic(rng, ctx, 10);
    const Complex zero(ctx.bits());
    Poly y = transformed_poly(f, zero, zero, zero, zero, ctx);
    auto roots = aberth_solve(f.as_poly(), ctx);
    Poly expect = Poly::constant(C("1", ctx));
    for (const auto& x : roots) expect = expect * Poly::linear(ipow(x, 4), C("1", ctx));
    for (std::size_t k = 0; k <= 5; ++k)
      CHECK(abs(y.coeff(k, ctx.bits()) - expect.coeff(k, ctx.bits())) <=
            tol10(-30, ctx) * max_coeff_abs(expect, ctx));
  }
}

TEST_CASE("un-normalised determinant has y^5 coefficient -1") {
  const auto ctx = PrecisionCtx::with_digits(30);
  auto f = golden_quintic(ctx);
  Poly det = det5(build_matrix(f, C("1", ctx), C("2", ctx), C("3", ctx), C("4", ctx)), ctx);
  REQUIRE(det.degree() == 5);
  CHECK(abs(det.leading() + C("1", ctx)).is_zero());
}

TEST_CASE("solve_a examples") {
  const auto ctx = PrecisionCtx::with_digits(50);
  const Complex zero(ctx.bits());
  auto q5 = testing::quintic({"0", "0", "0", "5", "0"}, ctx);
  CHECK(abs(solve_a(q5, zero, zero, zero, ctx) - C("4", ctx)) <= tol10(-45, ctx));
  CHECK(abs(printed::a(q5, zero, zero, zero, ctx) - C("4", ctx)) <= tol10(-45, ctx));
  auto m1 = testing::quintic({"1", "0", "0", "0", "0"}, ctx);
  CHECK(abs(solve_a(m1, zero, zero, zero, ctx) - C("-0.2", ctx)) <= tol10(-45, ctx));
  CHECK(abs(printed::a(m1, zero, zero, zero, ctx) - C("-0.2", ctx)) <= tol10(-45, ctx));
}

TEST_CASE("sampled a matches the printed closed form") {
  const auto ctx = PrecisionCtx::with_digits(50);
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    MonicQuintic f = random_quintic(rng, ctx);
    Complex b = random_millis(rng, 10000, ctx), c = random_millis(rng, 10000, ctx),
            d = random_millis(rng, 10000, ctx);
    Complex a = solve_a(f, b, c, d, ctx);
    CHECK(testing::rel(a, printed::a(f, b, c, d, ctx)) <= tol10(-35, ctx));
    Poly y = transformed_poly(f, a, b, c, d, ctx);
    CHECK(abs(y.coeff(4, ctx.bits())) <= tol10(-35, ctx) * max_coeff_abs(y, ctx));
  }
}

TEST_CASE("alpha on the golden quintic matches the printed expression") {
  const auto ctx = PrecisionCtx::with_digits(200);
  auto f = golden_quintic(ctx);
  QuadraticSolve alpha = solve_alpha(f, ctx);
  CHECK_FALSE(alpha.linear);
  CHECK(testing::rel(alpha.root, printed::alpha(f, ctx)) <= tol10(-185, ctx));
  // Defining property of the quadratic root.
  Complex back = (alpha.lead * alpha.root + alpha.mid) * alpha.root + alpha.constant;
  Real size = max(abs(alpha.lead) * norm(alpha.root), max(abs(alpha.mid) * abs(alpha.root), abs(alpha.constant)));
  CHECK(abs(back) <= tol10(-100, ctx) * size);
}

TEST_CASE("m = n = 0 alpha") {
  const auto ctx = PrecisionCtx::with_digits(50);
  auto f = testing::quintic({"0", "0", "0", "1", "0"}, ctx);
  CHECK(abs(printed::alpha_m_n_zero(f, ctx) - C("-0.5", ctx)) <= tol10(-45, ctx));
  QuadraticSolve alpha = solve_alpha(f, ctx);
  CHECK(alpha.linear);
  CHECK(abs(alpha.root - C("-0.5", ctx)) <= tol10(-45, ctx));

  auto g = testing::quintic({"0", "0", "2-1i", "3", "-4i"}, ctx);
  QuadraticSolve beta = solve_alpha(g, ctx);
  CHECK(beta.linear);
  CHECK(testing::rel(beta.root, printed::alpha_m_n_zero(g, ctx)) <= tol10(-40, ctx));
}

TEST_CASE("eta follows from xi by the affine d^1 part") {
  const auto ctx = PrecisionCtx::with_digits(50);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    MonicQuintic f = random_quintic(rng, ctx);
    Complex alpha = solve_alpha(f, ctx).root;
    EtaXi ex = solve_eta_xi(f, alpha, ctx);
    const Complex one(1, 0, ctx.bits());
    Complex guard = poly3_in_d(f, alpha, one, one, ctx)[1];
    Complex affine = ex.u0 + ex.u_eta + ex.u_xi;
    CHECK(abs(guard - affine) <= tol10(-25, ctx) * max(Real(1, ctx.bits()), abs(guard)));
    CHECK(testing::rel(ex.eta, printed::eta(f, alpha, ex.xi, ctx)) <= tol10(-30, ctx));
  }
}

TEST_CASE("eta and xi are stable under precision escalation") {
  const auto lo = PrecisionCtx::with_digits(100);
  const auto hi = PrecisionCtx::with_digits(200);
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    std::mt19937_64 copy = rng;
    MonicQuintic f_lo = random_quintic(rng, lo);
    MonicQuintic f_hi = random_quintic(copy, hi);
    Complex a_lo = solve_alpha(f_lo, lo).root;
    Complex a_hi = solve_alpha(f_hi, hi).root;
    EtaXi e_lo = solve_eta_xi(f_lo, a_lo, lo);
    EtaXi e_hi = solve_eta_xi(f_hi, a_hi, hi);
    CHECK(testing::rel(e_lo.eta, e_hi.eta) <= tol10(-80, hi));
    CHECK(testing::rel(e_lo.xi, e_hi.xi) <= tol10(-80, hi));
  }
}

TEST_CASE("golden quintic reduction") {
  const auto ctx = PrecisionCtx::with_digits(200);
  auto f = golden_quintic(ctx);
  BringReduction red = reduce_to_bring(f, ctx);
  CHECK_FALSE(red.shift_applied);
  CHECK_FALSE(red.identity);
  CHECK(red.kind == ReductionKind::Generic);
  CHECK(vanish_ratio(red.transformed, ctx) <= tol10(-150, ctx));
  // Poly3 as a polynomial in d vanishes identically after eta, xi.
  for (const auto& c : poly3_in_d(f, red.params.alpha, red.params.eta, red.params.xi, ctx))
    CHECK(abs(c) <= tol10(-150, ctx) * ab_scale(red));
  CHECK(testing::rel(red.s, C(golden::kS, ctx)) <= tol10(-50, ctx));
  // s (-A)^(5/4) + B = 0
  Complex def = red.s * pow_rational(-red.A, 5, 4, ctx) + red.B;
  CHECK(abs(def) <= tol10(-190, ctx) * max(abs(pow_rational(red.A, 5, 4, ctx)), abs(red.B)));
  CHECK(testing::rel(red.params.b, red.params.alpha * red.params.d + red.params.xi) <= tol10(-195, ctx));
  CHECK(testing::rel(red.params.c, red.params.d + red.params.eta) <= tol10(-195, ctx));
  CHECK(red.params.a_formula_gap <= tol10(-150, ctx));
}

TEST_CASE("every Cardano root of the d-cubic is a valid choice") {
  const auto ctx = PrecisionCtx::with_digits(100);
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 10; ++trial) {
    MonicQuintic f = random_quintic(rng, ctx);
    for (int k = 0; k < 3; ++k) {
      TschirnhausParams t = solve_params(f, ctx, k);
      Poly y = transformed_poly(f, t.a, t.b, t.c, t.d, ctx);
      CHECK(vanish_ratio(y, ctx) <= tol10(-50, ctx));
    }
  }
}

TEST_CASE("substitution maps roots to roots") {
  const auto ctx = PrecisionCtx::with_digits(50);
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 20; ++trial) {
    MonicQuintic f = random_quintic(rng, ctx);
    BringReduction red = reduce_to_bring(f, ctx);
    REQUIRE_FALSE(red.identity);
    auto roots = aberth_solve(red.reduced.as_poly(), ctx);
    for (const auto& x : roots) {
      Complex y = substitute(x, red.params, ctx);
      Complex v = ipow(y, 5) + red.A * y + red.B;
      CHECK(abs(v) <= tol10(-25, ctx) * ab_scale(red));
    }
  }
}

TEST_CASE("x^5 - 1 is its own Bring-Jerrard form") {
  for (int digits : {50, 200}) {
    const auto ctx = PrecisionCtx::with_digits(digits);
    auto f = testing::quintic({"0", "0", "0", "0", "-1"}, ctx);
    BringReduction red = reduce_to_bring(f, ctx);
    CHECK(red.identity);
    CHECK(red.kind == ReductionKind::PureRadicalA);
    CHECK(abs(red.B + C("1", ctx)).is_zero());
    CHECK(vanish_ratio(red.transformed, ctx) <= half_precision_tol(ctx));
  }
}

TEST_CASE("m = 0 and 2m^2 = 5n inputs reduce") {
  const auto ctx = PrecisionCtx::with_digits(50);
  auto m0 = testing::quintic({"0", "1340", "12.3491", "-239.182", "339.21817"}, ctx);
  BringReduction a = reduce_to_bring(m0, ctx);
  CHECK(vanish_ratio(a.transformed, ctx) <= half_precision_tol(ctx));
  auto deg = testing::quintic({"5", "10", "1-2i", "3", "4"}, ctx);
  BringReduction b = reduce_to_bring(deg, ctx);
  CHECK(b.params.alpha_quadratic.linear);
  CHECK(vanish_ratio(b.transformed, ctx) <= half_precision_tol(ctx));
}

TEST_CASE("shift coherence of the reduction") {
  // The transformed roots of a shifted quintic carry the same information:
  // roots of the shifted reduction map back to roots of the original.
  const auto ctx = PrecisionCtx::with_digits(50);
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 10; ++trial) {
    MonicQuintic f = random_quintic(rng, ctx, 100);
    Complex t = random_millis(rng, 3000, ctx);
    MonicQuintic g = f.shifted(t, ctx);
    auto xs = aberth_solve(f.as_poly(), ctx);
    for (const auto& x : xs) CHECK(abs(g.eval(x + t, ctx)) <= tol10(-35, ctx) * g.scale(ctx));
    BringReduction red = reduce_to_bring(g, ctx);
    for (const auto& x : xs) {
      Complex y = substitute(x + t, red.params, ctx);
      CHECK(abs(ipow(y, 5) + red.A * y + red.B) <= tol10(-20, ctx) * ab_scale(red));
    }
  }
}

TEST_CASE("shift ladder is fixed") {
  const auto ctx = PrecisionCtx::with_digits(30);
  auto ladder = shift_ladder(ctx);
  CHECK(abs(ladder[0] - C("1", ctx)).is_zero());
  CHECK(abs(ladder[3] - C("-1i", ctx)).is_zero());
  CHECK(abs(ladder[7] - C("1-1i", ctx)).is_zero());
}

}  // TEST_SUITE
