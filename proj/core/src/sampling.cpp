#include "quintic/sampling.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace quintic {

namespace {

Real millis(long k, mpfr_prec_t p) { return Real::from_decimal(std::to_string(k) + "e-3", p); }

long part_bound(double max_magnitude) {
  return static_cast<long>(std::floor(max_magnitude * 1000.0 / std::sqrt(2.0)));
}

}  // namespace

Complex random_millis(std::mt19937_64& rng, long bound, const PrecisionCtx& ctx) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  const long re = dist(rng);
  const long im = dist(rng);
  return Complex(millis(re, ctx.bits()), millis(im, ctx.bits()));
}

MonicQuintic random_quintic(std::mt19937_64& rng, const PrecisionCtx& ctx, double max_magnitude) {
  const long bound = part_bound(max_magnitude);
  MonicQuintic f;
  for (Complex* c : {&f.m, &f.n, &f.p, &f.q, &f.r}) *c = random_millis(rng, bound, ctx);
  return f;
}

std::array<Complex, 5> random_roots(std::mt19937_64& rng, const PrecisionCtx& ctx,
                                    double max_magnitude) {
  const long bound = part_bound(max_magnitude);
  std::array<Complex, 5> roots;
  for (auto& z : roots) z = random_millis(rng, bound, ctx);
  return roots;
}

MonicQuintic quintic_from_roots(const std::array<Complex, 5>& roots, const PrecisionCtx& ctx) {
  Poly acc = Poly::constant(Complex(1, 0, ctx.bits()));
  for (const auto& z : roots) acc = acc * Poly::linear(-z, Complex(1, 0, ctx.bits()));
  const mpfr_prec_t p = ctx.bits();
  return {acc.coeff(4, p), acc.coeff(3, p), acc.coeff(2, p), acc.coeff(1, p), acc.coeff(0, p)};
}

}  // namespace quintic
