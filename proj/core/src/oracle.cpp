#include "quintic/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace quintic {

std::vector<Complex> aberth_solve(const Poly& poly, const PrecisionCtx& ctx, int* iterations) {
  const int deg = poly.degree();
  if (deg < 1)
    throw SolverError(ErrorCode::InvalidArgument, "oracle.aberth", "polynomial degree must be >= 1");
  const mpfr_prec_t p = ctx.bits() + 32;
  const std::size_t n = static_cast<std::size_t>(deg);

  // Monic copy and its derivative.
  std::vector<Complex> c;
  c.reserve(n + 1);
  for (const auto& v : poly.coeffs()) c.push_back(with_prec(v, p) / poly.leading());
  std::vector<Complex> dc;
  for (std::size_t i = 1; i <= n; ++i) dc.push_back(c[i] * static_cast<long>(i));
  auto horner = [](const std::vector<Complex>& cs, const Complex& x) {
    Complex acc = cs.back();
    for (std::size_t i = cs.size() - 1; i-- > 0;) acc = acc * x + cs[i];
    return acc;
  };

  Real radius(1, p);
  for (std::size_t i = 0; i < n; ++i) radius = max(radius, abs(c[i]) + 1);
  std::mt19937_64 rng(ctx.seed);
  std::uniform_real_distribution<double> jitter(0.0, 1.0);
  const double offset = 2.0 * M_PI * jitter(rng);
  std::vector<Complex> z;
  for (std::size_t k = 0; k < n; ++k) {
    // Evenly spaced angles plus a small per-root perturbation breaks symmetry.
    const double theta = offset + 2.0 * M_PI * (static_cast<double>(k) + 0.25 * jitter(rng)) / n;
    z.push_back(Complex::from_double(std::cos(theta), std::sin(theta), p) * radius);
  }

  // Residual scale: sum |c_i| |x|^i, the rounding-noise level of p(x).
  auto noise = [&](const Complex& x) {
    Real ax = abs(x);
    Real acc(p);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * ax + abs(c[i]);
    return acc;
  };

  const Real eps = pow10(-(ctx.digits + ctx.guard_digits), p);
  const long limit = 200L * ctx.digits;
  std::vector<bool> done(n, false);
  for (long it = 1; it <= limit; ++it) {
    bool all_done = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      Complex f = horner(c, z[k]);
      if (abs(f) <= eps * noise(z[k])) {
        done[k] = true;
        continue;
      }
      all_done = false;
      Complex ratio = f / horner(dc, z[k]);
      Complex sum(p);
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) sum += Complex(1, 0, p) / (z[k] - z[j]);
      Complex step = ratio / (Complex(1, 0, p) - ratio * sum);
      z[k] -= step;
      // Converged when the correction no longer moves the root.
      if (abs(step) <= eps * max(Real(1, p), abs(z[k]))) done[k] = true;
    }
    if (all_done) {
      if (iterations) *iterations = static_cast<int>(it);
      std::vector<Complex> out;
      for (const auto& r : z) out.push_back(with_prec(r, ctx.bits()));
      return out;
    }
  }
  throw SolverError(ErrorCode::NoConvergence, "oracle.aberth",
                    "no convergence after " + std::to_string(limit) + " iterations");
}

RootMatch match_rootsets(const std::array<Complex, 5>& xs, const std::array<Complex, 5>& ys) {
  const mpfr_prec_t p = std::max(xs[0].prec(), ys[0].prec());
  std::array<std::array<Real, 5>, 5> dist;
  Real biggest(p);
  for (std::size_t i = 0; i < 5; ++i) {
    biggest = max(biggest, max(abs(xs[i]), abs(ys[i])));
    for (std::size_t j = 0; j < 5; ++j) dist[i][j] = abs(xs[i] - ys[j]);
  }
  std::array<int, 5> perm{0, 1, 2, 3, 4};
  RootMatch best;
  bool first = true;
  do {
    Real worst = dist[0][static_cast<std::size_t>(perm[0])];
    for (std::size_t i = 1; i < 5; ++i) worst = max(worst, dist[i][static_cast<std::size_t>(perm[i])]);
    if (first || worst < best.max_distance) {
      best.max_distance = worst;
      best.pairing = perm;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  best.max_distance = best.max_distance / (biggest + 1);
  return best;
}

}  // namespace quintic
