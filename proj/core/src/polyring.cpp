#include "quintic/polyring.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace quintic {

Poly::Poly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Complex& c) { return Poly(std::vector<Complex>{c}); }

Poly Poly::linear(const Complex& c0, const Complex& c1) {
  return Poly(std::vector<Complex>{c0, c1});
}

Complex Poly::coeff(std::size_t i, mpfr_prec_t prec) const {
  return i < coeffs_.size() ? coeffs_[i] : Complex(prec);
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Complex(o.leading().prec()));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Complex(o.leading().prec()));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  r += b;
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  r -= b;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  mpfr_prec_t p = std::max(a.leading().prec(), b.leading().prec());
  std::vector<Complex> out(a.coeffs().size() + b.coeffs().size() - 1, Complex(p));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) fma_acc(out[i + j], a[i], b[j]);
  return Poly(std::move(out));
}

Poly operator*(const Poly& a, const Complex& k) {
  std::vector<Complex> out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) out.push_back(c * k);
  return Poly(std::move(out));
}

Complex eval(const Poly& poly, const Complex& x, const PrecisionCtx& ctx) {
  Complex acc(ctx.bits());
  for (std::size_t i = poly.coeffs().size(); i-- > 0;) {
    acc = acc * x;
    acc += poly[i];
  }
  return acc;
}

Real max_coeff_abs(const Poly& poly, const PrecisionCtx& ctx) {
  Real m(ctx.bits());
  for (const auto& c : poly.coeffs()) m = max(m, abs(c));
  return m;
}

Real half_precision_tol(const PrecisionCtx& ctx) { return pow10(-(ctx.digits / 2), ctx.bits()); }

Poly det5(const PolyMatrix5& matrix, const PrecisionCtx& ctx) {
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (matrix(i, j).degree() > 1)
        throw SolverError(ErrorCode::InvalidArgument, "polyring.det5",
                          "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              ") has degree > 1");
  (void)ctx;
  // minor[mask] = determinant of rows (5 - popcount(mask))..4 restricted to the
  // columns in mask. Built from the bottom row upwards.
  std::array<Poly, 32> minor;
  minor[0] = Poly::constant(Complex(1, 0, ctx.bits()));
  for (int mask = 1; mask < 32; ++mask) {
    const int size = __builtin_popcount(static_cast<unsigned>(mask));
    const int row = 5 - size;
    Poly acc;
    int position = 0;
    for (int col = 0; col < 5; ++col) {
      if (!(mask & (1 << col))) continue;
      const Poly& entry = matrix(row, col);
      if (!entry.is_zero()) {
        Poly term = entry * minor[mask & ~(1 << col)];
        if (position % 2 == 0)
          acc += term;
        else
          acc -= term;
      }
      ++position;
    }
    minor[mask] = std::move(acc);
  }
  return minor[31];
}

std::vector<Complex> fit_coeffs(const std::vector<Sample>& samples, int degree,
                                const PrecisionCtx& ctx, const Real& noise_floor) {
  if (degree < 0 || samples.size() != static_cast<std::size_t>(degree) + 2)
    throw SolverError(ErrorCode::InvalidArgument, "polyring.fit_coeffs",
                      "need exactly degree + 2 samples");
  const mpfr_prec_t p = ctx.bits();
  const std::size_t n = static_cast<std::size_t>(degree) + 1;
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if ((samples[i].node - samples[j].node).is_zero())
        throw SolverError(ErrorCode::InvalidArgument, "polyring.fit_coeffs",
                          "interpolation nodes must be distinct");

  // Newton divided differences on the first n samples.
  std::vector<Complex> dd;
  dd.reserve(n);
  for (std::size_t i = 0; i < n; ++i) dd.push_back(with_prec(samples[i].value, p));
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (samples[i].node - samples[i - level].node);

  // Expand the Newton form into monomial coefficients.
  std::vector<Complex> coeffs(n, Complex(p));
  for (std::size_t k = n; k-- > 0;) {
    // coeffs <- coeffs * (x - node_k) + dd[k]
    const Complex& node = samples[k].node;
    for (std::size_t i = n - 1; i > 0; --i) coeffs[i] = coeffs[i - 1] - coeffs[i] * node;
    coeffs[0] = dd[k] - coeffs[0] * node;
  }

  const Sample& guard = samples.back();
  Poly fitted(coeffs);
  Complex predicted = eval(fitted, guard.node, ctx);
  Real scale(p);
  for (const auto& s : samples) scale = max(scale, abs(s.value));
  Real miss = abs(predicted - guard.value);
  if (miss > half_precision_tol(ctx) * scale && miss > noise_floor)
    throw SolverError(ErrorCode::DegreeGuardFailure, "polyring.fit_coeffs",
                      "guard node deviates from the degree-" + std::to_string(degree) +
                          " interpolant by " + format_real(miss, 6) + " (scale " +
                          format_real(scale, 6) + ")");
  return coeffs;
}

Poly deflate(const Poly& poly, const Complex& root, const PrecisionCtx& ctx) {
  if (poly.degree() < 1)
    throw SolverError(ErrorCode::InvalidArgument, "polyring.deflate",
                      "cannot deflate a constant polynomial");
  Complex value = eval(poly, root, ctx);
  Real scale = max_coeff_abs(poly, ctx);
  if (abs(value) > half_precision_tol(ctx) * scale)
    throw SolverError(ErrorCode::NotARoot, "polyring.deflate",
                      "|p(root)| = " + format_real(abs(value), 6) + " exceeds tolerance");
  const std::size_t n = poly.coeffs().size();
  std::vector<Complex> q(n - 1, Complex(ctx.bits()));
  Complex carry = poly[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    q[i] = carry;
    carry = poly[i] + carry * root;
  }
  return Poly(std::move(q));
}

}  // namespace quintic
