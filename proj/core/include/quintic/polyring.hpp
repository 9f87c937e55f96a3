#pragma once

// Dense univariate polynomials over Complex, 5x5 determinants of matrices with
// entries of degree <= 1, and degree-guarded interpolation.

#include <array>
#include <cstddef>
#include <vector>

#include "quintic/mpfield.hpp"

namespace quintic {

// coeffs[i] multiplies x^i. Exact-zero leading coefficients are trimmed, so the
// zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Complex> coeffs);

  static Poly constant(const Complex& c);
  // c0 + c1 x
  static Poly linear(const Complex& c0, const Complex& c1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  const Complex& operator[](std::size_t i) const { return coeffs_[i]; }
  // Coefficient of x^i, zero (at `prec`) past the degree.
  Complex coeff(std::size_t i, mpfr_prec_t prec) const;
  const Complex& leading() const { return coeffs_.back(); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);

 private:
  void trim();
  std::vector<Complex> coeffs_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Complex& k);

// Horner evaluation.
Complex eval(const Poly& poly, const Complex& x, const PrecisionCtx& ctx);
// Largest coefficient magnitude; zero for the zero polynomial.
Real max_coeff_abs(const Poly& poly, const PrecisionCtx& ctx);

struct PolyMatrix5 {
  std::array<std::array<Poly, 5>, 5> entries;

  Poly& operator()(int row, int col) { return entries[row][col]; }
  const Poly& operator()(int row, int col) const { return entries[row][col]; }
};

// Cofactor expansion over column subsets (31 minors). Not normalised.
// Throws InvalidArgument if an entry has degree > 1.
Poly det5(const PolyMatrix5& matrix, const PrecisionCtx& ctx);

struct Sample {
  Complex node;
  Complex value;
};

// Interpolates the first degree+1 samples and checks the last one (the guard
// node) against the interpolant to 10^(-digits/2) relative to the largest
// sample magnitude; deviations below `noise_floor` are accepted as rounding.
// Returns degree+1 coefficients, lowest power first.
// Throws DegreeGuardFailure or InvalidArgument.
std::vector<Complex> fit_coeffs(const std::vector<Sample>& samples, int degree,
                                const PrecisionCtx& ctx, const Real& noise_floor = Real());

// Synthetic division by (x - root). Throws NotARoot when
// |poly(root)| > 10^(-digits/2) * max|coeff|.
Poly deflate(const Poly& poly, const Complex& root, const PrecisionCtx& ctx);

// 10^(-digits/2) at working precision; the library-wide "half precision" gate.
Real half_precision_tol(const PrecisionCtx& ctx);

}  // namespace quintic
