#pragma once

// Arbitrary-precision real and complex numbers.
//
// Precision never lives in global state: every value owns its MPFR precision
// and every operation that creates values from nothing (constants, parsing,
// transcendental functions) takes a PrecisionCtx. Binary operations produce a
// result at the larger of the two operand precisions.

#include <mpfr.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "quintic/errors.hpp"

namespace quintic {

struct PrecisionCtx {
  int digits = 200;        // requested decimal digits, >= 30
  int guard_digits = 20;   // carried internally on top of `digits`, >= 10
  long max_series_terms = 0;  // 0 means 100 * digits
  std::uint64_t seed = 0;

  static PrecisionCtx with_digits(int digits, std::uint64_t seed = 0);

  void validate() const;
  mpfr_prec_t bits() const;
  long series_term_limit() const;
  // Same context with `digits` multiplied by `factor` (precision escalation).
  PrecisionCtx escalated(int factor) const;
};

class Real {
 public:
  Real() : Real(mpfr_prec_t{64}) {}
  explicit Real(mpfr_prec_t prec);
  Real(long value, mpfr_prec_t prec);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from_double(double value, mpfr_prec_t prec);
  // Correctly rounded decimal literal, `[+-]digits[.digits][e[+-]digits]`.
  static Real from_decimal(std::string_view text, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // log10|x| as a double; -infinity for zero.
  double log10_abs() const;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  Real operator-() const;
  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long k);
  Real& operator/=(long k);

 private:
  mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator*(const Real& a, long k);
Real operator*(long k, const Real& a);
Real operator/(const Real& a, long k);
Real operator+(const Real& a, long k);
Real operator-(const Real& a, long k);

bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
Real pi(mpfr_prec_t prec);
// 10^e, exact for e >= 0 within the precision.
Real pow10(long e, mpfr_prec_t prec);

// Complex number carrying its own precision in both parts.
struct Complex {
  Real re;
  Real im;

  Complex() : Complex(mpfr_prec_t{64}) {}
  explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(long r, long i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}
  explicit Complex(const Real& r) : re(r), im(r.prec()) {}

  static Complex from_double(double r, double i, mpfr_prec_t prec);

  mpfr_prec_t prec() const;
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }

  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& k);
  Complex& operator*=(long k);
  Complex& operator/=(long k);
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& k);
Complex operator*(const Real& k, const Complex& a);
Complex operator/(const Complex& a, const Real& k);
Complex operator*(const Complex& a, long k);
Complex operator*(long k, const Complex& a);
Complex operator/(const Complex& a, long k);
Complex operator+(const Complex& a, long k);
Complex operator-(const Complex& a, long k);

// acc += a * b without temporaries beyond one scratch pair.
void fma_acc(Complex& acc, const Complex& a, const Complex& b);

Complex conj(const Complex& z);
Real abs(const Complex& z);
// |z|^2
Real norm(const Complex& z);
// Principal argument in (-pi, pi].
Real arg(const Complex& z);
Complex ipow(const Complex& z, unsigned k);
Complex unit_imaginary(mpfr_prec_t prec);
// Rounds both parts to `prec` bits.
Complex with_prec(const Complex& z, mpfr_prec_t prec);

// Principal square root: arg(w) in (-pi/2, pi/2], cut on the negative reals.
Complex sqrt_principal(const Complex& z, const PrecisionCtx& ctx);
// Principal logarithm, Im in (-pi, pi]. Throws Overflow for z = 0.
Complex log_principal(const Complex& z, const PrecisionCtx& ctx);
Complex exp(const Complex& z, const PrecisionCtx& ctx);
// exp((num/den) log z) on the principal branch.
Complex pow_rational(const Complex& z, long num, long den, const PrecisionCtx& ctx);

// Decimal text interchange format: RE, IMi, or RE(+|-)IMi, where RE and IM
// are decimal literals with an optional exponent ("-200i", "12.34910",
// "0.5-0.25e-3i").
Complex parse_complex(std::string_view text, const PrecisionCtx& ctx);
Real parse_real(std::string_view text, const PrecisionCtx& ctx);
// `digits` significant digits, round to nearest. digits <= 0 selects enough
// digits to round-trip the binary value exactly.
std::string format_real(const Real& x, int digits, mpfr_rnd_t rnd = MPFR_RNDN);
std::string format_complex(const Complex& z, int digits, mpfr_rnd_t rnd = MPFR_RNDN);

std::ostream& operator<<(std::ostream& os, const Real& x);
std::ostream& operator<<(std::ostream& os, const Complex& z);

// Throws SolverError(Overflow) when z is not finite.
void require_finite(const Complex& z, std::string_view stage);

}  // namespace quintic
