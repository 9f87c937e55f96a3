#include "quintic/mpfield.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <numeric>
#include <ostream>
#include <utility>

namespace quintic {

namespace {

constexpr double kLog2of10 = 3.32192809488736234787;
// Extra bits used inside transcendental compositions before the final round.
constexpr mpfr_prec_t kInnerBits = 64;

mpfr_prec_t pmax(mpfr_prec_t a, mpfr_prec_t b) { return a > b ? a : b; }

void raise_to(Real& x, mpfr_prec_t p) {
  if (x.prec() < p) mpfr_prec_round(x.get(), p, MPFR_RNDN);
}

[[noreturn]] void overflow(std::string_view stage) {
  throw SolverError(ErrorCode::Overflow, std::string(stage),
                    "value left the representable exponent range");
}

}  // namespace

// ---------------------------------------------------------------- context

PrecisionCtx PrecisionCtx::with_digits(int digits, std::uint64_t seed) {
  PrecisionCtx ctx;
  ctx.digits = digits;
  ctx.seed = seed;
  ctx.validate();
  return ctx;
}

void PrecisionCtx::validate() const {
  if (digits < 30)
    throw SolverError(ErrorCode::InvalidArgument, "mpfield.ctx",
                      "digits must be at least 30, got " + std::to_string(digits));
  if (guard_digits < 10)
    throw SolverError(ErrorCode::InvalidArgument, "mpfield.ctx",
                      "guard_digits must be at least 10, got " + std::to_string(guard_digits));
  if (max_series_terms < 0)
    throw SolverError(ErrorCode::InvalidArgument, "mpfield.ctx",
                      "max_series_terms must be positive");
}

mpfr_prec_t PrecisionCtx::bits() const {
  return static_cast<mpfr_prec_t>(std::ceil((digits + guard_digits) * kLog2of10)) + 8;
}

long PrecisionCtx::series_term_limit() const {
  return max_series_terms > 0 ? max_series_terms : 100L * digits;
}

PrecisionCtx PrecisionCtx::escalated(int factor) const {
  PrecisionCtx out = *this;
  out.digits = digits * factor;
  if (max_series_terms > 0) out.max_series_terms = max_series_terms * factor;
  return out;
}

// ---------------------------------------------------------------- Real

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(long value, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.prec());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  v_[0] = other.v_[0];
  other.v_[0]._mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other) {
  if (this == &other) return *this;
  if (v_[0]._mpfr_d == nullptr)
    mpfr_init2(v_, other.prec());
  else
    mpfr_set_prec(v_, other.prec());
  mpfr_set(v_, other.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  std::swap(v_[0], other.v_[0]);
  return *this;
}

Real::~Real() {
  if (v_[0]._mpfr_d != nullptr) mpfr_clear(v_);
}

Real Real::from_double(double value, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_d(r.v_, value, MPFR_RNDN);
  return r;
}

Real Real::from_decimal(std::string_view text, mpfr_prec_t prec) {
  std::string buf(text);
  Real r(prec);
  char* end = nullptr;
  mpfr_strtofr(r.v_, buf.c_str(), &end, 10, MPFR_RNDN);
  if (end != buf.c_str() + buf.size())
    throw ParseError(static_cast<std::size_t>(end - buf.c_str()), "malformed decimal literal");
  if (!r.is_finite()) overflow("mpfield.parse");
  return r;
}

double Real::log10_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long e = 0;
  double d = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
  return std::log10(std::fabs(d)) + static_cast<double>(e) * 0.30102999566398119521;
}

Real Real::operator-() const {
  Real r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& o) {
  raise_to(*this, o.prec());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  raise_to(*this, o.prec());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  raise_to(*this, o.prec());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  raise_to(*this, o.prec());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long k) {
  mpfr_mul_si(v_, v_, k, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long k) {
  mpfr_div_si(v_, v_, k, MPFR_RNDN);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real r(pmax(a.prec(), b.prec()));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(pmax(a.prec(), b.prec()));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(pmax(a.prec(), b.prec()));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(pmax(a.prec(), b.prec()));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, long k) {
  Real r(a.prec());
  mpfr_mul_si(r.get(), a.get(), k, MPFR_RNDN);
  return r;
}

Real operator*(long k, const Real& a) { return a * k; }

Real operator/(const Real& a, long k) {
  Real r(a.prec());
  mpfr_div_si(r.get(), a.get(), k, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, long k) {
  Real r(a.prec());
  mpfr_add_si(r.get(), a.get(), k, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, long k) {
  Real r(a.prec());
  mpfr_sub_si(r.get(), a.get(), k, MPFR_RNDN);
  return r;
}

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

Real abs(const Real& x) {
  Real r(x.prec());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r(x.prec());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real pow10(long e, mpfr_prec_t prec) {
  Real r(prec);
  if (e >= 0) {
    mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(e), MPFR_RNDN);
  } else {
    Real t(e, prec);
    mpfr_exp10(r.get(), t.get(), MPFR_RNDN);
  }
  return r;
}

// ---------------------------------------------------------------- Complex

Complex Complex::from_double(double r, double i, mpfr_prec_t prec) {
  return {Real::from_double(r, prec), Real::from_double(i, prec)};
}

mpfr_prec_t Complex::prec() const { return pmax(re.prec(), im.prec()); }

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  *this = *this * o;
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  *this = *this / o;
  return *this;
}

Complex& Complex::operator*=(const Real& k) {
  re *= k;
  im *= k;
  return *this;
}

Complex& Complex::operator*=(long k) {
  re *= k;
  im *= k;
  return *this;
}

Complex& Complex::operator/=(long k) {
  re /= k;
  im /= k;
  return *this;
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }

Complex operator*(const Complex& a, const Complex& b) {
  mpfr_prec_t p = pmax(a.prec(), b.prec());
  Complex r(p);
  mpfr_fmms(r.re.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_fmma(r.im.get(), a.re.get(), b.im.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  return r;
}

Complex operator/(const Complex& a, const Complex& b) {
  mpfr_prec_t p = pmax(a.prec(), b.prec());
  Real den(p);
  mpfr_fmma(den.get(), b.re.get(), b.re.get(), b.im.get(), b.im.get(), MPFR_RNDN);
  Complex r(p);
  mpfr_fmma(r.re.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_fmms(r.im.get(), a.im.get(), b.re.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_div(r.re.get(), r.re.get(), den.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), r.im.get(), den.get(), MPFR_RNDN);
  return r;
}

Complex operator*(const Complex& a, const Real& k) { return {a.re * k, a.im * k}; }
Complex operator*(const Real& k, const Complex& a) { return a * k; }
Complex operator/(const Complex& a, const Real& k) { return {a.re / k, a.im / k}; }
Complex operator*(const Complex& a, long k) { return {a.re * k, a.im * k}; }
Complex operator*(long k, const Complex& a) { return a * k; }
Complex operator/(const Complex& a, long k) { return {a.re / k, a.im / k}; }
Complex operator+(const Complex& a, long k) { return {a.re + k, a.im}; }
Complex operator-(const Complex& a, long k) { return {a.re - k, a.im}; }

void fma_acc(Complex& acc, const Complex& a, const Complex& b) {
  mpfr_prec_t p = pmax(acc.prec(), pmax(a.prec(), b.prec()));
  Real t(p);
  mpfr_fmms(t.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  acc.re += t;
  mpfr_fmma(t.get(), a.re.get(), b.im.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  acc.im += t;
}

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Real abs(const Complex& z) {
  Real r(z.prec());
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

Real norm(const Complex& z) {
  Real r(z.prec());
  mpfr_fmma(r.get(), z.re.get(), z.re.get(), z.im.get(), z.im.get(), MPFR_RNDN);
  return r;
}

Real arg(const Complex& z) {
  Real r(z.prec());
  if (z.im.is_zero()) {
    // Treat a signed zero imaginary part as +0 so the negative real axis maps to +pi.
    Real zero(z.prec());
    mpfr_atan2(r.get(), zero.get(), z.re.get(), MPFR_RNDN);
  } else {
    mpfr_atan2(r.get(), z.im.get(), z.re.get(), MPFR_RNDN);
  }
  return r;
}

Complex ipow(const Complex& z, unsigned k) {
  Complex result(1, 0, z.prec());
  Complex base = z;
  while (k != 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return result;
}

Complex unit_imaginary(mpfr_prec_t prec) { return Complex(0, 1, prec); }

Complex with_prec(const Complex& z, mpfr_prec_t prec) {
  Complex r(prec);
  mpfr_set(r.re.get(), z.re.get(), MPFR_RNDN);
  mpfr_set(r.im.get(), z.im.get(), MPFR_RNDN);
  return r;
}

namespace {

Complex sqrt_at(const Complex& z, mpfr_prec_t p) {
  Complex w(p);
  if (z.is_zero()) return w;
  Real mag(p);
  mpfr_hypot(mag.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  Real t(p);
  if (z.re.sign() >= 0) {
    mpfr_add(t.get(), mag.get(), z.re.get(), MPFR_RNDN);
    mpfr_div_2ui(t.get(), t.get(), 1, MPFR_RNDN);
    mpfr_sqrt(t.get(), t.get(), MPFR_RNDN);
    w.re = t;
    mpfr_div(w.im.get(), z.im.get(), t.get(), MPFR_RNDN);
    mpfr_div_2ui(w.im.get(), w.im.get(), 1, MPFR_RNDN);
  } else {
    mpfr_sub(t.get(), mag.get(), z.re.get(), MPFR_RNDN);
    mpfr_div_2ui(t.get(), t.get(), 1, MPFR_RNDN);
    mpfr_sqrt(t.get(), t.get(), MPFR_RNDN);
    mpfr_abs(w.re.get(), z.im.get(), MPFR_RNDN);
    mpfr_div(w.re.get(), w.re.get(), t.get(), MPFR_RNDN);
    mpfr_div_2ui(w.re.get(), w.re.get(), 1, MPFR_RNDN);
    // Negative imaginary part only when strictly negative; -0 stays on the +i side.
    if (!z.im.is_zero() && z.im.sign() < 0) t = -t;
    w.im = t;
  }
  return w;
}

Complex log_at(const Complex& z, mpfr_prec_t p) {
  Complex w(p);
  mpfr_hypot(w.re.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  mpfr_log(w.re.get(), w.re.get(), MPFR_RNDN);
  w.im = arg(with_prec(z, p));
  return w;
}

Complex exp_at(const Complex& z, mpfr_prec_t p) {
  Complex w(p);
  Real mag(p), s(p), c(p);
  mpfr_exp(mag.get(), z.re.get(), MPFR_RNDN);
  mpfr_sin_cos(s.get(), c.get(), z.im.get(), MPFR_RNDN);
  mpfr_mul(w.re.get(), mag.get(), c.get(), MPFR_RNDN);
  mpfr_mul(w.im.get(), mag.get(), s.get(), MPFR_RNDN);
  return w;
}

}  // namespace

Complex sqrt_principal(const Complex& z, const PrecisionCtx& ctx) {
  return with_prec(sqrt_at(z, ctx.bits() + kInnerBits), ctx.bits());
}

Complex log_principal(const Complex& z, const PrecisionCtx& ctx) {
  if (z.is_zero())
    throw SolverError(ErrorCode::Overflow, "mpfield.log", "logarithm of zero");
  return with_prec(log_at(z, ctx.bits() + kInnerBits), ctx.bits());
}

Complex exp(const Complex& z, const PrecisionCtx& ctx) {
  Complex w = exp_at(z, ctx.bits() + kInnerBits);
  require_finite(w, "mpfield.exp");
  return with_prec(w, ctx.bits());
}

Complex pow_rational(const Complex& z, long num, long den, const PrecisionCtx& ctx) {
  if (den <= 0)
    throw SolverError(ErrorCode::InvalidArgument, "mpfield.pow_rational",
                      "denominator must be positive");
  if (num == den) return z;
  if (z.is_zero()) {
    if (num < 0)
      throw SolverError(ErrorCode::ZeroToNegativePower, "mpfield.pow_rational",
                        "zero raised to a negative power");
    if (num == 0) return Complex(1, 0, ctx.bits());
    return Complex(ctx.bits());
  }
  long g = std::gcd(num, den);
  if (g != 0) {
    num /= g;
    den /= g;
  }
  const mpfr_prec_t p = ctx.bits() + kInnerBits;
  // Principal den-th root first; (z^(1/den))^num equals exp((num/den) log z).
  Complex root = with_prec(z, p);
  if ((den & (den - 1)) == 0) {
    // Repeated principal square roots stay on the principal branch and avoid log/exp.
    for (long d = den; d > 1; d >>= 1) root = sqrt_at(root, p);
  } else if (den > 1) {
    Complex l = log_at(root, p);
    l /= den;
    root = exp_at(l, p);
  }
  unsigned long k = static_cast<unsigned long>(num < 0 ? -num : num);
  Complex w = ipow(root, static_cast<unsigned>(k));
  if (num < 0) w = Complex(1, 0, p) / w;
  require_finite(w, "mpfield.pow_rational");
  return with_prec(w, ctx.bits());
}

// ---------------------------------------------------------------- text

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Scans an unsigned decimal literal starting at `pos`; returns the end offset
// or throws ParseError.
std::size_t scan_unsigned(std::string_view s, std::size_t pos, std::size_t base) {
  std::size_t i = pos;
  std::size_t int_digits = 0, frac_digits = 0;
  while (i < s.size() && is_digit(s[i])) { ++i; ++int_digits; }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && is_digit(s[i])) { ++i; ++frac_digits; }
  }
  if (int_digits + frac_digits == 0) throw ParseError(base + pos, "expected a decimal number");
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    std::size_t j = i + 1;
    if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
    std::size_t exp_start = j;
    while (j < s.size() && is_digit(s[j])) ++j;
    if (j == exp_start) throw ParseError(base + j, "expected exponent digits");
    i = j;
  }
  return i;
}

Real literal(std::string_view s, bool negative, mpfr_prec_t prec) {
  Real r = Real::from_decimal(s, prec);
  return negative ? -r : r;
}

}  // namespace

Complex parse_complex(std::string_view text, const PrecisionCtx& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  std::size_t lead = 0;
  while (lead < text.size() && (text[lead] == ' ' || text[lead] == '\t')) ++lead;
  std::size_t tail = text.size();
  while (tail > lead && (text[tail - 1] == ' ' || text[tail - 1] == '\t' ||
                         text[tail - 1] == '\n' || text[tail - 1] == '\r'))
    --tail;
  std::string_view s = text.substr(lead, tail - lead);
  if (s.empty()) throw ParseError(lead, "empty number");

  std::size_t pos = 0;
  bool neg1 = false;
  if (s[pos] == '+' || s[pos] == '-') {
    neg1 = s[pos] == '-';
    ++pos;
  }
  std::size_t start1 = pos;
  std::size_t end1 = scan_unsigned(s, pos, lead);
  Real first = literal(s.substr(start1, end1 - start1), neg1, prec);
  pos = end1;
  if (pos == s.size()) return Complex(first, Real(prec));
  if (s[pos] == 'i') {
    if (pos + 1 != s.size()) throw ParseError(lead + pos + 1, "unexpected trailing characters");
    return Complex(Real(prec), first);
  }
  if (s[pos] != '+' && s[pos] != '-') throw ParseError(lead + pos, "expected '+', '-' or 'i'");
  bool neg2 = s[pos] == '-';
  ++pos;
  std::size_t start2 = pos;
  std::size_t end2 = scan_unsigned(s, pos, lead);
  Real second = literal(s.substr(start2, end2 - start2), neg2, prec);
  pos = end2;
  if (pos == s.size() || s[pos] != 'i') throw ParseError(lead + pos, "expected 'i'");
  if (pos + 1 != s.size()) throw ParseError(lead + pos + 1, "unexpected trailing characters");
  return Complex(std::move(first), std::move(second));
}

Real parse_real(std::string_view text, const PrecisionCtx& ctx) {
  Complex z = parse_complex(text, ctx);
  if (!z.im.is_zero()) throw ParseError(0, "expected a real number");
  return std::move(z.re);
}

std::string format_real(const Real& x, int digits, mpfr_rnd_t rnd) {
  if (mpfr_nan_p(x.get())) return "nan";
  if (mpfr_inf_p(x.get())) return x.sign() < 0 ? "-inf" : "inf";
  std::size_t n = digits > 0 ? static_cast<std::size_t>(digits) : 0;
  if (x.is_zero()) {
    std::size_t zeros = n > 1 ? n - 1 : 0;
    return zeros ? "0." + std::string(zeros, '0') : "0";
  }
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, n, x.get(), rnd);
  std::string m(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!m.empty() && m[0] == '-') {
    sign = "-";
    m.erase(0, 1);
  }
  // value = 0.m * 10^e
  const long len = static_cast<long>(m.size());
  std::string out;
  if (e > 0 && e <= len) {
    out = m.substr(0, static_cast<std::size_t>(e));
    if (e < len) out += "." + m.substr(static_cast<std::size_t>(e));
  } else if (e <= 0 && e > -6) {
    out = "0." + std::string(static_cast<std::size_t>(-e), '0') + m;
  } else {
    out = m.substr(0, 1);
    if (len > 1) out += "." + m.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
  }
  return sign + out;
}

std::string format_complex(const Complex& z, int digits, mpfr_rnd_t rnd) {
  std::string re = format_real(z.re, digits, rnd);
  bool im_negative = mpfr_signbit(z.im.get()) && !z.im.is_zero();
  std::string im = format_real(abs(z.im), digits, rnd);
  return re + (im_negative ? "-" : "+") + im + "i";
}

std::ostream& operator<<(std::ostream& os, const Real& x) {
  return os << format_real(x, static_cast<int>(os.precision()));
}

std::ostream& operator<<(std::ostream& os, const Complex& z) {
  return os << format_complex(z, static_cast<int>(os.precision()));
}

void require_finite(const Complex& z, std::string_view stage) {
  if (!z.is_finite()) overflow(stage);
}

}  // namespace quintic
