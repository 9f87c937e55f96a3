#pragma once

#include <array>
#include <string_view>

#include "quintic/mpfield.hpp"
#include "quintic/tschirnhaus.hpp"

namespace testing {

using namespace quintic;

inline Complex C(std::string_view text, const PrecisionCtx& ctx) { return parse_complex(text, ctx); }

inline Real tol10(long exponent, const PrecisionCtx& ctx) { return pow10(exponent, ctx.bits()); }

inline Real dist(const Complex& a, const Complex& b) { return abs(a - b); }

inline MonicQuintic quintic(std::array<std::string_view, 5> coeffs, const PrecisionCtx& ctx) {
  return MonicQuintic::parse(coeffs, ctx);
}

// Relative distance |a - b| / max(1, |b|).
inline Real rel(const Complex& a, const Complex& b) {
  Real scale = max(Real(1, b.prec()), abs(b));
  return abs(a - b) / scale;
}

}  // namespace testing
