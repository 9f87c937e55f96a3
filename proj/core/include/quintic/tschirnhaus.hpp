#pragma once

// Quartic Tschirnhaus substitution y = -(x^4 + d x^3 + c x^2 + b x + a) taking
// x^5 + m x^4 + n x^3 + p x^2 + q x + r to y^5 + A y + B.
//
// The y-polynomial is the determinant of a 5x5 matrix whose entries are affine
// in y. Its coefficients (Poly4, Poly3, Poly2) are acquired by sampling that
// determinant at small integer parameter values and interpolating with a
// degree guard, never by expanding them symbolically.

#include <array>
#include <optional>

#include "quintic/mpfield.hpp"
#include "quintic/polyring.hpp"

namespace quintic {

struct MonicQuintic {
  Complex m, n, p, q, r;

  // Roots of the returned quintic are the roots of this one plus t.
  MonicQuintic shifted(const Complex& t, const PrecisionCtx& ctx) const;
  MonicQuintic conjugated() const;
  Poly as_poly() const;
  // max(1, |m|, |n|, |p|, |q|, |r|)
  Real scale(const PrecisionCtx& ctx) const;
  Complex eval(const Complex& x, const PrecisionCtx& ctx) const;

  static MonicQuintic parse(const std::array<std::string_view, 5>& text, const PrecisionCtx& ctx);
};

// A quadratic lead*t^2 + mid*t + constant solved with the '+' square root, or
// as linear when the leading coefficient vanishes.
struct QuadraticSolve {
  Complex root;
  Complex lead, mid, constant;
  bool linear = false;
  bool trivial = false;  // identically zero; root left at 0
};

struct EtaXi {
  Complex eta, xi;
  // d^1 coefficient of Poly3 as u0 + u_eta*eta + u_xi*xi
  Complex u0, u_eta, u_xi;
  QuadraticSolve xi_quadratic;
};

struct DSolve {
  Complex d;
  std::array<Complex, 4> cubic;  // d3, d2, d1, d0
  std::array<Complex, 3> roots;
};

struct TschirnhausParams {
  Complex a, b, c, d, alpha, xi, eta;
  // |Poly4|, |Poly3|, |Poly2| divided by the largest transformed coefficient.
  std::array<Real, 3> vanish_residuals;
  QuadraticSolve alpha_quadratic;
  EtaXi eta_xi;
  DSolve cubic;
  // |a - printed closed form| / max(1, |a|); the printed formula is a cross-check.
  Real a_formula_gap;
};

enum class ReductionKind {
  Generic,
  PureRadicalA,  // A ~ 0: y^5 = -B
  PureRadicalB,  // B ~ 0: y = 0 is a root
};

struct BringReduction {
  Complex A, B, s;
  Complex quartic_root_scale;  // (-A)^(1/4)
  Complex shift;               // t with x_shifted = x + t; zero when none
  bool shift_applied = false;
  int shift_attempts = 0;
  int precision_used = 0;      // digits actually used (after escalation)
  ReductionKind kind = ReductionKind::Generic;
  MonicQuintic reduced;        // the quintic that was transformed (shifted if applied)
  TschirnhausParams params;
  Poly transformed;            // monic y^5 + Poly4 y^4 + ... + B
  // The (shifted) input already had the form x^5 + A x + B, so y = x and the
  // quartic substitution is skipped.
  bool identity = false;
};

PolyMatrix5 build_matrix(const MonicQuintic& f, const Complex& a, const Complex& b,
                         const Complex& c, const Complex& d);
// Monic normalisation of det5(build_matrix(...)). Throws DegenerateTransform.
Poly transformed_poly(const MonicQuintic& f, const Complex& a, const Complex& b,
                      const Complex& c, const Complex& d, const PrecisionCtx& ctx);

// a such that Poly4 = 0, from the affine samples a = 0, 1 and guard a = 2.
Complex solve_a(const MonicQuintic& f, const Complex& b, const Complex& c, const Complex& d,
                const PrecisionCtx& ctx);
// The d^2 coefficient of Poly3 (at xi = eta = 0) is a quadratic in alpha.
QuadraticSolve solve_alpha(const MonicQuintic& f, const PrecisionCtx& ctx);
EtaXi solve_eta_xi(const MonicQuintic& f, const Complex& alpha, const PrecisionCtx& ctx);
DSolve solve_d(const MonicQuintic& f, const Complex& alpha, const Complex& eta, const Complex& xi,
               const PrecisionCtx& ctx);
// Coefficients (d^0, d^1, d^2) of Poly3 viewed as a polynomial in d.
std::array<Complex, 3> poly3_in_d(const MonicQuintic& f, const Complex& alpha, const Complex& eta,
                                  const Complex& xi, const PrecisionCtx& ctx);
// Full parameter solve with a chosen Cardano root index for d.
TschirnhausParams solve_params(const MonicQuintic& f, const PrecisionCtx& ctx, int d_root = 0);

// One reduction attempt at fixed precision and no shift.
BringReduction reduce_once(const MonicQuintic& f, const PrecisionCtx& ctx);
// Treats x^5 + q x + r (m, n, p negligible) as its own Bring-Jerrard form.
// Returns nothing when the quintic is not of that shape.
std::optional<BringReduction> reduce_trivially(const MonicQuintic& f, const PrecisionCtx& ctx);
// Reduction with the pre-shift ladder and precision escalation (x2, x4).
// Quintics whose depressed form is x^5 + q x + r make the transformation
// degenerate under every shift; those take reduce_trivially instead.
BringReduction reduce_to_bring(const MonicQuintic& f, const PrecisionCtx& ctx);

// The fixed pre-shift ladder 1, -1, i, -i, 2, -2, 1+i, 1-i.
std::array<Complex, 8> shift_ladder(const PrecisionCtx& ctx);

// Closed forms printed alongside the method, kept as independent cross-checks.
namespace printed {
Complex a(const MonicQuintic& f, const Complex& b, const Complex& c, const Complex& d,
          const PrecisionCtx& ctx);
// General case; throws DegenerateLeading when 2m^2 - 5n vanishes.
Complex alpha(const MonicQuintic& f, const PrecisionCtx& ctx);
// The m = n = 0 case.
Complex alpha_m_n_zero(const MonicQuintic& f, const PrecisionCtx& ctx);
Complex eta(const MonicQuintic& f, const Complex& alpha, const Complex& xi,
            const PrecisionCtx& ctx);
}  // namespace printed

}  // namespace quintic
