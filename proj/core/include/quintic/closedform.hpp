#pragma once

// Cardano and Ferrari kernels, root selection, deflation of the quintic, and
// the end-to-end closed-form solve.

#include <array>
#include <string>

#include "quintic/bring.hpp"
#include "quintic/mpfield.hpp"
#include "quintic/tschirnhaus.hpp"

namespace quintic {

// x^4 + p3 x^3 + p2 x^2 + p1 x + p0
struct QuarticCoeffs {
  Complex p3, p2, p1, p0;
};

// Roots of c3 x^3 + c2 x^2 + c1 x + c0. Index 0 is the principal Cardano root;
// indices 1 and 2 rotate the cube-root term by w and w^2, w = exp(2 pi i / 3).
std::array<Complex, 3> cardano_roots(const Complex& c3, const Complex& c2, const Complex& c1,
                                     const Complex& c0, const PrecisionCtx& ctx);

// Root of the resolvent cubic used by ferrari_roots for a given index.
Complex ferrari_resolvent(const QuarticCoeffs& quartic, int index, const PrecisionCtx& ctx);

// The four roots y1..y4 in the printed order (+e/2 +, +e/2 -, -e/2 +, -e/2 -).
std::array<Complex, 4> ferrari_roots(const QuarticCoeffs& quartic, const PrecisionCtx& ctx,
                                     int* resolvent_index = nullptr);

Complex eval_quartic(const QuarticCoeffs& quartic, const Complex& x, const PrecisionCtx& ctx);

struct Selection {
  Complex root;
  int index = 0;                   // 0-based into the candidates
  std::array<Real, 4> residuals;   // |quintic(candidate)|
};

// Picks the candidate with the smallest quintic residual; requires it to be
// below 10^(-digits/2) * scale and 10^(digits/4) times below the runner-up
// (the latter only when require_separation is set).
// Throws AmbiguousSelection or NotARoot.
Selection select_quintic_root(const MonicQuintic& f, const std::array<Complex, 4>& candidates,
                              const PrecisionCtx& ctx, bool require_separation = true);

// dd = m + r1, cc = n + r1^2 + m r1, bb = p + r1 n + r1^3 + m r1^2,
// aa = q + r1 p + r1^2 n + r1^4 + m r1^3. Throws NotARoot.
QuarticCoeffs deflate_quintic(const MonicQuintic& f, const Complex& r1, const PrecisionCtx& ctx);

struct SolveOptions {
  StrategyChoice strategy = StrategyChoice::Auto;
  bool escalate = true;
};

struct RootReport {
  std::array<Complex, 5> roots;        // roots[0] is the root picked by the Tschirnhaus quartic
  std::array<Real, 5> residuals;       // |quintic(root)|
  BringSolution bring;
  BringReduction reduction;
  Complex y;                           // Bring root mapped back: (-A)^(1/4) z
  std::array<Complex, 4> candidates;   // y1..y4 roots of the Tschirnhaus quartic
  std::array<Real, 4> candidate_residuals;
  int selected_index = 0;
  int precision_used = 0;
  Complex shift_applied;
  Real vieta_sum_error;                // |sum roots + m|
  Real vieta_product_error;            // |prod roots + r|
};

RootReport solve_quintic(const MonicQuintic& f, const PrecisionCtx& ctx,
                         const SolveOptions& options = {});

}  // namespace quintic
