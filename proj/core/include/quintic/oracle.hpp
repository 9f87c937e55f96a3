#pragma once

// Independent root finder (Aberth-Ehrlich simultaneous iteration) used to
// validate the closed-form pipeline, and root-set matching.

#include <array>
#include <vector>

#include "quintic/mpfield.hpp"
#include "quintic/polyring.hpp"

namespace quintic {

// All deg(poly) roots. Initial guesses sit on the circle of radius
// 1 + max|coeff/lead| with angular offsets drawn from ctx.seed.
// Throws NoConvergence after 200 * digits iterations, InvalidArgument for
// degree < 1.
std::vector<Complex> aberth_solve(const Poly& poly, const PrecisionCtx& ctx, int* iterations = nullptr);

struct RootMatch {
  std::array<int, 5> pairing{};  // xs[i] pairs with ys[pairing[i]]
  Real max_distance;             // divided by 1 + max root magnitude
  bool relative = true;
};

// Exact minimum over all 120 pairings of the largest pairwise distance.
RootMatch match_rootsets(const std::array<Complex, 5>& xs, const std::array<Complex, 5>& ys);

}  // namespace quintic
