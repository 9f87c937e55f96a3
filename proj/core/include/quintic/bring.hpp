#pragma once

// Principal root of the Bring-Jerrard form z^5 - z - s = 0: the branch with
// z ~ -s near s = 0, given by z = -s * 4F3(1/5,2/5,3/5,4/5; 1/2,3/4,5/4; x)
// with x = 3125/256 s^4. Outside the series disk the same function element is
// continued along the ODE dz/ds = 1/(5 z^4 - 1).

#include <cstdint>
#include <string_view>

#include "quintic/mpfield.hpp"

namespace quintic {

enum class BringStrategy { Series, OdeContinuation, NewtonOnly, PureRadical };
enum class StrategyChoice { Auto, Series, Ode };

std::string_view to_string(BringStrategy s);
std::string_view to_string(StrategyChoice s);
// "auto", "series" or "ode"; throws InvalidArgument otherwise.
StrategyChoice parse_strategy(std::string_view text);

struct BringSolution {
  Complex z;
  BringStrategy strategy = BringStrategy::Series;
  Real residual;             // |z^5 - z - s|
  long terms_or_steps = 0;   // series terms or ODE steps
};

// Series argument 3125/256 * s^4.
Complex bring_series_argument(const Complex& s, const PrecisionCtx& ctx);

// 4F3(1/5,2/5,3/5,4/5; 1/2,3/4,5/4; x) for |x| <= 0.9. `terms`, when given,
// receives the number of terms summed.
Complex hyper4f3(const Complex& x, const PrecisionCtx& ctx, long* terms = nullptr);

// Continuation of z(s) from z(0) = 0 with Taylor steps, detouring around the
// four branch points s* (3125 s*^4 = 256), then Newton-polished.
Complex bring_root_continuation(const Complex& s, const PrecisionCtx& ctx, long* steps = nullptr);

// Newton iteration on z^5 - z - s until the residual stops decreasing.
Complex bring_newton(const Complex& z0, const Complex& s, const PrecisionCtx& ctx,
                     int* iterations = nullptr);

BringSolution solve_bring(const Complex& s, const PrecisionCtx& ctx,
                          StrategyChoice choice = StrategyChoice::Auto);

Real bring_residual(const Complex& z, const Complex& s, const PrecisionCtx& ctx);

}  // namespace quintic
