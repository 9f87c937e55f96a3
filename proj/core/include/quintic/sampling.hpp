#pragma once

// Seeded random quintics for tests, benchmarks and the CLI bench command.

#include <array>
#include <cstdint>
#include <random>

#include "quintic/mpfield.hpp"
#include "quintic/tschirnhaus.hpp"

namespace quintic {

// Complex number whose real and imaginary parts are k/1000 with |k| <= bound.
Complex random_millis(std::mt19937_64& rng, long bound, const PrecisionCtx& ctx);

// Coefficients with magnitude <= max_magnitude (parts drawn on a 10^-3 grid).
MonicQuintic random_quintic(std::mt19937_64& rng, const PrecisionCtx& ctx,
                            double max_magnitude = 1000.0);

// Five roots with parts on a 10^-3 grid and magnitude <= max_magnitude.
std::array<Complex, 5> random_roots(std::mt19937_64& rng, const PrecisionCtx& ctx,
                                    double max_magnitude = 10.0);

// prod (x - roots[i]), expanded exactly at working precision.
MonicQuintic quintic_from_roots(const std::array<Complex, 5>& roots, const PrecisionCtx& ctx);

}  // namespace quintic
