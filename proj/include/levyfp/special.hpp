#pragma once

#include <cstdint>

namespace levyfp {

// Modified Bessel function of the second kind K_nu for fractional order
// nu in (0, 1) and x > 0. Power series below the crossover, large-argument
// asymptotic expansion above it; both truncated at 1e-12 relative.
double modified_bessel_k(double nu, double x);

// SplitMix64 step; used to derive independent RNG streams from (seed, index).
std::uint64_t splitmix64(std::uint64_t& state);

// One derived 64-bit seed for stream `index` of a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace levyfp
