#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "levyfp/grids.hpp"
#include "levyfp/kernels.hpp"
#include "levyfp/ratefit.hpp"

namespace levyfp {

// Scales sigma_1..sigma_n of the non-identical convolution, with their bounds
// and the normalizer sbar, sbar^{2s} = (1/n) sum sigma_i^{2s}.
struct ScaleSequence {
    std::vector<double> sigmas;
    double s = 0.75;
    double lower = 1.0;
    double upper = 1.0;
    double sbar = 1.0;

    static ScaleSequence constant(int n, double s, double sigma = 1.0);
    static ScaleSequence uniform_random(int n, double s, double lower, double upper,
                                        std::uint64_t seed);
    static ScaleSequence alternating(int n, double s, double lower, double upper);
};

enum class ScalesPolicy { Constant, UniformRandom, Alternating };

ScaleSequence make_scales(ScalesPolicy policy, int n, double s, double lower, double upper,
                          std::uint64_t seed);

// prod_j \hat J(rho sigma_j / (n^{1/2s} sbar)), evaluated as a sign-tracked
// sum of logs so large n cannot underflow.
double rescaled_convolution_hat(const KernelSpec& kernel, const ScaleSequence& scales,
                                double rho);

// L^inf distance between the rescaled n-fold convolution and the standard
// stable law of the same order.
double be_distance(const KernelSpec& kernel, const ScaleSequence& scales, const Grid1D& grid);

// Exponent of |R_s(rho)| ~ rho^order measured near rho = 0; order - 2s is the
// family's true remainder rate, which convergence targets use instead of the
// deliberately conservative declared delta.
double measured_remainder_order(const KernelSpec& kernel);

struct GcltRateResult {
    std::vector<int> n_values;
    std::vector<double> distances;
    std::optional<RateFit> fit;        // absent for stable input or < 4 samples
    double target_slope = 0.0;         // -delta_measured / 2s
    double c_be = 0.0;                 // fitted constant in C / n^{delta/2s}
    int threshold_n = 0;               // smallest tested n where the fitted bound holds
    bool stable_input = false;         // all distances at roundoff level
};

GcltRateResult be_rate_fit(const KernelSpec& kernel, std::span<const int> n_list,
                           ScalesPolicy policy, const Grid1D& grid, std::uint64_t seed,
                           double slope_tolerance = 0.25);

}  // namespace levyfp
