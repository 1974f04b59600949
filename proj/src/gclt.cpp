#include "levyfp/gclt.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "levyfp/norms.hpp"
#include "levyfp/special.hpp"
#include "levyfp/stable_laws.hpp"

namespace levyfp {

namespace {

void finalize(ScaleSequence& seq) {
    double acc = 0.0;
    for (double sigma : seq.sigmas) acc += std::pow(sigma, 2.0 * seq.s);
    seq.sbar = std::pow(acc / seq.sigmas.size(), 0.5 / seq.s);
}

}  // namespace

ScaleSequence ScaleSequence::constant(int n, double s, double sigma) {
    if (n < 1) throw std::domain_error("ScaleSequence: n must be >= 1");
    if (!(sigma > 0.0)) throw std::domain_error("ScaleSequence: sigma must be positive");
    ScaleSequence seq;
    seq.sigmas.assign(n, sigma);
    seq.s = s;
    seq.lower = seq.upper = sigma;
    finalize(seq);
    return seq;
}

ScaleSequence ScaleSequence::uniform_random(int n, double s, double lower, double upper,
                                            std::uint64_t seed) {
    if (n < 1) throw std::domain_error("ScaleSequence: n must be >= 1");
    if (!(lower > 0.0 && upper >= lower)) {
        throw std::domain_error("ScaleSequence: need 0 < lower <= upper");
    }
    ScaleSequence seq;
    seq.s = s;
    seq.lower = lower;
    seq.upper = upper;
    seq.sigmas.resize(n);
    std::mt19937_64 rng(derive_seed(seed, 0x5ca1e5));
    std::uniform_real_distribution<double> dist(lower, upper);
    for (double& sigma : seq.sigmas) sigma = dist(rng);
    finalize(seq);
    return seq;
}

ScaleSequence ScaleSequence::alternating(int n, double s, double lower, double upper) {
    if (n < 1) throw std::domain_error("ScaleSequence: n must be >= 1");
    if (!(lower > 0.0 && upper >= lower)) {
        throw std::domain_error("ScaleSequence: need 0 < lower <= upper");
    }
    ScaleSequence seq;
    seq.s = s;
    seq.lower = lower;
    seq.upper = upper;
    seq.sigmas.resize(n);
    for (int i = 0; i < n; ++i) seq.sigmas[i] = (i % 2 == 0) ? lower : upper;
    finalize(seq);
    return seq;
}

ScaleSequence make_scales(ScalesPolicy policy, int n, double s, double lower, double upper,
                          std::uint64_t seed) {
    switch (policy) {
        case ScalesPolicy::Constant: return ScaleSequence::constant(n, s, 1.0);
        case ScalesPolicy::UniformRandom:
            return ScaleSequence::uniform_random(n, s, lower, upper, seed);
        case ScalesPolicy::Alternating: return ScaleSequence::alternating(n, s, lower, upper);
    }
    throw ConfigError("make_scales: unknown policy");
}

double rescaled_convolution_hat(const KernelSpec& kernel, const ScaleSequence& scales,
                                double rho) {
    const double denom = std::pow(static_cast<double>(scales.sigmas.size()), 0.5 / scales.s) *
                         scales.sbar;
    double log_abs = 0.0;
    int sign = 1;
    for (double sigma : scales.sigmas) {
        const double v = kernel.fourier_symbol(rho * sigma / denom);
        if (v == 0.0) return 0.0;
        if (v < 0.0) sign = -sign;
        log_abs += std::log(std::abs(v));
    }
    return sign * std::exp(log_abs);
}

double be_distance(const KernelSpec& kernel, const ScaleSequence& scales, const Grid1D& grid) {
    auto fn_hat = sample_radial_symbol(
        grid, [&](double r) { return rescaled_convolution_hat(kernel, scales, r); });
    DensityProfile fn = to_density(fn_hat);
    DensityProfile gs = stable_density(StableParams::make(kernel.s(), 1.0), grid);
    return linf_distance(fn, gs);
}

double measured_remainder_order(const KernelSpec& kernel) {
    // Slope of log |R_s| against log rho over a small-frequency window.
    std::vector<double> xs, ys;
    for (double rho = 0.02; rho <= 0.2001; rho *= std::sqrt(2.0)) {
        const double r = std::abs(kernel.remainder(rho));
        if (r > 1e-300) {
            xs.push_back(rho);
            ys.push_back(r);
        }
    }
    if (xs.size() < 3) return 2.0 * kernel.s() + kernel.delta();
    return fit_loglog(xs, ys, 0.0, 1e9).slope;
}

GcltRateResult be_rate_fit(const KernelSpec& kernel, std::span<const int> n_list,
                           ScalesPolicy policy, const Grid1D& grid, std::uint64_t seed,
                           double slope_tolerance) {
    GcltRateResult result;
    const double two_s = 2.0 * kernel.s();
    const double delta_measured = measured_remainder_order(kernel) - two_s;
    result.target_slope = -delta_measured / two_s;

    for (std::size_t i = 0; i < n_list.size(); ++i) {
        const int n = n_list[i];
        const ScaleSequence scales =
            make_scales(policy, n, kernel.s(), 0.5, 2.0, derive_seed(seed, i));
        result.n_values.push_back(n);
        result.distances.push_back(be_distance(kernel, scales, grid));
    }

    result.stable_input = std::all_of(result.distances.begin(), result.distances.end(),
                                      [](double d) { return d < 1e-12; });
    if (result.stable_input || result.n_values.size() < 4) {
        return result;
    }

    std::vector<double> n_doubles(result.n_values.begin(), result.n_values.end());
    result.fit = fit_loglog(n_doubles, result.distances, result.target_slope, slope_tolerance);

    // C_BE such that distance <= C_BE n^{slope} for every tested n, and the
    // smallest tested n at which the fitted-rate bound holds.
    double c_be = 0.0;
    for (std::size_t i = 0; i < n_doubles.size(); ++i) {
        c_be = std::max(c_be,
                        result.distances[i] / std::pow(n_doubles[i], result.fit->slope));
    }
    result.c_be = c_be;
    result.threshold_n = result.n_values.front();
    for (std::size_t i = 0; i < n_doubles.size(); ++i) {
        if (result.distances[i] <= c_be * std::pow(n_doubles[i], result.fit->slope) * 1.0001) {
            result.threshold_n = result.n_values[i];
            break;
        }
    }
    return result;
}

}  // namespace levyfp
