#include "levyfp/wildsum.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "levyfp/quadrature.hpp"
#include "levyfp/special.hpp"

namespace levyfp {

namespace {

// log of the Poisson weight lambda^n e^{-lambda} / n!
double log_poisson_weight(double lambda, int n) {
    return n * std::log(lambda) - lambda - std::lgamma(n + 1.0);
}

double poisson_upper_deficit(double lambda, int n_max) {
    double mass = 0.0;
    for (int n = 0; n <= n_max; ++n) mass += std::exp(log_poisson_weight(lambda, n));
    return std::max(0.0, 1.0 - mass);
}

}  // namespace

WildValue wild_spectral(const WildConfig& config, const InitialDatum& initial, double rho) {
    if (config.samples < 1) throw std::domain_error("wild_spectral: samples must be >= 1");
    if (config.truncation_order < 0 || config.t < 0.0) {
        throw std::domain_error("wild_spectral: invalid truncation order or time");
    }
    const double s = config.kernel.s();
    const double lambda = config.t / std::pow(config.epsilon, 2.0 * s);
    const double deficit = poisson_upper_deficit(lambda, config.truncation_order);
    if (config.enforce_mass_coverage && deficit > 1e-4) {
        throw NumericError("wild_spectral: truncation order misses Poisson mass", deficit);
    }

    // Per-sample factor: sum over n of the Poisson weight times the product
    // of symbols at the (sorted) uniform jump times. Sorting does not change
    // the product; it mirrors the ordered-time form of the series.
    std::vector<double> weights(config.truncation_order + 1);
    for (int n = 0; n <= config.truncation_order; ++n) {
        weights[n] = (lambda > 0.0) ? std::exp(log_poisson_weight(lambda, n))
                                    : (n == 0 ? 1.0 : 0.0);
    }

    double mean = 0.0, m2 = 0.0;
    std::vector<double> times;
    for (int sample = 0; sample < config.samples; ++sample) {
        std::mt19937_64 rng(derive_seed(config.seed, static_cast<std::uint64_t>(sample)));
        std::uniform_real_distribution<double> unif(0.0, config.t);
        double factor = weights[0];
        for (int n = 1; n <= config.truncation_order; ++n) {
            if (weights[n] < 1e-18 && n > lambda) break;
            times.resize(n);
            for (double& tj : times) tj = unif(rng);
            std::sort(times.begin(), times.end());
            double prod = 1.0;
            for (double tj : times) {
                prod *= config.kernel.fourier_symbol(config.epsilon *
                                                     std::exp(tj - config.t) * rho);
            }
            factor += weights[n] * prod;
        }
        // Welford accumulation keeps the variance stable for large M.
        const double delta = factor - mean;
        mean += delta / (sample + 1);
        m2 += delta * (factor - mean);
    }
    const double variance = (config.samples > 1) ? m2 / (config.samples - 1) : 0.0;

    WildValue out;
    out.std_error = std::sqrt(std::max(variance, 0.0) / config.samples);
    out.poisson_deficit = deficit;
    out.value = initial.hat(std::exp(-config.t) * rho) * mean;
    return out;
}

std::complex<double> wild_spectral_exact(const WildConfig& config, const InitialDatum& initial,
                                         double rho, int order_cap) {
    const double s = config.kernel.s();
    const double inv_eps = 1.0 / std::pow(config.epsilon, 2.0 * s);
    const double lambda = config.t * inv_eps;
    // int_0^t J_hat(eps e^{tau - t} rho) dtau; the n-fold ordered-time
    // integral is its n-th power over n! because the integrand is symmetric.
    const double base =
        inv_eps * adaptive_simpson(
                      [&](double tau) {
                          return config.kernel.fourier_symbol(
                              config.epsilon * std::exp(tau - config.t) * rho);
                      },
                      0.0, config.t, 1e-13);
    double term = std::exp(-lambda);
    double series = term;
    for (int n = 1; n <= order_cap; ++n) {
        term *= base / n;
        series += term;
    }
    return initial.hat(std::exp(-config.t) * rho) * series;
}

double poisson_tail(int m) {
    if (m < 1) throw std::domain_error("poisson_tail: m must be >= 1");
    double sum = 0.0;
    const double lm = std::log(static_cast<double>(m));
    for (int n = m; n <= 2 * m; ++n) {
        sum += std::exp(n * lm - m - std::lgamma(n + 1.0));
    }
    return sum;
}

PositivityReport positivity_scan(KernelFamily family, std::span<const double> epsilon_grid,
                                 std::span<const double> s_grid, double t, double r1, double r2,
                                 const Grid1D& grid) {
    if (!(r1 > 0.0 && r2 > 0.0 && t > 0.0)) {
        throw std::domain_error("positivity_scan: t, r1, r2 must be positive");
    }
    PositivityReport report;
    report.t = t;
    report.r1 = r1;
    report.r2 = r2;
    const InitialDatum initial = InitialDatum::indicator(r2);

    for (double s : s_grid) {
        for (double epsilon : epsilon_grid) {
            EvolutionSetup setup{KernelSpec::make(family, s), epsilon, initial, grid};
            DensityProfile u = to_density(evolve(setup, t));
            double alpha = std::numeric_limits<double>::infinity();
            for (int j = 0; j < grid.n_points; ++j) {
                if (std::abs(grid.x(j)) <= r1) alpha = std::min(alpha, u.values[j]);
            }
            if (alpha < -1e-6) {
                throw NumericError("positivity_scan: negative minimum, grid under-resolved",
                                   alpha);
            }
            report.cells.push_back({epsilon, s, alpha});
        }
    }
    report.min_alpha = std::numeric_limits<double>::infinity();
    report.max_alpha = 0.0;
    for (const auto& cell : report.cells) {
        report.min_alpha = std::min(report.min_alpha, cell.alpha);
        report.max_alpha = std::max(report.max_alpha, cell.alpha);
    }
    report.pass = report.min_alpha > 0.0 && report.max_alpha / report.min_alpha < 1e3;
    return report;
}

}  // namespace levyfp
