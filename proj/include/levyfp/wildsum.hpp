#pragma once

#include <complex>
#include <cstdint>
#include <span>

#include "levyfp/grids.hpp"
#include "levyfp/kernels.hpp"
#include "levyfp/spectral_solver.hpp"

namespace levyfp {

struct WildConfig {
    KernelSpec kernel;
    double epsilon = 1.0;
    double t = 1.0;
    int truncation_order = 32;  // highest retained jump count
    int samples = 10000;
    std::uint64_t seed = 1;
    // When false, a truncation that misses Poisson mass is reported in the
    // result instead of throwing; used for term-by-term cross-checks where
    // both sides truncate identically.
    bool enforce_mass_coverage = true;
};

struct WildValue {
    std::complex<double> value;
    double std_error = 0.0;       // Monte-Carlo standard error of the factor
    double poisson_deficit = 0.0; // Poisson mass beyond the truncation order
};

// Stochastic resummation of the jump expansion in Fourier variables:
//   u_hat(t, rho) = e^{-lambda} u0_hat(e^{-t} rho)
//                   sum_n (lambda^n / n!) E[ prod_j J_hat(eps e^{T_j - t} rho) ],
// lambda = t / eps^{2s}, T_j ordered uniforms on [0, t]. The simplex integral
// of each term equals (t^n/n!) times that expectation. Per-sample RNG streams
// derive from (seed, sample index), so results are independent of scheduling.
// Throws NumericError if the truncation misses more than 1e-4 Poisson mass.
WildValue wild_spectral(const WildConfig& config, const InitialDatum& initial, double rho);

// Deterministic low-order evaluation of the same series: each ordered-time
// integral reduces to a power of a single 1-D quadrature because the
// integrand is symmetric. Cross-checks the sampled path term by term.
std::complex<double> wild_spectral_exact(const WildConfig& config, const InitialDatum& initial,
                                         double rho, int order_cap = 6);

// e^{-m} sum_{n=m}^{2m} m^n / n!, log-Gamma stabilized; in (0, 1) for m >= 1.
double poisson_tail(int m);

struct PositivityCell {
    double epsilon = 0.0;
    double s = 0.0;
    double alpha = 0.0;  // min of u(t, x) over |x| <= r1
};

struct PositivityReport {
    std::vector<PositivityCell> cells;
    double min_alpha = 0.0;
    double max_alpha = 0.0;
    double t = 0.0;
    double r1 = 0.0;
    double r2 = 0.0;
    bool pass = false;  // every alpha > 0 and max/min < 1e3
};

// Evolves the normalized indicator of [-r2, r2] to time t through the exact
// spectral path and records min u(t, .) over [-r1, r1] for every (eps, s).
PositivityReport positivity_scan(KernelFamily family, std::span<const double> epsilon_grid,
                                 std::span<const double> s_grid, double t, double r1, double r2,
                                 const Grid1D& grid);

}  // namespace levyfp
