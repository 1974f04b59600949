#pragma once

#include <span>
#include <vector>

namespace levyfp {

// Log-log least-squares fit used by every convergence experiment. `residual`
// is the RMS deviation of log(ordinate) from the fitted line.
struct RateFit {
    std::vector<double> abscissa;
    std::vector<double> ordinate;
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;
    double target_slope = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Fits log(y) = slope * log(x) + intercept; pass iff |slope - target| <= tol
// and residual <= residual_threshold. Requires at least two positive samples.
RateFit fit_loglog(std::span<const double> x, std::span<const double> y, double target_slope,
                   double tolerance, double residual_threshold = 0.5);

// One-sided variant: pass iff slope >= min_slope (convergence at least this
// fast) and residual is controlled.
RateFit fit_loglog_at_least(std::span<const double> x, std::span<const double> y,
                            double min_slope, double residual_threshold = 0.5);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;
};

// Ordinary least squares y = slope * x + intercept.
LinearFit fit_linear(std::span<const double> x, std::span<const double> y);

// Exponential-decay fit: log(y) regressed on x. The decay rate is -slope.
LinearFit fit_semilog(std::span<const double> x, std::span<const double> y);

}  // namespace levyfp
