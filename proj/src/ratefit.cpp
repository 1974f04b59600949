#include "levyfp/ratefit.hpp"

#include <cmath>
#include <stdexcept>

namespace levyfp {

LinearFit fit_linear(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("fit_linear: need at least two matching samples");
    }
    const std::size_t n = x.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    LinearFit fit;
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (fit.slope * x[i] + fit.intercept);
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

LinearFit fit_semilog(std::span<const double> x, std::span<const double> y) {
    std::vector<double> logs(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!(y[i] > 0.0)) {
            throw std::invalid_argument("fit_semilog: ordinates must be positive");
        }
        logs[i] = std::log(y[i]);
    }
    return fit_linear(x, logs);
}

namespace {

RateFit fit_core(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("fit_loglog: need at least two matching samples");
    }
    RateFit fit;
    fit.abscissa.assign(x.begin(), x.end());
    fit.ordinate.assign(y.begin(), y.end());
    std::vector<double> lx(x.size()), ly(y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
            throw std::invalid_argument("fit_loglog: samples must be positive");
        }
        lx[i] = std::log(x[i]);
        ly[i] = std::log(y[i]);
    }
    const LinearFit lin = fit_linear(lx, ly);
    fit.slope = lin.slope;
    fit.intercept = lin.intercept;
    fit.residual = lin.residual;
    return fit;
}

}  // namespace

RateFit fit_loglog(std::span<const double> x, std::span<const double> y, double target_slope,
                   double tolerance, double residual_threshold) {
    RateFit fit = fit_core(x, y);
    fit.target_slope = target_slope;
    fit.tolerance = tolerance;
    fit.pass = std::abs(fit.slope - target_slope) <= tolerance &&
               fit.residual <= residual_threshold;
    return fit;
}

RateFit fit_loglog_at_least(std::span<const double> x, std::span<const double> y,
                            double min_slope, double residual_threshold) {
    RateFit fit = fit_core(x, y);
    fit.target_slope = min_slope;
    fit.tolerance = 0.0;
    fit.pass = fit.slope >= min_slope && fit.residual <= residual_threshold;
    return fit;
}

}  // namespace levyfp
