#include "levyfp/norms.hpp"

#include <algorithm>
#include <cmath>

namespace levyfp {

namespace {

double bracket(double x) { return std::sqrt(1.0 + x * x); }  // <x>

double tail_correction(const DensityProfile& f, double k) {
    if (!f.tail) return 0.0;
    const double p = f.tail->exponent;
    if (k >= p - 1.0) {
        throw TailCorrectionError("weighted_l1_norm: tail correction diverges for this weight");
    }
    const double X = f.grid.half_width;
    // 2 C int_X^inf x^{k-p} dx; <x>^k ~ x^k is accurate to O(X^-2) out there.
    return 2.0 * f.tail->coefficient * std::pow(X, k + 1.0 - p) / (p - 1.0 - k);
}

}  // namespace

double mass(const DensityProfile& f) {
    double sum = 0.0;
    for (double v : f.values) sum += v;
    return sum * f.grid.dx();
}

double weighted_l1_norm(const DensityProfile& f, double k) {
    if (k < 0.0) throw std::domain_error("weighted_l1_norm: k must be nonnegative");
    double sum = 0.0;
    for (int j = 0; j < f.grid.n_points; ++j) {
        sum += std::pow(bracket(f.grid.x(j)), k) * std::abs(f.values[j]);
    }
    return sum * f.grid.dx() + tail_correction(f, k);
}

double l2_norm(const DensityProfile& f) {
    double sum = 0.0;
    for (double v : f.values) sum += v * v;
    return std::sqrt(sum * f.grid.dx());
}

double linf_distance(const DensityProfile& f, const DensityProfile& g) {
    if (!(f.grid == g.grid)) throw GridError("linf_distance: grids differ");
    double m = 0.0;
    for (int j = 0; j < f.grid.n_points; ++j) {
        m = std::max(m, std::abs(f.values[j] - g.values[j]));
    }
    return m;
}

double weighted_l1_distance(const DensityProfile& f, const DensityProfile& g, double k) {
    if (!(f.grid == g.grid)) throw GridError("weighted_l1_distance: grids differ");
    double sum = 0.0;
    for (int j = 0; j < f.grid.n_points; ++j) {
        sum += std::pow(bracket(f.grid.x(j)), k) * std::abs(f.values[j] - g.values[j]);
    }
    return sum * f.grid.dx();
}

SobolevResult sobolev_norm_sq(const SpectralProfile& fhat, double m) {
    if (m < 0.0) throw std::domain_error("sobolev_norm_sq: m must be nonnegative");
    const double cutoff = fhat.grid.nyquist();
    SobolevResult result;
    std::array<double, 4> partials{};
    for (int j = 0; j < fhat.grid.n_points; ++j) {
        const double xi = fhat.grid.xi(j);
        const double term = std::pow(1.0 + xi * xi, m) * std::norm(fhat.values[j]);
        for (int level = 0; level < 4; ++level) {
            if (std::abs(xi) <= cutoff / (1 << (3 - level))) partials[level] += term;
        }
    }
    const double dxi = fhat.grid.dxi();
    for (auto& p : partials) p *= dxi;
    result.partial_integrals = partials;
    result.value = partials[3];
    // Octave contributions: growth (or failure to decay) at the top flags a
    // non-integrable tail at this regularity exponent.
    const double top = partials[3] - partials[2];
    const double prev = partials[2] - partials[1];
    result.divergent = top >= prev && top > 1e-300;
    return result;
}

double interpolation_theta(double m, double k, double d) {
    if (!(k > 0.0 && k < m)) throw std::domain_error("interpolation_theta: need 0 < k < m");
    return (m - k) / (m + 0.5 * d);
}

double interpolation_inequality_ratio(const DensityProfile& f, double k, double m) {
    const double theta = interpolation_theta(m, k, 1.0);
    const double lhs = weighted_l1_norm(f, k);
    const double l2 = l2_norm(f);
    const double l1m = weighted_l1_norm(f, m);
    return lhs / (std::pow(l2, theta) * std::pow(l1m, 1.0 - theta));
}

}  // namespace levyfp
