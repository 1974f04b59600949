#include "levyfp/stable_laws.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "levyfp/norms.hpp"
#include "levyfp/quadrature.hpp"

namespace levyfp {

namespace {

constexpr double kResolutionTol = 1e-8;

void check_resolved(const StableParams& params, const Grid1D& grid) {
    const double edge = stable_symbol(params, grid.nyquist());
    if (edge > kResolutionTol) {
        // smallest rho with e^{-gamma rho^{2s}} <= tol
        const double needed =
            std::pow(-std::log(kResolutionTol) / params.gamma, 0.5 / params.s);
        const double suggested = grid.n_points * M_PI / (2.0 * needed);
        std::ostringstream os;
        os << "stable_density: symbol is " << edge << " at the dual edge; half_width <= "
           << suggested << " resolves it";
        throw ResolutionError(os.str(), suggested);
    }
}

ProfileMeta stable_meta(const StableParams& params) {
    ProfileMeta meta;
    std::ostringstream os;
    os << "stable-law(s=" << params.s << ",gamma=" << params.gamma << ")";
    meta.kernel_id = os.str();
    meta.s = params.s;
    return meta;
}

}  // namespace

StableParams StableParams::make(double s, double gamma) {
    if (!(s >= 0.5 && s <= 1.0)) {
        throw std::domain_error("StableParams: s must lie in [1/2, 1]");
    }
    if (!(gamma > 0.0)) {
        throw std::domain_error("StableParams: gamma must be positive");
    }
    return StableParams{s, gamma};
}

double stable_symbol(const StableParams& params, double rho) {
    return std::exp(-params.gamma * std::pow(std::abs(rho), 2.0 * params.s));
}

double stable_tail_constant(double s) {
    if (s >= 1.0) return 0.0;
    // Series expansion of the symmetric stable density: the |x|^{-1-2s}
    // coefficient is Gamma(1+2s) sin(pi s) / pi. Checks out against the
    // Cauchy law (s = 1/2: 1/pi) and vanishes like 2(1-s) as s -> 1.
    return std::tgamma(1.0 + 2.0 * s) * std::sin(s * M_PI) / M_PI;
}

DensityProfile stable_density(const StableParams& params, const Grid1D& grid) {
    check_resolved(params, grid);
    auto fhat = sample_radial_symbol(
        grid, [&](double r) { return stable_symbol(params, r); }, stable_meta(params));
    DensityProfile profile = to_density(fhat);
    const double k_tail = stable_tail_constant(params.s);
    if (k_tail > 0.0) {
        // G^{s;gamma} = gamma^{-1/2s} G^s(x gamma^{-1/2s}): the tail scales
        // linearly in gamma, consistent with additivity under convolution.
        profile.tail = TailAsymptote{k_tail * params.gamma, 1.0 + 2.0 * params.s};
    }
    return profile;
}

double stable_density_point(const StableParams& params, double x) {
    const double cutoff =
        std::pow(-std::log(1e-18) / params.gamma, 0.5 / params.s);
    const double ax = std::abs(x);
    const std::size_t chunks = static_cast<std::size_t>(std::ceil(cutoff * ax / M_PI)) + 16;
    const double integral = chunked_simpson(
        [&](double rho) { return stable_symbol(params, rho) * std::cos(rho * x); }, 0.0, cutoff,
        chunks, 1e-12);
    return integral / M_PI;
}

double convolution_identity_check(double s, double gamma1, double gamma2, const Grid1D& grid) {
    const StableParams p1 = StableParams::make(s, gamma1);
    const StableParams p2 = StableParams::make(s, gamma2);
    const StableParams p12 = StableParams::make(s, gamma1 + gamma2);
    check_resolved(p12, grid);  // the widest density of the three in space
    auto diff_hat = sample_radial_symbol(grid, [&](double r) {
        return stable_symbol(p1, r) * stable_symbol(p2, r) - stable_symbol(p12, r);
    });
    DensityProfile diff = to_density(diff_hat);
    double max_abs = 0.0;
    for (double v : diff.values) max_abs = std::max(max_abs, std::abs(v));
    return max_abs;
}

double sigma_schedule(double s, double t) {
    if (t < 0.0) throw std::domain_error("sigma_schedule: t must be nonnegative");
    return -std::expm1(-2.0 * s * t) / (2.0 * s);
}

LowerEnvelope lower_envelope(std::span<const double> s_grid, const Grid1D& grid) {
    if (s_grid.empty()) {
        throw ConfigError("lower_envelope: empty s-grid");
    }
    LowerEnvelope env;
    env.grid = grid;
    env.s_grid.assign(s_grid.begin(), s_grid.end());
    env.values.assign(grid.n_points, std::numeric_limits<double>::infinity());
    for (double s : s_grid) {
        DensityProfile g = stable_density(StableParams::make(s, 1.0), grid);
        for (int j = 0; j < grid.n_points; ++j) {
            env.values[j] = std::min(env.values[j], g.values[j]);
        }
    }
    return env;
}

double stable_to_gauss_distance(double s, double k, const Grid1D& grid) {
    if (!(k > 0.0 && k < 1.0)) {
        throw std::domain_error("stable_to_gauss_distance: k must lie in (0, 1)");
    }
    if (k >= 2.0 * s) {
        throw TailCorrectionError("stable_to_gauss_distance: weight k >= 2s, tail diverges");
    }
    DensityProfile gs = stable_density(StableParams::make(s, 1.0), grid);
    DensityProfile g1 = stable_density(StableParams::make(1.0, 1.0), grid);
    double sum = 0.0;
    for (int j = 0; j < grid.n_points; ++j) {
        const double x = grid.x(j);
        sum += std::pow(1.0 + x * x, 0.5 * k) * std::abs(gs.values[j] - g1.values[j]);
    }
    sum *= grid.dx();
    // Beyond the grid the difference is the heavy tail of G^s alone.
    const double k_tail = stable_tail_constant(s);
    sum += 2.0 * k_tail * std::pow(grid.half_width, k - 2.0 * s) / (2.0 * s - k);
    return sum;
}

}  // namespace levyfp
