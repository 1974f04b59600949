#include "levyfp/lyapunov.hpp"

#include <algorithm>
#include <cmath>

#include "levyfp/quadrature.hpp"

namespace levyfp {

namespace {

double bracket(double x) { return std::sqrt(1.0 + x * x); }

double weight(double x, double k) { return std::pow(1.0 + x * x, 0.5 * k); }

double weight_d2(double x, double k) {
    const double b2 = 1.0 + x * x;
    return k * std::pow(b2, 0.5 * k - 1.0) + k * (k - 2.0) * x * x * std::pow(b2, 0.5 * k - 2.0);
}

double weight_d4(double x, double k) {
    const double b2 = 1.0 + x * x;
    return 3.0 * k * (k - 2.0) * std::pow(b2, 0.5 * k - 2.0) +
           6.0 * k * (k - 2.0) * (k - 4.0) * x * x * std::pow(b2, 0.5 * k - 3.0) +
           k * (k - 2.0) * (k - 4.0) * (k - 6.0) * x * x * x * x * std::pow(b2, 0.5 * k - 4.0);
}

// phi(x + h) + phi(x - h) - 2 phi(x) for phi = <x>^k.
double second_difference(double x, double h, double k) {
    return weight(x + h, k) + weight(x - h, k) - 2.0 * weight(x, k);
}

// Grid for the kernel density: wide enough for the split radius, fine enough
// near zero where the second difference weights the quadrature.
Grid1D kernel_density_grid(double y_split) {
    double half = 64.0;
    while (half < 1.3 * y_split) half *= 2.0;
    return Grid1D::make(1 << 14, half);
}

}  // namespace

DualGenerator::DualGenerator(const KernelSpec& kernel, double epsilon)
    : kernel_(kernel),
      epsilon_(epsilon),
      y_split_(std::max(10.0, 5.0 / epsilon)),
      j_(density(kernel, kernel_density_grid(y_split_))) {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) {
        throw std::domain_error("DualGenerator: epsilon must lie in (0, 1]");
    }
}

double DualGenerator::paired_jump_sum(double k, double x, double radius) const {
    // sum over positive cells only; J is even so each cell carries the +/-z pair.
    const Grid1D& grid = j_.grid;
    double sum = 0.0;
    for (int i = grid.zero_index(); i < grid.n_points; ++i) {
        const double z = grid.x(i);
        if (z > radius) break;
        sum += j_.values[i] * second_difference(x, epsilon_ * z, k);
    }
    return sum * grid.dx();
}

double DualGenerator::diffusion_near_field(double k, double x, double radius) const {
    return paired_jump_sum(k, x, radius) / std::pow(epsilon_, 2.0 * kernel_.s());
}

double DualGenerator::truncated_second_moment(double radius) const {
    const Grid1D& grid = j_.grid;
    double sum = 0.0;
    for (int i = grid.zero_index(); i < grid.n_points; ++i) {
        const double z = grid.x(i);
        if (z > radius) break;
        sum += 2.0 * z * z * j_.values[i];
    }
    return sum * grid.dx();
}

double DualGenerator::apply(double k, double x) const {
    const double s = kernel_.s();
    if (!(k > 0.0 && k <= 1.0)) {
        throw std::domain_error("DualGenerator::apply: k must lie in (0, 1]");
    }
    if (k > 2.0 * s - 0.05) {
        throw std::domain_error("DualGenerator::apply: k too close to 2s, tail diverges");
    }
    const double near = paired_jump_sum(k, x, y_split_);

    // Far field: J(z) ~ K z^{-1-2s}. Quadrature in the log variable up to the
    // point where the bracket expansion takes over, then closed forms.
    const double k_tail = kernel_.tail_coefficient();
    double far = 0.0;
    if (k_tail > 0.0) {
        const double bx = bracket(x);
        const double z_far = std::max({20.0 * bx / epsilon_, 10.0 * y_split_});
        far = adaptive_simpson(
            [&](double w) {
                const double z = std::exp(w);
                return std::pow(z, -2.0 * s) * second_difference(x, epsilon_ * z, k);
            },
            std::log(y_split_), std::log(z_far), 1e-8 * std::max(1.0, weight(x, k)));
        // Beyond z_far the bracket is 2 (eps z)^k + c2 (eps z)^{k-2} - 2 <x>^k
        // up to O((<x>/eps z)^4); each power integrates in closed form.
        const double c2 = k * (1.0 + x * x) + k * (k - 2.0) * x * x;
        far += 2.0 * std::pow(epsilon_, k) * std::pow(z_far, k - 2.0 * s) / (2.0 * s - k) +
               c2 * std::pow(epsilon_, k - 2.0) * std::pow(z_far, k - 2.0 - 2.0 * s) /
                   (2.0 * s + 2.0 - k) -
               2.0 * std::pow(bx, k) * std::pow(z_far, -2.0 * s) / (2.0 * s);
        far *= k_tail;
    }
    const double drift = -k * x * x * std::pow(1.0 + x * x, 0.5 * k - 1.0);
    return (near + far) / std::pow(epsilon_, 2.0 * s) + drift;
}

LyapunovFit lyapunov_fit(const KernelSpec& kernel, double epsilon, double k,
                         std::span<const double> x_grid, double lambda_target) {
    if (x_grid.empty()) throw ConfigError("lyapunov_fit: empty x grid");
    double max_abs_x = 0.0;
    for (double x : x_grid) max_abs_x = std::max(max_abs_x, std::abs(x));
    if (max_abs_x < 20.0) {
        throw ConfigError("lyapunov_fit: x grid must extend to |x| >= 20");
    }

    DualGenerator generator(kernel, epsilon);
    LyapunovFit fit;
    fit.epsilon = epsilon;
    fit.s = kernel.s();
    fit.k = k;
    fit.x_grid.assign(x_grid.begin(), x_grid.end());
    fit.values.reserve(x_grid.size());
    for (double x : x_grid) fit.values.push_back(generator.apply(k, x));

    // Inner region sets the constant; the drift-dominated outer region sets
    // the rate lambda = min (C_probe - L* phi) / <x>^k over |x| >= x0.
    const double x0 = 5.0;
    double c_probe = 0.0;
    for (std::size_t i = 0; i < fit.x_grid.size(); ++i) {
        if (std::abs(fit.x_grid[i]) <= x0) c_probe = std::max(c_probe, fit.values[i]);
    }
    double lambda = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < fit.x_grid.size(); ++i) {
        const double ax = std::abs(fit.x_grid[i]);
        if (ax < x0) continue;
        lambda = std::min(lambda, (c_probe - fit.values[i]) / weight(fit.x_grid[i], k));
    }
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw NumericError("lyapunov_fit: no admissible positive rate", lambda);
    }
    fit.lambda_l = lambda;
    fit.c_l = c_probe + lambda * weight(x0, k);
    for (std::size_t i = 0; i < fit.x_grid.size(); ++i) {
        if (fit.values[i] > fit.c_l - lambda * weight(fit.x_grid[i], k) + 1e-9) {
            throw NumericError("lyapunov_fit: fitted pair violated on the grid",
                               fit.values[i]);
        }
    }
    fit.pass = fit.lambda_l >= lambda_target;
    return fit;
}

double fractional_laplacian_weight(double s, double k, double x) {
    if (!(s > 0.0 && s < 1.0)) {
        throw std::domain_error("fractional_laplacian_weight: s must lie in (0, 1)");
    }
    if (!(k > 0.0 && k < 2.0 * s)) {
        throw std::domain_error("fractional_laplacian_weight: need 0 < k < 2s");
    }
    const double c_norm = std::pow(2.0, 2.0 * s) * std::tgamma(0.5 + s) * s /
                          (std::sqrt(M_PI) * std::tgamma(1.0 - s));

    const double z_min = 1e-3;
    const double bx = bracket(x);
    const double z_far = std::max(50.0, 20.0 * bx);

    // Taylor piece below z_min: the integrand is d2 z^{1-2s} + d4 z^{3-2s}/12.
    double integral = weight_d2(x, k) * std::pow(z_min, 2.0 - 2.0 * s) / (2.0 - 2.0 * s) +
                      weight_d4(x, k) * std::pow(z_min, 4.0 - 2.0 * s) / (12.0 * (4.0 - 2.0 * s));

    integral += adaptive_simpson(
        [&](double w) {
            const double z = std::exp(w);
            return std::pow(z, -2.0 * s) * second_difference(x, z, k);
        },
        std::log(z_min), std::log(z_far), 1e-10 * std::max(1.0, std::pow(bx, k)));

    const double c2 = k * (1.0 + x * x) + k * (k - 2.0) * x * x;
    integral += 2.0 * std::pow(z_far, k - 2.0 * s) / (2.0 * s - k) +
                c2 * std::pow(z_far, k - 2.0 - 2.0 * s) / (2.0 * s + 2.0 - k) -
                2.0 * std::pow(bx, k) * std::pow(z_far, -2.0 * s) / (2.0 * s);

    return c_norm * integral;
}

double fractional_weight_decay(double s, double k, std::span<const double> x_grid) {
    if (!(k < 2.0 * s)) {
        throw std::domain_error("fractional_weight_decay: need k < 2s");
    }
    const double envelope_const = 1.0 + 0.5 / s + 1.0 / (2.0 * s - k);
    double max_ratio = 0.0;
    for (double x : x_grid) {
        const double value = fractional_laplacian_weight(s, k, x);
        const double envelope = std::pow(1.0 + x * x, 0.5 * (k - 2.0 * s)) * envelope_const;
        max_ratio = std::max(max_ratio, std::abs(value) / envelope);
    }
    return max_ratio;
}

}  // namespace levyfp
