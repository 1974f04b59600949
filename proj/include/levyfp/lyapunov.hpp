#pragma once

#include <span>

#include "levyfp/grids.hpp"
#include "levyfp/kernels.hpp"

namespace levyfp {

// L* <x>^k for the dual generator
//   L* phi = eps^{-2s} int J_eps(y) [phi(x+y) - phi(x)] dy - x phi'(x).
// The jump integral runs over the unscaled variable z = y/eps, split at
// Y = max(10, 5/eps): grid quadrature with symmetric +/-z pairing inside
// (cancelling the odd first-order term in floating point), the registered
// |z|^{-1-2s} asymptote outside.
class DualGenerator {
  public:
    DualGenerator(const KernelSpec& kernel, double epsilon);

    // Requires k in (0, 1] and k < 2s - 0.05 (tail-divergence guard).
    double apply(double k, double x) const;

    // eps^{-2s} int_{|z| <= radius} J(z) [phi(x+eps z) - phi(x)] dz; scales
    // like eps^{2-2s} as eps -> 0 at fixed x.
    double diffusion_near_field(double k, double x, double radius) const;

    // M_2^R(J) = int_{|z| <= radius} z^2 J(z) dz.
    double truncated_second_moment(double radius) const;

    double split_radius() const { return y_split_; }

  private:
    double paired_jump_sum(double k, double x, double radius) const;

    KernelSpec kernel_;
    double epsilon_;
    double y_split_;
    DensityProfile j_;  // kernel density sampled once on its own grid
};

struct LyapunovFit {
    std::vector<double> x_grid;
    std::vector<double> values;  // L* <x>^k on the grid
    double c_l = 0.0;
    double lambda_l = 0.0;
    double epsilon = 0.0;
    double s = 0.0;
    double k = 0.0;
    bool pass = false;  // lambda_l >= lambda_target
};

// Fits the smallest C and largest lambda with L* <x>^k <= C - lambda <x>^k at
// every grid point. Throws NumericError when no positive lambda is admissible.
LyapunovFit lyapunov_fit(const KernelSpec& kernel, double epsilon, double k,
                         std::span<const double> x_grid, double lambda_target = 0.1);

// -(-Laplace)^s <x>^k at one point via the singular-integral form: symmetric
// second differences near the origin (series below 1e-3), adaptive quadrature
// in the log variable, analytic power tail.
double fractional_laplacian_weight(double s, double k, double x);

// max over the grid of |(-(-Laplace)^s <x>^k)| / (<x>^{k-2s} (1 + 1/2s + 1/(2s-k))).
// Requires k < 2s.
double fractional_weight_decay(double s, double k, std::span<const double> x_grid);

}  // namespace levyfp
