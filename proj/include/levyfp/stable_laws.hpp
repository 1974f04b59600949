#pragma once

#include <span>

#include "levyfp/grids.hpp"

namespace levyfp {

// Symmetric 2s-stable law with symbol e^{-gamma |xi|^{2s}}. s = 1/2 (Cauchy)
// and s = 1 (Gaussian of covariance 2 gamma) are included as endpoints.
struct StableParams {
    double s = 1.0;
    double gamma = 1.0;

    static StableParams make(double s, double gamma);
};

double stable_symbol(const StableParams& params, double rho);

// Coefficient of the |x|^{-1-2s} tail of the standard stable density;
// proportional to (1-s) as s -> 1.
double stable_tail_constant(double s);

// Density by Fourier inversion on the grid; carries the tail asymptote.
DensityProfile stable_density(const StableParams& params, const Grid1D& grid);

// Pointwise density by adaptive cosine-transform quadrature.
double stable_density_point(const StableParams& params, double x);

// max |G^{s;g1} * G^{s;g2} - G^{s;g1+g2}| with the convolution evaluated
// through the symbol product.
double convolution_identity_check(double s, double gamma1, double gamma2, const Grid1D& grid);

// Variance schedule sigma(t) = (1 - e^{-2 s t}) / (2 s) of the evolution
// toward G^{s;1/(2s)}.
double sigma_schedule(double s, double t);

// Pointwise minimum of stable densities over the construction s-grid;
// strictly positive on the grid.
struct LowerEnvelope {
    Grid1D grid;
    std::vector<double> values;
    std::vector<double> s_grid;
};

LowerEnvelope lower_envelope(std::span<const double> s_grid, const Grid1D& grid);

// || G^s - G^1 ||_{L^1_k} with the analytic heavy-tail correction outside the
// grid. Requires k < 2s; throws TailCorrectionError otherwise.
double stable_to_gauss_distance(double s, double k, const Grid1D& grid);

}  // namespace levyfp
