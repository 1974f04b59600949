#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "levyfp/errors.hpp"

namespace levyfp {

// Uniform symmetric grid on [-half_width, half_width] with cell-centered
// samples x_j = -X + (j + 1/2) dx. The discrete Fourier dual has spacing
// dxi = pi / X, frequencies (m - n/2) dxi for m = 0..n-1, Nyquist pi / dx.
struct Grid1D {
    int n_points = 0;
    double half_width = 0.0;

    static Grid1D make(int n_points, double half_width);

    double dx() const { return 2.0 * half_width / n_points; }
    double dxi() const { return M_PI / half_width; }
    double nyquist() const { return M_PI / dx(); }
    double x(int j) const { return -half_width + (j + 0.5) * dx(); }
    double xi(int m) const { return (m - n_points / 2) * dxi(); }
    int zero_index() const { return n_points / 2; }

    bool operator==(const Grid1D& other) const {
        return n_points == other.n_points && half_width == other.half_width;
    }
};

// Provenance of a profile: which kernel, which parameters produced it.
struct ProfileMeta {
    std::string kernel_id;
    double epsilon = std::numeric_limits<double>::quiet_NaN();
    double s = std::numeric_limits<double>::quiet_NaN();
    double t = std::numeric_limits<double>::quiet_NaN();
};

// Power-law decay model |f(x)| ~ coefficient * |x|^(-exponent) beyond the
// grid edge, used by weighted norms to correct truncation.
struct TailAsymptote {
    double coefficient = 0.0;
    double exponent = 0.0;
};

struct DensityProfile {
    Grid1D grid;
    std::vector<double> values;
    ProfileMeta meta;
    std::optional<TailAsymptote> tail;
};

// Complex samples on the dual grid, ordered by ascending frequency.
// Hermitian symmetry holds whenever the underlying function is real.
struct SpectralProfile {
    Grid1D grid;
    std::vector<std::complex<double>> values;
    ProfileMeta meta;

    const std::complex<double>& at_zero() const { return values[grid.zero_index()]; }
};

// Forward transform \hat f(xi) = int e^{-i x xi} f(x) dx evaluated at the
// dual grid points (trapezoid-in-space, FFT accelerated).
SpectralProfile to_spectral(const DensityProfile& f);

// Inverse transform (2 pi)^{-1} int e^{i x xi} \hat f(xi) dxi on the grid.
// The imaginary part is dropped; it is zero up to roundoff for Hermitian input.
DensityProfile to_density(const SpectralProfile& fhat);

// Samples a real radial symbol g(|xi|) on the dual grid.
SpectralProfile sample_radial_symbol(const Grid1D& grid, const std::function<double(double)>& g,
                                     ProfileMeta meta = {});

// Applies a complex radial multiplier pointwise (used by evolution formulas).
SpectralProfile sample_spectral(const Grid1D& grid,
                                const std::function<std::complex<double>(double)>& g,
                                ProfileMeta meta = {});

}  // namespace levyfp
