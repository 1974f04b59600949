#pragma once

#include <array>

#include "levyfp/grids.hpp"

namespace levyfp {

// Midpoint quadrature of the raw samples (cell-centered grid).
double mass(const DensityProfile& f);

// Weighted L^1 norm  int <x>^k |f(x)| dx,  <x> = (1+x^2)^{1/2}, k in [0, 2).
// Adds the analytic tail correction 2 C int_X^inf x^{k-p} dx when the profile
// carries a registered asymptote C |x|^{-p}; throws TailCorrectionError when
// k >= p - 1 (the corrected integral would diverge).
double weighted_l1_norm(const DensityProfile& f, double k);

// Plain L^2 norm by grid quadrature.
double l2_norm(const DensityProfile& f);

double linf_distance(const DensityProfile& f, const DensityProfile& g);

// Weighted-L^1 distance between two profiles on the same grid (no tail term;
// leading tails of probability profiles from one family cancel).
double weighted_l1_distance(const DensityProfile& f, const DensityProfile& g, double k);

// Quadrature of <xi>^{2m} |fhat|^2 over the dual grid together with a
// divergence diagnostic: the integral is recomputed at cutoffs Xi/8, Xi/4,
// Xi/2, Xi and flagged divergent when the top-octave contribution does not
// decrease.
struct SobolevResult {
    double value = 0.0;
    bool divergent = false;
    std::array<double, 4> partial_integrals{};  // cutoffs Xi/8 .. Xi
};

SobolevResult sobolev_norm_sq(const SpectralProfile& fhat, double m);

// Interpolation exponent (m - k) / (m + d/2) for 0 < k < m.
double interpolation_theta(double m, double k, double d);

// ||f||_{L1_k} / (||f||_{L2}^theta ||f||_{L1_m}^{1-theta}). The splitting
// argument behind the interpolation bound gives a constant close to 2 (two
// equal terms at the optimal split radius), so the ratio is bounded by ~2
// for genuine L^2 cap L^1_m functions; it is scale invariant.
double interpolation_inequality_ratio(const DensityProfile& f, double k, double m);

}  // namespace levyfp
