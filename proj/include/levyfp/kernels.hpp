#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "levyfp/grids.hpp"

namespace levyfp {

enum class KernelFamily { Stable, ScreenedPoisson, StudentGaussMixture, UserSymbol };

std::string family_name(KernelFamily family);
KernelFamily family_from_name(const std::string& name);

// Weights of the heavy-tailed/Gaussian blend: J^s = a * phi_t + (1-a) * phi_g,
// where phi_t is a Student-t of parameter 2s and phi_g a Gaussian of variance
// 2*gamma. a is chosen so the symbol expands as 1 - rho^{2s} + O(rho^{2s+2}),
// gamma so the rho^2 term cancels exactly.
struct MixtureCoefficients {
    double a = 0.0;
    double gamma = 0.0;
};

// Valid for s in (1/2, 1); throws std::domain_error outside.
MixtureCoefficients mixture_coefficients(double s);

// Constants entering the kernel hypotheses: low-frequency remainder exponent
// delta and constant c0, pointwise tail bound constant/radius, and the
// variance of the Gaussian core majorant used by the tail check.
struct KernelConstants {
    double delta = 1.0;
    double c0 = 0.5;
    double tail_const = 2.5;
    double tail_radius = 5.0;
    double psi_variance = 8.0;
};

// A heavy-tailed probability kernel described by its radial Fourier symbol.
// Immutable after construction; cheap to copy and safe to share.
class KernelSpec {
  public:
    // Fractional member, s strictly inside (1/2, 1). Family defaults for the
    // hypothesis constants; use the overload to override them.
    static KernelSpec make(KernelFamily family, double s);
    static KernelSpec make(KernelFamily family, double s, KernelConstants constants);

    // The classical (s = 1) member the family converges to: Gaussian symbol
    // for Stable and StudentGaussMixture, 1/(1+rho^2) for ScreenedPoisson.
    static KernelSpec classical(KernelFamily family);

    static KernelSpec user(std::function<double(double)> symbol, double s,
                           KernelConstants constants);

    // Radial symbol \hat J^s at frequency rho >= 0. Always 1 at rho = 0.
    double fourier_symbol(double rho) const;

    // \hat J(epsilon * rho) - 1, in (-2, 0] for our families.
    double zeta(double epsilon, double rho) const;

    // R_s(rho) = \hat J(rho) - 1 + rho^{2s}, evaluated cancellation-free near 0.
    double remainder(double rho) const;

    // (1 - \hat J(rho)) / rho^{2s}; tends to 1 as rho -> 0.
    double symbol_deficit_ratio(double rho) const;

    // Coefficient of the |x|^{-1-2s} density tail implied by the unit
    // rho^{2s} symbol coefficient. Vanishes at s = 1.
    double tail_coefficient() const;

    bool has_classical_member() const { return family_ != KernelFamily::UserSymbol; }

    KernelFamily family() const { return family_; }
    double s() const { return s_; }
    double delta() const { return constants_.delta; }
    double c0() const { return constants_.c0; }
    double tail_const() const { return constants_.tail_const; }
    double tail_radius() const { return constants_.tail_radius; }
    double psi_variance() const { return constants_.psi_variance; }
    std::string id() const;

  private:
    KernelSpec(KernelFamily family, double s, KernelConstants constants);

    KernelFamily family_;
    double s_;
    KernelConstants constants_;
    std::function<double(double)> user_symbol_;
    MixtureCoefficients mix_{};
};

// Inverse Fourier transform of the radial symbol on the grid. Requires the
// symbol to be below edge_tol at the dual-grid edge; otherwise throws
// ResolutionError carrying a half-width that would resolve it. The default
// suits symbols with exponential frequency decay; polynomial-tail symbols
// (screened Poisson) need a looser tolerance, at the cost of ringing of size
// edge_tol/(pi |x|) away from the origin.
DensityProfile density(const KernelSpec& kernel, const Grid1D& grid, double edge_tol = 1e-8);

// Pointwise inverse transform (1/pi) int_0^inf \hat J(rho) cos(rho x) drho by
// adaptive quadrature. Exact analytic frequency-tail handling at x = 0; for
// x != 0 the truncation radius is pushed until the tail bound is below 1e-7.
double density_point(const KernelSpec& kernel, double x);

struct HypothesisCheck {
    std::string name;
    double measured = 0.0;
    double bound = 0.0;
    bool pass = false;
};

struct HypothesisReport {
    std::vector<HypothesisCheck> entries;
    bool pass = false;
};

// Checks the three kernel hypotheses numerically: the low-frequency remainder
// bound sup |R_s|/rho^{2s+delta} <= c0 on rho <= 1, the pointwise tail bound
// J(x) <= tail_const (1-s) |x|^{-1-2s} + Psi(x) on [tail_radius, 0.8 X], and
// finiteness of int min(1,|y|^2) J(y) dy. Failures are report entries.
HypothesisReport verify_hypothesis1(const KernelSpec& kernel, const Grid1D& space_grid,
                                    int frequency_points = 2000);

// Measured constant of the s -> 1 symbol comparison:
// sup |(1-\hat J^s)/rho^{2s} - (1-\hat J^1)/rho^2| / ((1-s) rho^delta max(1,|log rho|)).
double verify_hypothesis2(KernelFamily family, double s, std::span<const double> rho_grid);
double verify_hypothesis2(KernelFamily family, double s);

}  // namespace levyfp
