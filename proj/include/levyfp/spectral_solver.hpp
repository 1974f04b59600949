#pragma once

#include <complex>
#include <memory>
#include <variant>

#include "levyfp/grids.hpp"
#include "levyfp/kernels.hpp"

namespace levyfp {

// Analytic initial datum: supplies \hat u_0 at arbitrary real frequency, so
// the evolution formula never interpolates on the grid. All variants are
// probability data (\hat u_0(0) = 1).
class InitialDatum {
  public:
    static InitialDatum gaussian(double variance, double center = 0.0);
    static InitialDatum stable_law(double s, double gamma);
    static InitialDatum indicator(double radius);  // normalized 1_{[-R,R]}, sinc symbol
    static InitialDatum equilibrium(KernelSpec kernel, double epsilon);

    std::complex<double> hat(double xi) const;
    std::string describe() const;

  private:
    struct Gaussian {
        double variance, center;
    };
    struct Stable {
        double s, gamma;
    };
    struct Indicator {
        double radius;
    };
    struct Equilibrium {
        KernelSpec kernel;
        double epsilon;
    };
    using Payload = std::variant<Gaussian, Stable, Indicator, Equilibrium>;

    explicit InitialDatum(Payload payload) : payload_(std::move(payload)) {}
    Payload payload_;
};

struct EvolutionSetup {
    KernelSpec kernel;
    double epsilon = 1.0;
    InitialDatum initial;
    Grid1D grid;
};

// E(t, rho) = eps^{-2s} int_0^t zeta_eps(e^{-tau} rho) dtau, computed in the
// log-frequency variable where the integrand is smooth and bounded. Always
// <= 0; exactly 0 at t = 0 or rho = 0.
double exponent_integral(const KernelSpec& kernel, double epsilon, double t, double rho,
                         double abs_tol = 1e-12);

// The t -> infinity exponent; log of the equilibrium symbol.
double equilibrium_exponent(const KernelSpec& kernel, double epsilon, double rho,
                            double abs_tol = 1e-12);

// Tabulated E(t, rho_i) on a uniform time lattice, evaluated by cubic Hermite
// interpolation in t (exact in rho at the tabulated radii). Segment integrals
// use Gauss-Legendre; the time derivative is analytic, so interpolation error
// is O(h^4) in the node spacing.
class ExponentCache {
  public:
    ExponentCache(const KernelSpec& kernel, double epsilon, std::vector<double> rho_values,
                  double t_max, int time_nodes = 512);

    double value(std::size_t rho_index, double t) const;
    double t_max() const { return t_max_; }
    std::size_t radial_count() const { return rho_.size(); }

  private:
    KernelSpec kernel_;
    double epsilon_;
    std::vector<double> rho_;
    double t_max_;
    int nodes_;
    double dt_;
    std::vector<double> table_;  // nodes_ values per radius, row-major
};

// Closed evolution formula \hat u(t, xi) = \hat u_0(e^{-t} xi) exp(E(t, |xi|)).
// Mass is conserved exactly: the value at xi = 0 is 1 for all t.
SpectralProfile evolve(const EvolutionSetup& setup, double t,
                       const ExponentCache* cache = nullptr);

// Equilibrium symbol exp(E(inf, |xi|)); radially nonincreasing, in (0, 1].
SpectralProfile equilibrium_hat(const KernelSpec& kernel, double epsilon, const Grid1D& grid);
double equilibrium_hat_point(const KernelSpec& kernel, double epsilon, double rho);

// Mass-conserving fractional reference: \hat v(t, xi) =
// \hat u_0(e^{-t} xi) exp(-sigma(t) |xi|^{2s}).
SpectralProfile ffp_reference(const InitialDatum& initial, double s, double t,
                              const Grid1D& grid);

// eps^{-2s}(\hat J(eps rho) - 1) + rho^{2s}: the symbol of the difference
// between the jump generator and its singular limit.
double consistency_multiplier_eps(const KernelSpec& kernel, double epsilon, double rho);

// eps^{-2s}(\hat J^s(eps rho) - 1) - eps^{-2}(\hat J^1(eps rho) - 1): the
// symbol of the fractional-to-classical generator difference.
double consistency_multiplier_s(KernelFamily family, double epsilon, double s, double rho);

}  // namespace levyfp
