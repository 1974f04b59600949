#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>

#include "levyfp/spectral_solver.hpp"
#include "levyfp/wildsum.hpp"

using namespace levyfp;

namespace {

const KernelSpec kStable075 = KernelSpec::make(KernelFamily::Stable, 0.75);

}  // namespace

TEST_CASE("poisson tail values") {
    // m = 1: e^{-1} (1/1! + 1/2!) = 3/(2e)
    CHECK(poisson_tail(1) == doctest::Approx(1.5 / std::exp(1.0)).epsilon(1e-12));
    CHECK_THROWS_AS(poisson_tail(0), std::domain_error);

    // normal approximation: half the mass sits above the mean
    CHECK(poisson_tail(10000) == doctest::Approx(0.5).epsilon(5e-3));

    double mn = 1.0;
    for (int m = 1; m <= 1000; ++m) {
        const double v = poisson_tail(m);
        CHECK(v > 0.0);
        CHECK(v < 1.0);
        mn = std::min(mn, v);
    }
    CHECK(mn >= 0.49);
}

TEST_CASE("poisson tail against an exact-arithmetic oracle") {
    namespace mp = boost::multiprecision;
    for (int m = 1; m <= 20; ++m) {
        // exact rational sum of m^n/n!, then one high-precision e^{-m} factor
        mp::cpp_rational sum = 0;
        for (int n = m; n <= 2 * m; ++n) {
            mp::cpp_int num = 1, den = 1;
            for (int j = 0; j < n; ++j) num *= m;
            for (int j = 2; j <= n; ++j) den *= j;
            sum += mp::cpp_rational(num, den);
        }
        const mp::cpp_bin_float_50 exact =
            mp::cpp_bin_float_50(sum) * exp(-mp::cpp_bin_float_50(m));
        CHECK(poisson_tail(m) == doctest::Approx(exact.convert_to<double>()).epsilon(1e-12));
    }
}

TEST_CASE("wild factor endpoints") {
    const double eps = 1.0, t = 1.0;
    const double lambda = t / std::pow(eps, 1.5);
    InitialDatum init = InitialDatum::gaussian(1.0, 0.0);

    // truncation at order zero keeps only the no-jump weight
    WildConfig zero{kStable075, eps, t, 0, 100, 5, false};
    CHECK(wild_spectral(zero, init, 0.0).value.real() ==
          doctest::Approx(std::exp(-lambda)).epsilon(1e-12));

    // the full sum at frequency zero restores unit mass exactly
    WildConfig full{kStable075, eps, t, 30, 50, 5};
    WildValue v = wild_spectral(full, init, 0.0);
    CHECK(v.value.real() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(v.poisson_deficit < 1e-10);
}

TEST_CASE("wild truncation guard") {
    InitialDatum init = InitialDatum::gaussian(1.0, 0.0);
    WildConfig starving{kStable075, 0.3, 2.0, 4, 100, 5};  // lambda ~ 12.2
    CHECK_THROWS_AS(wild_spectral(starving, init, 1.0), NumericError);
    WildConfig tolerated = starving;
    tolerated.enforce_mass_coverage = false;
    CHECK(wild_spectral(tolerated, init, 1.0).poisson_deficit > 1e-4);
}

TEST_CASE("wild resummation agrees with the closed evolution formula") {
    const double eps = 0.5, t = 1.0;
    InitialDatum init = InitialDatum::gaussian(1.0, 0.0);
    WildConfig cfg{kStable075, eps, t, 24, 4000, 2024};
    for (double rho : {0.2, 1.0, 3.0, 8.0}) {
        const WildValue w = wild_spectral(cfg, init, rho);
        const double exact = init.hat(std::exp(-t) * rho).real() *
                             std::exp(exponent_integral(kStable075, eps, t, rho));
        CHECK(std::abs(w.value.real() - exact) <= 3.0 * w.std_error + 1e-12);
    }
}

TEST_CASE("monte-carlo error shrinks like 1/sqrt(samples)") {
    InitialDatum init = InitialDatum::gaussian(1.0, 0.0);
    WildConfig small{kStable075, 0.5, 1.0, 24, 2000, 9};
    WildConfig large = small;
    large.samples = 8000;
    const double se_small = wild_spectral(small, init, 2.0).std_error;
    const double se_large = wild_spectral(large, init, 2.0).std_error;
    CHECK(se_large / se_small == doctest::Approx(0.5).epsilon(0.25));
}

TEST_CASE("low-order deterministic evaluation cross-checks the sampled path") {
    // lambda = 1: the first seven terms carry all but ~8e-5 of the mass, and
    // both paths truncate identically.
    InitialDatum init = InitialDatum::gaussian(1.0, 0.0);
    WildConfig cfg{kStable075, 1.0, 1.0, 6, 20000, 77, false};
    for (double rho : {0.5, 2.0, 5.0}) {
        const WildValue w = wild_spectral(cfg, init, rho);
        const std::complex<double> exact = wild_spectral_exact(cfg, init, rho, 6);
        CHECK(std::abs(w.value.real() - exact.real()) <= 3.0 * w.std_error + 1e-12);
    }
}

TEST_CASE("wild sampling is deterministic given the seed") {
    InitialDatum init = InitialDatum::gaussian(1.0, 0.0);
    WildConfig cfg{kStable075, 0.5, 1.0, 24, 500, 123};
    const WildValue a = wild_spectral(cfg, init, 1.7);
    const WildValue b = wild_spectral(cfg, init, 1.7);
    CHECK(a.value == b.value);
    CHECK(a.std_error == b.std_error);
}

TEST_CASE("positivity scan on the default parameter box") {
    Grid1D grid = Grid1D::make(1 << 13, 50.0);
    std::vector<double> eps{0.1, 0.5, 1.0};
    std::vector<double> ss{0.6, 0.9};
    PositivityReport rep = positivity_scan(KernelFamily::Stable, eps, ss, 1.0, 1.0, 1.0, grid);
    CHECK(rep.pass);
    CHECK(rep.min_alpha > 0.0);
    CHECK(rep.max_alpha / rep.min_alpha < 1e3);
    CHECK(rep.cells.size() == 6);
}

TEST_CASE("positivity floor grows with the initial mass window") {
    Grid1D grid = Grid1D::make(1 << 13, 50.0);
    std::vector<double> eps{0.5};
    std::vector<double> ss{0.75};
    const double a1 =
        positivity_scan(KernelFamily::Stable, eps, ss, 1.0, 1.0, 0.5, grid).min_alpha;
    const double a2 =
        positivity_scan(KernelFamily::Stable, eps, ss, 1.0, 1.0, 1.0, grid).min_alpha;
    const double a3 =
        positivity_scan(KernelFamily::Stable, eps, ss, 1.0, 1.0, 2.0, grid).min_alpha;
    CHECK(a1 <= a2 * 1.001);
    CHECK(a2 <= a3 * 1.001);
}

TEST_CASE("stationary data dominates the equilibrium floor on the ball") {
    Grid1D grid = Grid1D::make(1 << 13, 50.0);
    const double eps = 0.5;
    EvolutionSetup setup{kStable075, eps, InitialDatum::equilibrium(kStable075, eps), grid};
    DensityProfile u = to_density(evolve(setup, 1.0));
    DensityProfile f = to_density(equilibrium_hat(kStable075, eps, grid));
    double alpha = 1e300, floor = 1e300;
    for (int j = 0; j < grid.n_points; ++j) {
        if (std::abs(grid.x(j)) > 1.0) continue;
        alpha = std::min(alpha, u.values[j]);
        floor = std::min(floor, f.values[j]);
    }
    CHECK(alpha > 0.0);
    CHECK(alpha == doctest::Approx(floor).epsilon(1e-4));
}
