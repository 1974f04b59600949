#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "levyfp/kernels.hpp"
#include "levyfp/special.hpp"

using namespace levyfp;

namespace {

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) {
        g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    }
    return g;
}

}  // namespace

TEST_CASE("fourier symbols at reference points") {
    KernelSpec st = KernelSpec::make(KernelFamily::Stable, 0.75);
    CHECK(st.fourier_symbol(0.0) == 1.0);

    KernelSpec st05p = KernelSpec::make(KernelFamily::Stable, 0.5 + 1e-12);
    CHECK(st05p.fourier_symbol(2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-9));

    KernelSpec sp = KernelSpec::make(KernelFamily::ScreenedPoisson, 0.75);
    CHECK(sp.fourier_symbol(1.0) == doctest::Approx(0.5).epsilon(1e-14));

    CHECK_THROWS_AS(st.fourier_symbol(-1.0), std::domain_error);
}

TEST_CASE("symbol bounds and normalization across families and s") {
    for (auto fam : {KernelFamily::Stable, KernelFamily::ScreenedPoisson,
                     KernelFamily::StudentGaussMixture}) {
        for (double s : {0.55, 0.6, 0.75, 0.9, 0.99}) {
            KernelSpec k = KernelSpec::make(fam, s);
            CHECK(k.fourier_symbol(0.0) == 1.0);
            for (double rho : log_grid(1e-4, 100.0, 200)) {
                const double v = k.fourier_symbol(rho);
                CHECK(v <= 1.0);
                CHECK(v > -1.0);
            }
        }
    }
}

TEST_CASE("zeta values and range") {
    KernelSpec st = KernelSpec::make(KernelFamily::Stable, 0.75);
    CHECK(st.zeta(0.5, 0.0) == 0.0);
    CHECK(st.zeta(1.0, 1.0) == doctest::Approx(std::exp(-1.0) - 1.0).epsilon(1e-14));

    KernelSpec sp = KernelSpec::make(KernelFamily::ScreenedPoisson, 0.75);
    CHECK(sp.zeta(2.0, 0.5) == doctest::Approx(-0.5).epsilon(1e-14));  // (2*0.5)^{1.5} = 1
    CHECK_THROWS_AS(st.zeta(0.0, 1.0), std::domain_error);

    for (double rho : log_grid(1e-3, 50.0, 100)) {
        const double z = st.zeta(0.3, rho);
        CHECK(z <= 0.0);
        CHECK(z > -2.0);
    }
}

TEST_CASE("remainder: definitional identity and small-frequency bound") {
    for (auto fam : {KernelFamily::Stable, KernelFamily::ScreenedPoisson,
                     KernelFamily::StudentGaussMixture}) {
        KernelSpec k = KernelSpec::make(fam, 0.75);
        CHECK(k.remainder(0.0) == 0.0);
        for (double rho : log_grid(1e-3, 5.0, 80)) {
            const double lhs = k.remainder(rho) + 1.0 - std::pow(rho, 1.5);
            CHECK(lhs == doctest::Approx(k.fourier_symbol(rho)).epsilon(1e-12));
        }
    }

    // |e^{-u} - 1 + u| <= u^2/2 makes 0.5 an analytic bound for the stable family.
    KernelSpec st = KernelSpec::make(KernelFamily::Stable, 0.75);
    double sup = 0.0;
    for (double rho : log_grid(1e-4, 1.0, 500)) {
        sup = std::max(sup, std::abs(st.remainder(rho)) / std::pow(rho, 2.5));
    }
    CHECK(sup <= 0.5);

    // Screened Poisson: R = u^2/(1+u) from the geometric series.
    KernelSpec sp = KernelSpec::make(KernelFamily::ScreenedPoisson, 0.75);
    CHECK(sp.remainder(0.5) ==
          doctest::Approx(std::pow(0.5, 3.0) / (1.0 + std::pow(0.5, 1.5))).epsilon(1e-14));
    CHECK(sp.remainder(0.5) == doctest::Approx(0.0923495156).epsilon(1e-8));
}

TEST_CASE("mixture coefficients against the Gamma-function oracle") {
    // Oracle: the original form -Gamma(s) 2^{2s} / (Gamma(-s) (2s)^s) with
    // Gamma(-s) through the reflection formula.
    auto oracle = [](double s) {
        const double gamma_minus_s = -M_PI / (std::sin(M_PI * s) * std::tgamma(1.0 + s));
        return -std::tgamma(s) * std::pow(2.0, 2.0 * s) /
               (gamma_minus_s * std::pow(2.0 * s, s));
    };
    for (double s : {0.51, 0.6, 0.75, 0.9, 0.99}) {
        const MixtureCoefficients mc = mixture_coefficients(s);
        CHECK(mc.a == doctest::Approx(oracle(s)).epsilon(1e-12));
        CHECK(mc.a > 0.0);
        CHECK(mc.a < 1.0);
        CHECK(mc.gamma > 0.0);
    }
    // Limit at s = 1/2: Gamma(1/2) = sqrt(pi), Gamma(-1/2) = -2 sqrt(pi) give a = 1.
    CHECK(mixture_coefficients(0.5 + 1e-9).a == doctest::Approx(1.0).epsilon(1e-6));
    // s -> 1: a ~ 2(1-s) and gamma -> 1.
    CHECK(mixture_coefficients(0.999).a / (2.0 * 0.001) == doctest::Approx(1.0).epsilon(1e-2));
    CHECK(mixture_coefficients(0.999).gamma == doctest::Approx(1.0).epsilon(1e-2));

    CHECK_THROWS_AS(mixture_coefficients(0.5), std::domain_error);
    CHECK_THROWS_AS(mixture_coefficients(1.0), std::domain_error);

    // a(s) decreasing on a 100-point grid.
    double prev = 2.0;
    for (int i = 1; i <= 100; ++i) {
        const double s = 0.5 + 0.5 * i / 101.0;
        const MixtureCoefficients mc = mixture_coefficients(s);
        CHECK(mc.a < prev);
        CHECK(mc.gamma > 0.0);
        prev = mc.a;
    }
}

TEST_CASE("densities: mass, positivity, reference values") {
    Grid1D grid = Grid1D::make(1 << 13, 60.0);
    for (auto fam : {KernelFamily::Stable, KernelFamily::StudentGaussMixture}) {
        KernelSpec k = KernelSpec::make(fam, 0.75);
        DensityProfile j = density(k, grid);
        double m = 0.0, mn = 0.0;
        for (double v : j.values) {
            m += v;
            mn = std::min(mn, v);
        }
        CHECK(m * grid.dx() == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(mn >= -1e-8);
    }

    // Closed-form checks: Gaussian with covariance 2 and the Cauchy law.
    CHECK(density_point(KernelSpec::classical(KernelFamily::Stable), 0.0) ==
          doctest::Approx(std::pow(4.0 * M_PI, -0.5)).epsilon(1e-9));
    CHECK(density_point(KernelSpec::make(KernelFamily::Stable, 0.5 + 1e-12), 0.0) ==
          doctest::Approx(1.0 / M_PI).epsilon(1e-9));
    // J^1(x) = (1/2) e^{-|x|} for the screened Poisson family.
    CHECK(density_point(KernelSpec::classical(KernelFamily::ScreenedPoisson), 0.0) ==
          doctest::Approx(0.5).epsilon(1e-7));
}

TEST_CASE("density resolution guard suggests a workable half-width") {
    KernelSpec sp = KernelSpec::make(KernelFamily::ScreenedPoisson, 0.75);
    Grid1D grid = Grid1D::make(1 << 10, 200.0);
    CHECK_THROWS_AS(density(sp, grid), ResolutionError);
    try {
        density(sp, grid);
    } catch (const ResolutionError& e) {
        CHECK(e.suggested_half_width > 0.0);
        CHECK(e.suggested_half_width < 200.0);
    }
}

TEST_CASE("hypothesis checks pass for the three families") {
    for (double s : {0.6, 0.75, 0.9}) {
        Grid1D wide = Grid1D::make(1 << 14, 200.0);
        Grid1D narrow = Grid1D::make(1 << 14, 50.0);
        CHECK(verify_hypothesis1(KernelSpec::make(KernelFamily::Stable, s), wide).pass);
        CHECK(verify_hypothesis1(KernelSpec::make(KernelFamily::ScreenedPoisson, s), narrow)
                  .pass);
        CHECK(
            verify_hypothesis1(KernelSpec::make(KernelFamily::StudentGaussMixture, s), wide)
                .pass);
    }
}

TEST_CASE("hypothesis report flags an impossible remainder exponent") {
    KernelSpec bad = KernelSpec::make(KernelFamily::Stable, 0.75,
                                      KernelConstants{3.0, 0.5, 3.5, 5.0, 8.0});
    HypothesisReport rep = verify_hypothesis1(bad, Grid1D::make(1 << 13, 100.0));
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.entries[0].pass);
    CHECK(rep.entries[0].measured > rep.entries[0].bound);
}

TEST_CASE("mixture tail ratio scales like the stable constant") {
    // At s close to 1 the measured tail ratio tracks K_{1,s}/(1-s), which
    // stays below the declared constant.
    KernelSpec mix = KernelSpec::make(KernelFamily::StudentGaussMixture, 0.9);
    HypothesisReport rep = verify_hypothesis1(mix, Grid1D::make(1 << 14, 200.0));
    CHECK(rep.pass);
    CHECK(rep.entries[1].measured > 0.5 * mix.tail_coefficient() / 0.1);
    CHECK(rep.entries[1].measured <= mix.tail_const());
}

TEST_CASE("symbol comparison constant is small and uniformly bounded in s") {
    CHECK(verify_hypothesis2(KernelFamily::Stable, 0.9) <= 2.0);
    double worst = 0.0;
    for (double s : {0.6, 0.7, 0.8, 0.9, 0.99}) {
        worst = std::max(worst, verify_hypothesis2(KernelFamily::Stable, s));
    }
    CHECK(worst <= 2.0);
    CHECK(std::isfinite(verify_hypothesis2(KernelFamily::ScreenedPoisson, 0.75)));
    CHECK(std::isfinite(verify_hypothesis2(KernelFamily::StudentGaussMixture, 0.75)));
    CHECK_THROWS_AS(verify_hypothesis2(KernelFamily::UserSymbol, 0.75),
                    UnsupportedFamilyError);
}

TEST_CASE("user symbol kernels: validation and callback errors") {
    CHECK_THROWS_AS(KernelSpec::user(nullptr, 0.75, KernelConstants{}), ConfigError);
    CHECK_THROWS_AS(
        KernelSpec::user([](double) { return 0.5; }, 0.75, KernelConstants{}),
        std::domain_error);
    KernelSpec ok = KernelSpec::user(
        [](double r) { return std::exp(-std::pow(r, 1.5)); }, 0.75, KernelConstants{});
    CHECK(ok.fourier_symbol(1.0) == doctest::Approx(std::exp(-1.0)));
    CHECK_FALSE(ok.has_classical_member());
}

TEST_CASE("construction rejects boundary indices") {
    CHECK_THROWS_AS(KernelSpec::make(KernelFamily::Stable, 0.5), std::domain_error);
    CHECK_THROWS_AS(KernelSpec::make(KernelFamily::Stable, 1.0), std::domain_error);
    CHECK_THROWS_AS(KernelSpec::make(KernelFamily::Stable, 1.2), std::domain_error);
    CHECK(KernelSpec::classical(KernelFamily::Stable).s() == 1.0);
}

TEST_CASE("modified Bessel K against the integral representation") {
    // K_nu(x) = int_0^inf e^{-x cosh t} cosh(nu t) dt
    auto oracle = [](double nu, double x) {
        double acc = 0.0;
        const double h = 1e-4;
        for (int i = 0; i < 120000; ++i) {
            const double t = (i + 0.5) * h;
            acc += std::exp(-x * std::cosh(t)) * std::cosh(nu * t) * h;
        }
        return acc;
    };
    for (double nu : {0.6, 0.75, 0.9}) {
        for (double x : {0.3, 2.0, 8.0, 15.0}) {
            CHECK(modified_bessel_k(nu, x) == doctest::Approx(oracle(nu, x)).epsilon(1e-8));
        }
    }
}
