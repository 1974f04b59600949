#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "levyfp/gclt.hpp"
#include "levyfp/stable_laws.hpp"

using namespace levyfp;

namespace {

const Grid1D kGrid = Grid1D::make(1 << 13, 40.0);

}  // namespace

TEST_CASE("scale sequences") {
    ScaleSequence c = ScaleSequence::constant(16, 0.75, 2.0);
    CHECK(c.sbar == doctest::Approx(2.0).epsilon(1e-14));

    ScaleSequence r = ScaleSequence::uniform_random(64, 0.75, 0.5, 2.0, 42);
    CHECK(r.sigmas.size() == 64);
    for (double sigma : r.sigmas) {
        CHECK(sigma >= 0.5);
        CHECK(sigma <= 2.0);
    }
    CHECK(r.sbar >= 0.5);
    CHECK(r.sbar <= 2.0);
    // deterministic given the seed
    ScaleSequence r2 = ScaleSequence::uniform_random(64, 0.75, 0.5, 2.0, 42);
    CHECK(r.sigmas == r2.sigmas);

    ScaleSequence a = ScaleSequence::alternating(4, 0.75, 0.5, 2.0);
    CHECK(a.sigmas == std::vector<double>{0.5, 2.0, 0.5, 2.0});

    CHECK_THROWS_AS(ScaleSequence::constant(0, 0.75), std::domain_error);
    CHECK_THROWS_AS(ScaleSequence::uniform_random(4, 0.75, 2.0, 0.5, 1), std::domain_error);
}

TEST_CASE("rescaled convolution symbol") {
    KernelSpec st = KernelSpec::make(KernelFamily::Stable, 0.75);

    // normalization at every n
    for (int n : {1, 7, 1000}) {
        CHECK(rescaled_convolution_hat(st, ScaleSequence::constant(n, 0.75), 0.0) == 1.0);
    }
    // single factor
    ScaleSequence one = ScaleSequence::constant(1, 0.75);
    CHECK(rescaled_convolution_hat(st, one, 2.0) ==
          doctest::Approx(st.fourier_symbol(2.0)).epsilon(1e-14));

    // stability: equal scales reproduce exp(-rho^{2s}) for every n
    for (int n : {4, 64, 4096}) {
        ScaleSequence sc = ScaleSequence::constant(n, 0.75);
        for (double rho : {0.3, 1.0, 3.0}) {
            CHECK(rescaled_convolution_hat(st, sc, rho) ==
                  doctest::Approx(std::exp(-std::pow(rho, 1.5))).epsilon(1e-12));
        }
    }
    // no underflow at large n and moderate frequency
    ScaleSequence big = ScaleSequence::constant(100000, 0.75);
    CHECK(rescaled_convolution_hat(st, big, 6.0) ==
          doctest::Approx(std::exp(-std::pow(6.0, 1.5))).epsilon(1e-10));
}

TEST_CASE("distance to the stable law: exactness for stable input") {
    KernelSpec st = KernelSpec::make(KernelFamily::Stable, 0.75);
    for (int n : {8, 64, 256}) {
        CHECK(be_distance(st, ScaleSequence::constant(n, 0.75), kGrid) < 1e-10);
    }
}

TEST_CASE("distance ratio follows the measured remainder rate") {
    KernelSpec sp = KernelSpec::make(KernelFamily::ScreenedPoisson, 0.75);
    const double d64 = be_distance(sp, ScaleSequence::constant(64, 0.75), kGrid);
    const double d256 = be_distance(sp, ScaleSequence::constant(256, 0.75), kGrid);
    // measured remainder order 4s gives slope -1, so a factor-4 step in n
    // should shrink the distance by about 4.
    const double target = std::pow(4.0, -1.0);
    CHECK(d256 / d64 == doctest::Approx(target).epsilon(0.3));
}

TEST_CASE("unequal scales stay within a constant of the equal-scale distance") {
    KernelSpec sp = KernelSpec::make(KernelFamily::ScreenedPoisson, 0.75);
    const double equal = be_distance(sp, ScaleSequence::constant(64, 0.75), kGrid);
    const double random =
        be_distance(sp, ScaleSequence::uniform_random(64, 0.75, 0.5, 2.0, 7), kGrid);
    CHECK(random / equal < 3.0);
    CHECK(random / equal > 1.0 / 3.0);
}

TEST_CASE("distances shrink monotonically in n beyond the threshold") {
    KernelSpec sp = KernelSpec::make(KernelFamily::ScreenedPoisson, 0.75);
    double prev = 1e300;
    for (int n : {64, 128, 256, 512, 1024}) {
        const double d = be_distance(sp, ScaleSequence::constant(n, 0.75), kGrid);
        CHECK(d < prev * 1.05);
        prev = d;
    }
}

TEST_CASE("rate fit: screened Poisson hits the remainder-rate target") {
    const std::vector<int> n_list{64, 128, 256, 512, 1024};
    KernelSpec sp = KernelSpec::make(KernelFamily::ScreenedPoisson, 0.75);
    GcltRateResult res = be_rate_fit(sp, n_list, ScalesPolicy::Constant, kGrid, 1);
    REQUIRE(res.fit.has_value());
    CHECK_FALSE(res.stable_input);
    CHECK(std::abs(res.fit->slope - res.target_slope) <= 0.25);
    CHECK(res.c_be > 0.0);
    CHECK(res.threshold_n >= 64);
    CHECK(res.fit->pass);
}

TEST_CASE("rate fit: slope negative and bounded away from zero for every family") {
    const std::vector<int> n_list{64, 128, 256, 512};
    for (auto fam : {KernelFamily::ScreenedPoisson, KernelFamily::StudentGaussMixture}) {
        KernelSpec k = KernelSpec::make(fam, 0.75);
        GcltRateResult res = be_rate_fit(k, n_list, ScalesPolicy::Constant, kGrid, 1);
        REQUIRE(res.fit.has_value());
        CHECK(res.fit->slope < -0.5);
    }
}

TEST_CASE("rate fit: uniformity of the slope in s") {
    const std::vector<int> n_list{64, 128, 256, 512, 1024};
    auto slope_at = [&](double s) {
        KernelSpec sp = KernelSpec::make(KernelFamily::ScreenedPoisson, s);
        GcltRateResult res = be_rate_fit(sp, n_list, ScalesPolicy::Constant, kGrid, 1);
        REQUIRE(res.fit.has_value());
        return res.fit->slope;
    };
    CHECK(std::abs(slope_at(0.9) - slope_at(0.99)) < 0.15);
}

TEST_CASE("rate fit flags stable input instead of fitting noise") {
    const std::vector<int> n_list{8, 16, 32, 64};
    KernelSpec st = KernelSpec::make(KernelFamily::Stable, 0.75);
    GcltRateResult res = be_rate_fit(st, n_list, ScalesPolicy::Constant, kGrid, 1);
    CHECK(res.stable_input);
    CHECK_FALSE(res.fit.has_value());
}

TEST_CASE("measured remainder order tracks the family expansion") {
    // screened Poisson: R ~ rho^{4s}; mixture: R ~ rho^{2s+2}
    KernelSpec sp = KernelSpec::make(KernelFamily::ScreenedPoisson, 0.75);
    CHECK(measured_remainder_order(sp) == doctest::Approx(3.0).epsilon(0.05));
    KernelSpec mix = KernelSpec::make(KernelFamily::StudentGaussMixture, 0.75);
    CHECK(measured_remainder_order(mix) == doctest::Approx(3.5).epsilon(0.1));
}
