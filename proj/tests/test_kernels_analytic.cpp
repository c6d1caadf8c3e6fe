#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rmtlab/kernels_analytic.hpp"
#include "rmtlab/quadrature.hpp"
#include "rmtlab/rng.hpp"

#include <cmath>

using namespace rmtlab;

TEST_CASE("sine kernel values") {
    CHECK(sine_kernel(0.3, 0.3) == doctest::Approx(1.0));
    CHECK(sine_kernel(1.0, 0.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(sine_kernel(0.5, 0.0) == doctest::Approx(2.0 / M_PI));
    // smooth through the diagonal
    CHECK(sine_kernel(0.3 + 1e-9, 0.3) == doctest::Approx(1.0));
}

TEST_CASE("K_w periodicity under simultaneous unit shift") {
    RngStream rng(1, 0);
    for (double w : {0.25, 0.5, 1.0, 2.0}) {
        for (int i = 0; i < 40; ++i) {
            const double xi = -3.0 + 6.0 * rng.next_double();
            const double zeta = -3.0 + 6.0 * rng.next_double();
            CHECK(std::abs(kernel_Kw(xi + 1, zeta + 1, w) -
                           kernel_Kw(xi, zeta, w)) < 1e-12);
        }
    }
}

TEST_CASE("K_t scaling identity and periodicity") {
    RngStream rng(2, 0);
    for (double s : {0.5, 1.0, 2.0}) {
        for (int i = 0; i < 30; ++i) {
            const double xi = -2.0 + 4.0 * rng.next_double();
            const double zeta = -2.0 + 4.0 * rng.next_double();
            const double w = 0.3 + 1.5 * rng.next_double();
            CHECK(std::abs(s * kernel_Kt(s * xi, s * zeta, s, w) -
                           kernel_Kw(xi, zeta, w)) < 1e-12);
            CHECK(std::abs(kernel_Kt(s * xi + s, s * zeta + s, s, w) -
                           kernel_Kt(s * xi, s * zeta, s, w)) < 1e-12);
        }
    }
}

TEST_CASE("K_w diagonal integrates to one per period") {
    for (double w : {0.25, 0.5, 1.0, 2.0}) {
        const double mass = adaptive_simpson(
            [&](double xi) { return kernel_Kw(xi, xi, w); }, 0.0, 1.0, 1e-10);
        CHECK(std::abs(mass - 1.0) < 1e-8);
    }
}

TEST_CASE("K_w rejects w <= 0") {
    CHECK_THROWS_AS(kernel_Kw(0.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(kernel_Kt(0.0, 0.0, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("K_w sine limit at w = 5 carries the known k=1 residual") {
    // the first massive mode contributes cos-type terms of amplitude
    // 1/(2 pi^2 w^2) ~ 2.03e-3, so the distance to the sine kernel plateaus
    // there rather than below 1e-3
    double sup = 0.0;
    for (double xi = -2.0; xi <= 2.0; xi += 0.1)
        for (double zeta = -2.0; zeta <= 2.0; zeta += 0.1)
            sup = std::max(sup, std::abs(kernel_Kw(xi, zeta, 5.0) -
                                         sine_kernel(xi, zeta)));
    const double k1_amp = 1.0 / (2.0 * M_PI * M_PI * 25.0);
    CHECK(sup < 1.5 * k1_amp);
    CHECK(sup > 0.5 * k1_amp);
    CHECK(std::abs(kernel_Kw(0.0, 0.0, 5.0) - 1.0 - k1_amp) < 1e-6);
}

TEST_CASE("K_hat diagonal equals density_Rhat") {
    for (double w : {0.25, 0.7, 1.3}) {
        for (double xi : {-0.4, 0.0, 0.31, 0.8})
            CHECK(kernel_Khat(xi, xi, w) ==
                  doctest::Approx(density_Rhat(xi, w)).epsilon(1e-12));
    }
}

TEST_CASE("R_hat periodicity, symmetry, positivity") {
    RngStream rng(3, 0);
    for (double w : {0.3, 0.7, 1.5, 3.0}) {
        for (int i = 0; i < 25; ++i) {
            const double xi = -2.0 + 4.0 * rng.next_double();
            const double r = density_Rhat(xi, w);
            CHECK(std::abs(density_Rhat(xi + 1.0, w) - r) <
                  1e-11 * std::max(1.0, r));
            CHECK(std::abs(density_Rhat(-xi, w) - r) <
                  1e-11 * std::max(1.0, r));
            CHECK(r > -1e-10);
        }
    }
}

TEST_CASE("R_hat integrates to one per period") {
    for (double w : {0.25, 0.7, 1.0, 2.0}) {
        const double mass = adaptive_simpson(
            [&](double xi) { return density_Rhat(xi, w); }, 0.0, 1.0, 1e-9);
        CHECK(std::abs(mass - 1.0) < 1e-8);
    }
}

TEST_CASE("K_hat picket-fence limit at w = 0.05") {
    const double w = 0.05;
    const double cell = adaptive_simpson(
        [&](double xi) { return density_Rhat(xi, w); }, -0.25, 0.25, 1e-9);
    CHECK(cell > 0.999);
}

TEST_CASE("K_hat flat limit at w = 5") {
    for (double xi : {0.0, 0.25, 0.5})
        CHECK(std::abs(density_Rhat(xi, 5.0) - 1.0) < 3e-3);
}

TEST_CASE("K_hat double path agrees with the multi-precision path") {
    // at w = 1.2 a loose tolerance stays on the double path while a tight
    // one promotes to MPFR; both must agree to the loose tolerance
    const double w = 1.2;
    for (double xi : {-0.7, 0.1, 0.42}) {
        const double loose = kernel_Khat(xi, xi, w, 1e-5);
        const double tight = kernel_Khat(xi, xi, w, 1e-12);
        CHECK(std::abs(loose - tight) < 1e-5);
    }
}

TEST_CASE("K_hat precision envelope") {
    CHECK_THROWS_AS(kernel_Khat_scaled(0.0, 0.0, 9.0), std::invalid_argument);
    CHECK_THROWS_AS(kernel_Khat_scaled(0.0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("truncation certification: tightening tolerance is stable") {
    RngStream rng(4, 0);
    for (int i = 0; i < 20; ++i) {
        const double xi = -2.0 + 4.0 * rng.next_double();
        const double zeta = -2.0 + 4.0 * rng.next_double();
        const double w = 0.3 + 2.0 * rng.next_double();
        CHECK(std::abs(kernel_Kw(xi, zeta, w, 1e-8) -
                       kernel_Kw(xi, zeta, w, 1e-12)) < 1e-8);
        CHECK(std::abs(kernel_Khat(0.3 * xi, 0.3 * zeta, w, 1e-8) -
                       kernel_Khat(0.3 * xi, 0.3 * zeta, w, 1e-12)) < 1e-7);
    }
}

TEST_CASE("K_p depends only on the product a p") {
    CHECK(kernel_Kp(0.3, 0.1, 1.0, 0.25) ==
          doctest::Approx(kernel_Kp(0.3, 0.1, 0.5, 0.5)).epsilon(1e-9));
    CHECK(kernel_Kp(0.2, -0.4, 1.0, 0.5) ==
          doctest::Approx(kernel_Khat(0.2, -0.4, std::sqrt(0.5))).epsilon(1e-12));
}

TEST_CASE("correlation determinants") {
    KernelEvaluator sine;
    sine.family = KernelFamily::Sine;
    CHECK(correlation_Rk({0.3}, sine) == doctest::Approx(1.0));
    CHECK(std::abs(correlation_Rk({0.4, 0.4}, sine)) < 1e-12);
    const double d = 0.6;
    const double expected = 1.0 - sine_kernel(d, 0.0) * sine_kernel(d, 0.0);
    CHECK(correlation_Rk({0.0, d}, sine) == doctest::Approx(expected));
    CHECK_THROWS_AS(correlation_Rk(std::vector<double>(13, 0.0), sine),
                    std::invalid_argument);
}

TEST_CASE("duality: gauge-invariant agreement on a coarse grid") {
    for (double w : {0.25, 0.5, 1.0}) {
        const auto rep = duality_report(w, 2.0, 0.2);
        CHECK(rep.max_diag_abs_diff < 1e-8);
        CHECK(rep.max_r2_abs_diff < 1e-8);
    }
}

TEST_CASE("duality at w = 5: diagonals agree and 2x2 correlations go sine") {
    for (double xi : {0.0, 0.31, 0.75})
        CHECK(std::abs(density_Rhat(xi, 5.0) - kernel_Kw(xi, xi, 5.0)) <
              1e-8);
    // gauge-invariant R2 from the erfi kernel vs the sine-kernel R2
    KernelEvaluator khat, sine;
    khat.family = KernelFamily::ErfiKhat;
    khat.w = 5.0;
    sine.family = KernelFamily::Sine;
    for (double d : {0.3, 0.9, 1.5})
        CHECK(std::abs(correlation_Rk({0.0, d}, khat) -
                       correlation_Rk({0.0, d}, sine)) < 1e-2);
}

TEST_CASE("scaled kernel value overflow guard") {
    ScaledKernelValue v{1.0, 800.0};
    CHECK_THROWS_AS(v.unscaled(), std::overflow_error);
    ScaledKernelValue ok{2.0, 1.0};
    CHECK(ok.unscaled() == doctest::Approx(2.0 * std::exp(1.0)));
}

TEST_CASE("KernelEvaluator dispatch") {
    KernelEvaluator e;
    e.family = KernelFamily::RescaledKw;
    e.w = 0.7;
    CHECK(e(0.2, 0.5) == doctest::Approx(kernel_Kw(0.2, 0.5, 0.7)));
    e.family = KernelFamily::JohanssonKt;
    e.s = 2.0;
    CHECK(e(0.2, 0.5) == doctest::Approx(kernel_Kt(0.2, 0.5, 2.0, 0.7)));
    e.family = KernelFamily::ErfiKhat;
    CHECK(e(0.2, 0.5) == doctest::Approx(kernel_Khat(0.2, 0.5, 0.7)));
    e.family = KernelFamily::DoubleScalingKp;
    e.a = 1.0;
    e.p = 0.49;
    CHECK(e(0.2, 0.5) == doctest::Approx(kernel_Kp(0.2, 0.5, 1.0, 0.49)));
}
