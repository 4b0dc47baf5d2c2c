#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rs/gammafn.hpp"
#include "rs/kbessel.hpp"
#include "rs/quadrature.hpp"
#include "rs/rng.hpp"
#include "rs/spectral.hpp"
#include "rs/whittaker.hpp"
#include "rs/zetafn.hpp"

#include <cmath>

using namespace rs;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

} // namespace

TEST_CASE("gamma satisfies reflection and duplication") {
    SplitMix64 g(31);
    for (int rep = 0; rep < 30; ++rep) {
        cplx z(g.uniform(0.15, 2.5), g.uniform(-6.0, 6.0));
        cplx refl = gamma_complex(z) * gamma_complex(1.0 - z);
        cplx target = PI / std::exp(log_sin_pi(z));
        CHECK(rel(refl, target) < 1e-9);

        cplx dup = gamma_complex(z) * gamma_complex(z + 0.5);
        cplx target2 = std::exp((1.0 - 2.0 * z) * std::log(2.0)) * std::sqrt(PI) *
                       gamma_complex(2.0 * z);
        CHECK(rel(dup, target2) < 1e-9);
    }
}

TEST_CASE("gamma matches factorials and half-integer closed forms") {
    CHECK(rel(gamma_complex(cplx(5.0, 0.0)), cplx(24.0, 0.0)) < 1e-13);
    CHECK(rel(gamma_complex(cplx(0.5, 0.0)), cplx(std::sqrt(PI), 0.0)) < 1e-13);
    CHECK(rel(gamma_complex(cplx(1.5, 0.0)), cplx(0.5 * std::sqrt(PI), 0.0)) < 1e-13);
    CHECK_THROWS_AS(gamma_complex(cplx(-2.0, 0.0)), domain_error);
    // |Gamma(1/2 + it)|^2 = pi / cosh(pi t)
    double t = 3.7;
    double lhs = std::norm(gamma_complex(cplx(0.5, t)));
    CHECK(lhs == doctest::Approx(PI / std::cosh(PI * t)).epsilon(1e-11));
}

TEST_CASE("digamma matches the logarithmic gamma derivative") {
    SplitMix64 g(32);
    for (int rep = 0; rep < 10; ++rep) {
        cplx z(g.uniform(0.5, 3.0), g.uniform(-2.0, 2.0));
        double h = 1e-5;
        cplx numeric = (log_gamma(z + h) - log_gamma(z - h)) / (2.0 * h);
        CHECK(std::abs(digamma(z) - numeric) < 1e-8);
    }
    // psi(1) = -euler_gamma
    CHECK(digamma(cplx(1.0, 0.0)).real() == doctest::Approx(-0.5772156649015329).epsilon(1e-12));
}

TEST_CASE("zeta reproduces classical values and the completed reflection") {
    CHECK(rel(zeta(cplx(2.0, 0.0)), cplx(PI * PI / 6.0, 0.0)) < 1e-13);
    CHECK(rel(zeta(cplx(4.0, 0.0)), cplx(std::pow(PI, 4) / 90.0, 0.0)) < 1e-13);
    CHECK(rel(zeta(cplx(-1.0, 0.0)), cplx(-1.0 / 12.0, 0.0)) < 1e-12);
    CHECK(zeta(cplx(0.0, 0.0)).real() == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK_THROWS_AS(zeta(cplx(1.0, 0.0)), domain_error);

    SplitMix64 g(33);
    for (int rep = 0; rep < 15; ++rep) {
        cplx s(g.uniform(0.1, 0.9), g.uniform(-20.0, 20.0));
        CHECK(rel(xi_completed(s), xi_completed(1.0 - s)) < 1e-10);
        CHECK(std::abs(std::exp(log_xi(s)) - xi_completed(s)) < 1e-10 * std::abs(xi_completed(s)));
    }
}

TEST_CASE("bessel k at half order collapses to an exponential") {
    for (double y : {0.3, 0.8, 1.5, 3.0}) {
        double x = TWO_PI * y;
        double expect = std::exp(-x) * std::sqrt(PI / (2.0 * x));
        CHECK(k_bessel(cplx(0.5, 0.0), y).real() == doctest::Approx(expect).epsilon(1e-11));
        CHECK(k_bessel_arg(cplx(0.5, 0.0), x).real() == doctest::Approx(expect).epsilon(1e-11));
        // K_{3/2}(x) = sqrt(pi/2x) e^{-x} (1 + 1/x)
        double expect32 = std::exp(-x) * std::sqrt(PI / (2.0 * x)) * (1.0 + 1.0 / x);
        CHECK(k_bessel_arg(cplx(1.5, 0.0), x).real() == doctest::Approx(expect32).epsilon(1e-10));
    }
}

TEST_CASE("bessel k is even in the order and satisfies the recurrence") {
    SplitMix64 g(34);
    for (int rep = 0; rep < 10; ++rep) {
        cplx nu(g.uniform(-1.5, 1.5), g.uniform(-8.0, 8.0));
        double y = g.uniform(0.2, 2.0);
        cplx a = k_bessel(nu, y), b = k_bessel(-nu, y);
        CHECK(std::abs(a - b) < 1e-12 * std::abs(a));
        // K_{nu-1}(x) - K_{nu+1}(x) = -(2 nu / x) K_nu(x)
        double x = TWO_PI * y;
        cplx lhs = k_bessel_arg(nu - 1.0, x) - k_bessel_arg(nu + 1.0, x);
        cplx rhs = -2.0 * nu / x * k_bessel_arg(nu, x);
        CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("adaptive quadrature integrates known shapes") {
    QuadratureSpec q;
    double got = integrate_gk_real([](double x) { return x * x; }, 0.0, 1.0, q);
    CHECK(got == doctest::Approx(1.0 / 3.0).epsilon(1e-13));

    cplx osc = integrate_gk([](double x) { return std::exp(cplx(0.0, 5.0 * x)); }, 0.0, PI, q);
    cplx expect = (std::exp(cplx(0.0, 5.0 * PI)) - 1.0) / cplx(0.0, 5.0);
    CHECK(std::abs(osc - expect) < 1e-12);

    // endpoint singularity handled by tanh-sinh
    double sing = integrate_tanh_sinh_real([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                                           1e-11);
    CHECK(sing == doctest::Approx(2.0).epsilon(1e-10));

    double err = 0.0;
    cplx alt = accelerate_sum(
        [](int k) { return cplx((k % 2 == 0 ? 1.0 : -1.0) / (k + 1.0), 0.0); }, 40, 1e-12, &err);
    CHECK(std::abs(alt - std::log(2.0)) < 1e-10);
}

TEST_CASE("profile shifts, mu values and completion are consistent") {
    SpectralParams p{3, {cplx(0.4, 0.1), cplx(0.5, -0.2)}};
    // mu_j is the tail sum of shifts over k = j..n-1
    for (int j = 1; j <= 2; ++j) {
        cplx tail = 0.0;
        for (int k = j; k <= 2; ++k) tail += whittaker_shift(p, j, k);
        CHECK(std::abs(whittaker_mu(p, j) - tail) < 1e-12);
    }
    // completion is the stated product over 1 <= j <= k <= n-1
    cplx prod = 1.0;
    for (int j = 1; j <= 2; ++j)
        for (int k = j; k <= 2; ++k) {
            cplx sh = whittaker_shift(p, j, k);
            prod *= gamma_complex(0.5 + sh) * std::exp(-(0.5 + sh) * LOG_PI);
        }
    CHECK(std::abs(whittaker_completion(p) - prod) < 1e-12 * std::abs(prod));
}

TEST_CASE("profile routes agree on gl2 across the range") {
    struct Point {
        double nu, y, value;
    };
    // frozen from the quadrature oracle route
    for (Point pt : {Point{0.6, 0.4, 0.103783459917}, Point{0.65, 0.7, 0.0182579812235},
                     Point{0.7, 1.0, 0.00315647046773}, Point{0.8, 1.6, 9.17017160633e-05},
                     Point{0.9, 2.3, 1.38410258985e-06}}) {
        SpectralParams p{2, {cplx(pt.nu, 0.0)}};
        WhittakerEval e = whittaker_stade(p, {pt.y});
        cplx d = whittaker_direct(p, {pt.y});
        CHECK(rel(e.value, d) < 1e-9);
        CHECK(e.value.real() == doctest::Approx(pt.value).epsilon(1e-9));
        // completed and plain values differ exactly by the completion factor
        CHECK(std::abs(e.completed - e.value * whittaker_completion(p)) <
              1e-12 * std::abs(e.completed));
    }
}

TEST_CASE("gl2 completed profile reduces to the bessel closed form") {
    // W*(y) = 2 sqrt(y) K_{nu - 1/2}(2 pi y)
    for (double nu : {0.62, 0.8}) {
        for (double y : {0.5, 1.2}) {
            SpectralParams p{2, {cplx(nu, 0.0)}};
            cplx w = whittaker_stade(p, {y}).completed;
            cplx expect = 2.0 * std::sqrt(y) * k_bessel(cplx(nu - 0.5, 0.0), y);
            CHECK(rel(w, expect) < 1e-10);
        }
    }
}

TEST_CASE("profile routes agree on gl3 at interior points") {
    SpectralParams p{3, {cplx(0.4, 0.0), cplx(0.45, 0.0)}};
    WhittakerEval e = whittaker_stade(p, {1.1, 0.9});
    CHECK(e.value.real() == doctest::Approx(8.026145729e-08).epsilon(1e-7));
    CHECK(std::abs(e.value.imag()) < 1e-12 * std::abs(e.value.real()));
    // the direct unipotent integral is exercised in the long acceptance run;
    // here the integrand itself is spot-checked for positivity and decay
    double mid = whittaker_gl3_integrand(p, {1.1, 0.9}, 0.2, -0.1, 0.3);
    double far = whittaker_gl3_integrand(p, {1.1, 0.9}, 6.0, -0.1, 0.3);
    CHECK(mid > 0.0);
    CHECK(far < mid);
}

TEST_CASE("gl2 oracle route rejects parameters outside its convergence range") {
    SpectralParams p{2, {cplx(0.5, 0.0)}};
    CHECK_THROWS_AS(whittaker_direct(p, {1.0}), domain_error);
}

TEST_CASE("squared profile transform matches direct quadrature on gl2") {
    double mu = 0.6;
    SpectralParams p{2, {cplx(0.5, mu)}};
    std::vector<cplx> beta = langlands_params(p);
    for (cplx w : {cplx(1.0, 0.0), cplx(1.0, 0.4), cplx(1.0, -0.8), cplx(2.0, 0.0)}) {
        cplx formula = whittaker_mellin_norm(2, beta, w);
        QuadratureSpec qs;
        qs.rel_tol = 1e-9;
        cplx quad = integrate_gk(
            [&](double u) {
                double yy = std::exp(u);
                cplx wv = whittaker_stade(p, {yy}).value;
                return std::norm(wv) * std::exp(u * (w - 1.0));
            },
            std::log(1e-7), std::log(5.0), qs);
        CHECK(rel(quad, formula) < 1e-5);
    }
}

TEST_CASE("squared profile transform pole order counts parameter coincidences") {
    std::vector<cplx> tempered = {cplx(0.0, 0.6), cplx(0.0, -0.6)};
    CHECK(whittaker_mellin_norm_pole_order(tempered) == 1);
    std::vector<cplx> coincident = {cplx(0.0, 0.0), cplx(0.0, 0.0)};
    CHECK(whittaker_mellin_norm_pole_order(coincident) == 3);
    std::vector<cplx> gl3 = {cplx(0.0, 0.7), cplx(0.0, -0.2), cplx(0.0, -0.5)};
    CHECK(whittaker_mellin_norm_pole_order(gl3) == 2);
    // near w = 0 the transform grows like w^{-order}
    cplx n1 = whittaker_mellin_norm(2, tempered, cplx(1e-3, 0.0));
    cplx n2 = whittaker_mellin_norm(2, tempered, cplx(2e-3, 0.0));
    CHECK(std::abs(n1 / n2) == doctest::Approx(2.0).epsilon(1e-2));
}

TEST_CASE("gamma pair derivative tracks its large height asymptotic") {
    for (int ell : {0, 1, 2, 3}) {
        StirlingPairResult r = stirling_pair(0.3, 40.0, ell);
        CHECK(r.ratio == doctest::Approx(1.0).epsilon(0.05));
        CHECK(std::isfinite(r.exact));
        CHECK(std::isfinite(r.asymptotic));
    }
    // closer to the axis the asymptotic is still within a few percent at ell=0
    StirlingPairResult r0 = stirling_pair(-0.2, 25.0, 0);
    CHECK(r0.ratio == doctest::Approx(1.0).epsilon(0.08));
}
