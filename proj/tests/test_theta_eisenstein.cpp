#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rs/eisenstein.hpp"
#include "rs/iwasawa.hpp"
#include "rs/quadrature.hpp"
#include "rs/rng.hpp"
#include "rs/theta.hpp"

#include <cmath>

using namespace rs;

namespace {

IwasawaCoords random_point(SplitMix64& g, int k, double ylo, double yhi) {
    std::vector<double> x(static_cast<size_t>(k) * (k - 1) / 2);
    std::vector<double> y(k - 1);
    for (auto& v : x) v = g.uniform(-0.5, 0.5);
    for (auto& v : y) v = g.uniform(ylo, yhi);
    return IwasawaCoords(k, std::move(x), std::move(y));
}

} // namespace

TEST_CASE("gaussian lattice sum obeys the reflection with the dual point") {
    SplitMix64 g(41);
    for (int k : {2, 4}) {
        IwasawaCoords z = random_point(g, k, 0.8, 1.6);
        ThetaContext c = make_theta_context(z);
        ThetaContext d = make_theta_context(theta_dual_coords(z));
        for (double u : {0.85, 1.0, 1.3}) {
            double lhs = theta_value(c, u);
            double rhs = std::pow(u, -0.5 * k) * theta_value(d, 1.0 / u);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
        }
    }
}

TEST_CASE("dual coordinates are an involution") {
    SplitMix64 g(42);
    for (int k : {2, 3, 4, 6}) {
        IwasawaCoords z = random_point(g, k, 0.6, 1.8);
        IwasawaCoords back = theta_dual_coords(theta_dual_coords(z));
        for (size_t i = 0; i < z.y.size(); ++i)
            CHECK(back.y[i] == doctest::Approx(z.y[i]).epsilon(1e-10));
        for (size_t i = 0; i < z.x.size(); ++i)
            CHECK(back.x[i] == doctest::Approx(z.x[i]).epsilon(1e-9));
    }
}

TEST_CASE("lattice sum decreases to one and the tail estimate covers truncation") {
    SplitMix64 g(43);
    IwasawaCoords z = random_point(g, 4, 0.9, 1.4);
    ThetaContext wide = make_theta_context(z, 40.0);
    ThetaContext narrow = make_theta_context(z, 18.0);
    double prev = 1e300;
    for (double u : {0.8, 1.0, 1.5, 2.5, 4.0}) {
        double tw = theta_value(wide, u);
        CHECK(tw > 1.0);
        CHECK(tw < prev);
        prev = tw;
        double tn = theta_value(narrow, u);
        CHECK(std::abs(tw - tn) <= theta_tail_bound(narrow, u) + 1e-14 * tw);
    }
}

TEST_CASE("theta integral matches explicit quadrature over a finite window") {
    SplitMix64 g(44);
    IwasawaCoords z = random_point(g, 4, 1.0, 1.5);
    ThetaContext ctx = make_theta_context(z);
    cplx w(1.2, 0.7);
    cplx via_lib = theta_integral(ctx, w);
    QuadratureSpec q;
    q.rel_tol = 1e-11;
    // window [1, 8]: beyond it theta - 1 is below 1e-60 at these heights
    cplx via_quad = integrate_gk(
        [&](double u) { return (theta_value(ctx, u) - 1.0) * std::pow(u, w.real() - 1.0) *
                               std::exp(cplx(0.0, w.imag() * std::log(u))); },
        1.0, 8.0, q);
    CHECK(std::abs(via_lib - via_quad) < 1e-9 * std::abs(via_lib));
}

TEST_CASE("completed series is real at real spectral points") {
    IwasawaCoords z(4, std::vector<double>(6, 0.0), {1.1, 1.3, 0.8});
    for (double s : {-0.5, 0.3, 0.7, 2.0}) {
        cplx e = eisenstein_completed(z, cplx(s, 0.0));
        CHECK(std::abs(e.imag()) < 1e-9 * std::max(1.0, std::abs(e.real())));
    }
}

TEST_CASE("completed series value is frozen at a reference point") {
    IwasawaCoords z(4, std::vector<double>(6, 0.0), {1.2, 1.0, 0.9});
    cplx e = eisenstein_completed(z, cplx(0.6, 0.3));
    CHECK(e.real() == doctest::Approx(-1.19805647817).epsilon(1e-9));
    CHECK(e.imag() == doctest::Approx(-0.2622869426).epsilon(1e-8));
}

TEST_CASE("completed series rejects the poles") {
    IwasawaCoords z(2, {0.1}, {1.2});
    CHECK_THROWS_AS(eisenstein_completed(z, cplx(0.0, 0.0)), domain_error);
    CHECK_THROWS_AS(eisenstein_completed(z, cplx(1.0, 0.0)), domain_error);
}

TEST_CASE("reflection residual is far below the series magnitude") {
    SplitMix64 g(45);
    for (int k : {2, 4}) {
        for (int rep = 0; rep < 3; ++rep) {
            IwasawaCoords z = random_point(g, k, 1.0, 2.0);
            for (cplx s : {cplx(0.6, 0.3), cplx(0.3, 1.1)}) {
                double res = eisenstein_fe_residual(z, s);
                double mag = std::abs(eisenstein_completed(z, s));
                CHECK(res < 1e-10 * mag);
            }
        }
    }
}

TEST_CASE("reflection holds through two independent full evaluations") {
    SplitMix64 g(46);
    IwasawaCoords z = random_point(g, 4, 1.0, 1.8);
    IwasawaCoords zd = theta_dual_coords(z);
    for (cplx s : {cplx(0.6, 0.3), cplx(0.5, 5.0)}) {
        cplx e1 = eisenstein_completed(z, s);
        cplx e2 = eisenstein_completed(zd, 1.0 - s);
        CHECK(std::abs(e1 - e2) < 1e-10 * std::abs(e1));
    }
}

TEST_CASE("primitive row sum agrees with the lattice route in the convergent range") {
    IwasawaCoords z2(2, {0.3}, {1.4});
    cplx lat2 = eisenstein_completed(z2, cplx(2.5, 0.0));
    cplx sum2 = eisenstein_coset_sum(z2, cplx(2.5, 0.0), 60);
    CHECK(std::abs(sum2 - lat2) < 1e-6 * std::abs(lat2));

    IwasawaCoords z4(4, std::vector<double>(6, 0.0), {1.2, 1.0, 0.9});
    cplx lat4 = eisenstein_completed(z4, cplx(3.0, 0.0));
    CHECK(lat4.real() == doctest::Approx(1.58088186367).epsilon(1e-9));
    cplx sum4 = eisenstein_coset_sum(z4, cplx(3.0, 0.0), 6);
    CHECK(std::abs(sum4 - lat4) < 1e-7 * std::abs(lat4));
}

TEST_CASE("critical line growth stays under the explicit majorant") {
    SplitMix64 g(47);
    for (int rep = 0; rep < 4; ++rep) {
        IwasawaCoords z = random_point(g, 4, 1.0, 2.2);
        for (double w : {0.5, 3.0, 11.0}) {
            GrowthCheck gc = eisenstein_growth_check(z, w);
            CHECK(gc.pass);
            CHECK(gc.value <= gc.majorant);
        }
    }
}

TEST_CASE("majorant exponent families coincide exactly") {
    for (int two_n : {4, 6, 8}) {
        for (int k = 1; k <= two_n; ++k) {
            for (int variant : {0, 1}) {
                std::vector<bigrat> lhs = majorant_lhs_exponents(two_n, k, variant);
                std::vector<bigrat> rhs = majorant_rhs_exponents(two_n, k, variant);
                REQUIRE(lhs.size() == rhs.size());
                for (size_t j = 0; j < lhs.size(); ++j) CHECK(lhs[j] == rhs[j]);
            }
        }
    }
}

TEST_CASE("dual basis exponents telescope across the diagonal") {
    // the k-th and (2n+1-k)-th normalized entries are reflections of each
    // other: exponent vectors must be reverses with a sign flip
    for (int two_n : {4, 6}) {
        for (int k = 1; k <= two_n; ++k) {
            for (int j = 1; j < two_n; ++j) {
                bigrat a = dual_basis_y_exponent(two_n, k, j);
                bigrat b = dual_basis_y_exponent(two_n, two_n + 1 - k, two_n - j);
                CHECK(a == -b);
            }
        }
    }
}
