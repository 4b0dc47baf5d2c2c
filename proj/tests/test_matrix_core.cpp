#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rs/iwasawa.hpp"
#include "rs/matrix.hpp"
#include "rs/minors.hpp"
#include "rs/rng.hpp"
#include "rs/spectral.hpp"
#include "rs/wedge.hpp"

#include <cmath>

using namespace rs;

namespace {

Mat<bigint> random_int_matrix(SplitMix64& g, int rows, int cols, int span) {
    Mat<bigint> m(rows, cols);
    for (auto& v : m.a) v = bigint(g.uniform_int(-span, span));
    return m;
}

Mat<double> random_real_matrix(SplitMix64& g, int k) {
    Mat<double> m(k, k);
    for (auto& v : m.a) v = g.uniform(-2.0, 2.0);
    return m;
}

// det-one by construction: product of elementary row operations
Mat<bigint> random_unimodular(SplitMix64& g, int n, int words) {
    Mat<bigint> m = Mat<bigint>::identity(n);
    for (int w = 0; w < words; ++w) {
        int i = static_cast<int>(g.uniform_int(0, n - 1));
        int j = static_cast<int>(g.uniform_int(0, n - 1));
        if (i == j) continue;
        bigint c(g.uniform_int(-2, 2));
        for (int col = 0; col < n; ++col) m(i, col) += c * m(j, col);
    }
    return m;
}

IwasawaCoords random_coords(SplitMix64& g, int k) {
    std::vector<double> x(static_cast<size_t>(k) * (k - 1) / 2);
    std::vector<double> y(k - 1);
    for (auto& v : x) v = g.uniform(-1.0, 1.0);
    for (auto& v : y) v = g.uniform(0.5, 2.0);
    return IwasawaCoords(k, std::move(x), std::move(y));
}

} // namespace

TEST_CASE("determinant routes agree on random integer matrices") {
    SplitMix64 g(101);
    for (int rep = 0; rep < 40; ++rep) {
        int n = 2 + static_cast<int>(g.uniform_int(0, 4));
        Mat<bigint> m = random_int_matrix(g, n, n, 6);
        bigint exact = det_bareiss(m);

        Mat<bigrat> mq(n, n);
        for (size_t i = 0; i < m.a.size(); ++i) mq.a[i] = bigrat(m.a[i]);
        CHECK(det_rational(mq) == bigrat(exact));

        Mat<double> md = mat_int_to_double(mat_cast<int64_t>(m));
        double approx = static_cast<double>(det_real(md));
        double target = static_cast<double>(exact);
        CHECK(std::abs(approx - target) <= 1e-9 * std::max(1.0, std::abs(target)));
    }
}

TEST_CASE("determinant of unimodular products is one") {
    SplitMix64 g(102);
    for (int rep = 0; rep < 20; ++rep) {
        int n = 2 + static_cast<int>(g.uniform_int(0, 3));
        Mat<bigint> m = random_unimodular(g, n, 12);
        CHECK(det_bareiss(m) == bigint(1));
    }
}

TEST_CASE("adjugate identity m * adj(m) = det(m) * I") {
    SplitMix64 g(103);
    for (int rep = 0; rep < 25; ++rep) {
        int n = 2 + static_cast<int>(g.uniform_int(0, 3));
        Mat<bigint> m = random_int_matrix(g, n, n, 5);
        bigint d = det_bareiss(m);
        Mat<bigint> prod = m * adjugate(m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(prod(i, j) == (i == j ? d : bigint(0)));
    }
}

TEST_CASE("minor routes agree and match manual cofactor expansion") {
    SplitMix64 g(104);
    Mat<bigint> m = random_int_matrix(g, 4, 5, 7);
    MinorIndex idx{{1, 3, 4}, {2, 3, 5}};
    bigint exact = minor_exact(m, idx);

    // cofactor expansion of the selected 3x3 along its first row
    auto at = [&](int r, int c) { return m(idx.rows[r] - 1, idx.cols[c] - 1); };
    bigint manual = at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
                    at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
                    at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    CHECK(exact == manual);

    Mat<bigrat> mq(4, 5);
    for (size_t i = 0; i < m.a.size(); ++i) mq.a[i] = bigrat(m.a[i]);
    CHECK(minor_rational(mq, idx) == bigrat(exact));
    Mat<double> md = mat_int_to_double(mat_cast<int64_t>(m));
    CHECK(minor_real(md, idx) == doctest::Approx(static_cast<double>(exact)).epsilon(1e-12));
}

TEST_CASE("bottom minors follow lexicographic column subsets") {
    SplitMix64 g(105);
    Mat<bigint> m = random_int_matrix(g, 3, 5, 4);
    std::vector<bigint> minors = bottom_minors(m, 2);
    std::vector<std::vector<int>> tuples = index_tuples(5, 2);
    REQUIRE(minors.size() == tuples.size());
    for (size_t t = 0; t < tuples.size(); ++t) {
        MinorIndex idx{{2, 3}, {tuples[t][0] + 1, tuples[t][1] + 1}};
        CHECK(minors[t] == minor_exact(m, idx));
    }
}

TEST_CASE("product minors expand over column subsets exactly") {
    SplitMix64 g(106);
    for (int rep = 0; rep < 15; ++rep) {
        int k = 2 + static_cast<int>(g.uniform_int(0, 1));
        int n = k + 1 + static_cast<int>(g.uniform_int(0, 2));
        Mat<bigint> a = random_int_matrix(g, k, n, 5);
        Mat<bigint> b = random_int_matrix(g, n, k, 5);
        bigint lhs = det_bareiss(a * b);
        bigint rhs = 0;
        std::vector<int> all_rows(k), all_cols(k);
        for (int i = 0; i < k; ++i) all_rows[i] = all_cols[i] = i + 1;
        for (const std::vector<int>& s : index_tuples(n, k)) {
            std::vector<int> sel(k);
            for (int i = 0; i < k; ++i) sel[i] = s[i] + 1;
            rhs += minor_exact(a, {all_rows, sel}) * minor_exact(b, {sel, all_cols});
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("upper triangular bottom minors vanish off the diagonal tail") {
    SplitMix64 g(107);
    const int n = 5;
    Mat<bigint> u(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) u(i, j) = bigint(g.uniform_int(j == i ? 1 : -4, 4));
    for (int k = 1; k < n; ++k) {
        std::vector<bigint> minors = bottom_minors(u, k);
        std::vector<std::vector<int>> tuples = index_tuples(n, k);
        for (size_t t = 0; t < tuples.size(); ++t) {
            bool tail = true;
            for (int l = 0; l < k; ++l)
                if (tuples[t][l] < n - k + l) tail = false;
            if (!tail) {
                CHECK(minors[t] == bigint(0));
            }
        }
        // the one surviving subset is the last k columns
        bigint diag = 1;
        for (int i = n - k; i < n; ++i) diag *= u(i, i);
        CHECK(minors.back() == diag);
    }
}

TEST_CASE("iwasawa coordinates reproduce the represented matrix") {
    SplitMix64 g(108);
    for (int rep = 0; rep < 30; ++rep) {
        int k = 2 + static_cast<int>(g.uniform_int(0, 3));
        Mat<double> m = random_real_matrix(g, k);
        if (std::abs(static_cast<double>(det_real(m))) < 0.05) continue;
        CHECK(iwasawa_recompose_residual(m) < 1e-9);

        IwasawaCoords z = iwasawa_decompose(m);
        REQUIRE(z.k == k);
        for (double v : z.y) CHECK(v > 0.0);
        // coordinates of the represented matrix give the matrix back
        IwasawaCoords z2 = iwasawa_decompose(z.matrix());
        for (size_t i = 0; i < z.y.size(); ++i)
            CHECK(z2.y[i] == doctest::Approx(z.y[i]).epsilon(1e-9));
        for (size_t i = 0; i < z.x.size(); ++i)
            CHECK(z2.x[i] == doctest::Approx(z.x[i]).epsilon(1e-8));
    }
}

TEST_CASE("iwasawa decomposition of a fixed matrix") {
    Mat<double> m(2, 2);
    m(0, 0) = 2.0;
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    m(1, 1) = 1.0;
    IwasawaCoords z = iwasawa_decompose(m);
    CHECK(z.y[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(z.xat(1, 2) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(z.diag(1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(z.diag(2) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("iwasawa decomposition rejects singular input") {
    Mat<double> m(3, 3);
    for (auto& v : m.a) v = 1.0;
    CHECK_THROWS_AS(iwasawa_decompose(m), domain_error);
}

TEST_CASE("translation by an integer matrix matches decompose of the product") {
    SplitMix64 g(109);
    for (int rep = 0; rep < 20; ++rep) {
        int k = 2 + static_cast<int>(g.uniform_int(0, 2));
        IwasawaCoords z = random_coords(g, k);
        Mat<bigint> gamma_big = random_unimodular(g, k, 8);
        Mat<int64_t> gamma = mat_cast<int64_t>(gamma_big);
        IwasawaCoords left = iwasawa_translate(gamma, z);
        IwasawaCoords right = iwasawa_decompose(mat_int_to_double(gamma) * z.matrix());
        for (size_t i = 0; i < left.y.size(); ++i)
            CHECK(left.y[i] == doctest::Approx(right.y[i]).epsilon(1e-8));
        for (size_t i = 0; i < left.x.size(); ++i)
            CHECK(left.x[i] == doctest::Approx(right.x[i]).epsilon(1e-7));
    }
}

TEST_CASE("wedge norm matches the coordinate closed form") {
    SplitMix64 g(110);
    for (int rep = 0; rep < 10; ++rep) {
        int k = 3 + static_cast<int>(g.uniform_int(0, 3));
        IwasawaCoords z = random_coords(g, k);
        for (int i = 1; i < k; ++i) {
            double closed = wedge_norm_closed_form(z, i);
            CHECK(wedge_norm_sq(z, i) == doctest::Approx(closed).epsilon(1e-9));
        }
    }
}

TEST_CASE("wedge norm closed form holds exactly in rational arithmetic") {
    // rational coordinate matrix: unit upper triangular times diag(d)
    const int k = 4;
    std::vector<bigrat> y = {bigrat(3, 2), bigrat(5, 4), bigrat(7, 3)};
    std::vector<bigrat> d(k, bigrat(1));
    for (int i = k - 2; i >= 0; --i) d[i] = d[i + 1] * y[k - 2 - i];
    Mat<bigrat> m(k, k);
    SplitMix64 g(111);
    for (int i = 0; i < k; ++i) {
        m(i, i) = d[i];
        for (int j = i + 1; j < k; ++j)
            m(i, j) = bigrat(g.uniform_int(-7, 7), 1 + g.uniform_int(0, 4)) * d[j];
    }
    for (int i = 1; i < k; ++i) {
        std::vector<bigrat> e = wedge_closed_form_exponents(k, i);
        bigrat expect(1);
        for (int l = 1; l <= i; ++l) {
            bigint num = boost::multiprecision::numerator(e[l - 1]);
            CHECK(boost::multiprecision::denominator(e[l - 1]) == 1);
            for (bigint c = 0; c < num; ++c) expect *= y[l - 1];
        }
        expect *= expect;
        CHECK(wedge_norm_sq_exact(m, i) == expect);
    }
}

TEST_CASE("balance invariant agrees with its wedge route") {
    SplitMix64 g(112);
    for (int two_n : {4, 6}) {
        for (int rep = 0; rep < 5; ++rep) {
            IwasawaCoords z = random_coords(g, two_n);
            double h = height(z);
            CHECK(h > 0.0);
            CHECK(height_via_wedge(z) == doctest::Approx(h).epsilon(1e-8));
        }
    }
    // smallest even case collapses to the single ratio
    IwasawaCoords z2 = random_coords(g, 2);
    CHECK(height(z2) == doctest::Approx(z2.y[0]).epsilon(1e-12));
    IwasawaCoords odd = random_coords(g, 3);
    CHECK_THROWS_AS(height(odd), domain_error);
}

TEST_CASE("power exponent table branches agree on the overlap") {
    for (int n : {2, 3, 4, 5, 6}) {
        Mat<int64_t> b = power_exponent_table(n);
        REQUIRE(b.rows == n - 1);
        REQUIRE(b.cols == n - 1);
        for (int i = 1; i <= n - 1; ++i)
            for (int j = 1; j <= n - 1; ++j) {
                int64_t expect = (i + j <= n) ? static_cast<int64_t>(i) * j
                                              : static_cast<int64_t>(n - i) * (n - j);
                CHECK(b(i - 1, j - 1) == expect);
                // symmetric in both arguments
                CHECK(b(i - 1, j - 1) == b(j - 1, i - 1));
            }
    }
}

TEST_CASE("shifted exponents sum to zero and invert back") {
    SplitMix64 g(113);
    for (int rep = 0; rep < 15; ++rep) {
        int n = 2 + static_cast<int>(g.uniform_int(0, 3));
        SpectralParams p{n, {}};
        for (int i = 0; i + 1 < n; ++i) p.nu.emplace_back(g.uniform(0.2, 1.2), g.uniform(-1.0, 1.0));
        std::vector<cplx> alpha = langlands_params(p);
        REQUIRE(static_cast<int>(alpha.size()) == n);
        cplx sum = 0.0;
        for (cplx a : alpha) sum += a;
        CHECK(std::abs(sum) < 1e-12);
        SpectralParams q = langlands_inverse(n, alpha);
        for (int i = 0; i + 1 < n; ++i) CHECK(std::abs(q.nu[i] - p.nu[i]) < 1e-12);
    }
}

TEST_CASE("power function multiplies row sums into y exponents") {
    SplitMix64 g(114);
    SpectralParams p{4, {cplx(0.4, 0.1), cplx(0.6, -0.2), cplx(0.3, 0.3)}};
    IwasawaCoords z = random_coords(g, 4);
    std::vector<cplx> bsum = exponent_row_sums(p);
    cplx expect = 1.0;
    for (int i = 0; i < 3; ++i) expect *= std::pow(cplx(z.y[i], 0.0), bsum[i]);
    cplx got = i_nu(z, p);
    CHECK(std::abs(got - expect) < 1e-12 * std::abs(expect));
    CHECK(std::abs(i_nu_from_y(z.y, p) - expect) < 1e-12 * std::abs(expect));

    // identity point: all exponents on y = 1
    IwasawaCoords e(4, std::vector<double>(6, 0.3), {1.0, 1.0, 1.0});
    CHECK(std::abs(i_nu(e, p) - 1.0) < 1e-14);
}

TEST_CASE("invariant volume exponents") {
    for (int n : {2, 3, 4, 5})
        for (int k = 1; k < n; ++k)
            CHECK(volume_exponent(n, k) == -static_cast<int64_t>(k) * (n - k) - 1);
}

TEST_CASE("matrix block extraction") {
    SplitMix64 g(115);
    Mat<bigint> m = random_int_matrix(g, 5, 6, 9);
    Mat<bigint> b = m.block(1, 4, 2, 6);
    REQUIRE(b.rows == 3);
    REQUIRE(b.cols == 4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) CHECK(b(i, j) == m(i + 1, j + 2));
    Mat<bigint> t = m.transpose();
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) CHECK(t(j, i) == m(i, j));
}
