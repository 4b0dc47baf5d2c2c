#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rs/coset.hpp"
#include "rs/minors.hpp"
#include "rs/rng.hpp"
#include "rs/wedge.hpp"

#include <algorithm>
#include <set>

using namespace rs;

TEST_CASE("key equality matches the exact membership oracle") {
    struct Config {
        int n, m;
    };
    for (Config c : {Config{2, 1}, Config{3, 1}, Config{3, 2}, Config{4, 1}}) {
        std::vector<Mat<int64_t>> pool = random_sl_pool(c.n, 16, 900 + c.n * 10 + c.m);
        for (size_t i = 0; i < pool.size(); ++i) {
            CHECK(same_coset(pool[i], pool[i], c.m));
            for (size_t j = i + 1; j < pool.size(); ++j) {
                bool via_key = same_coset(pool[i], pool[j], c.m);
                bool via_oracle = same_coset_oracle(pool[i], pool[j], c.m);
                CHECK(via_key == via_oracle);
            }
        }
    }
}

TEST_CASE("left translation by the block subgroup preserves the key") {
    SplitMix64 g(21);
    for (int rep = 0; rep < 20; ++rep) {
        int n = 3, m = rep % 2 + 1;
        std::vector<Mat<int64_t>> pool = random_sl_pool(n, 1, 500 + rep);
        Mat<int64_t> a = pool[0];

        // block subgroup element: special upper-left, unipotent upper-triangular
        // lower-right, arbitrary upper-right; built from elementary shears
        Mat<int64_t> u = mat_cast<int64_t>(Mat<bigint>::identity(n));
        u(0, 1) = static_cast<int64_t>(g.uniform_int(-3, 3));
        u(0, 2) = static_cast<int64_t>(g.uniform_int(-3, 3));
        u(1, 2) = static_cast<int64_t>(g.uniform_int(-3, 3));
        if (m == 1) {
            Mat<int64_t> l = mat_cast<int64_t>(Mat<bigint>::identity(n));
            l(1, 0) = static_cast<int64_t>(g.uniform_int(-2, 2));
            u = u * l;
        }
        CHECK(block_subgroup_member(mat_int_to_big(u), m));
        Mat<int64_t> ua = u * a;
        CHECK(coset_key(ua, m) == coset_key(a, m));
        CHECK(same_coset_oracle(ua, a, m));
    }
}

TEST_CASE("keys separate cosets that the oracle separates") {
    // generic pair expected to differ in coset for every m
    std::vector<Mat<int64_t>> pool = random_sl_pool(4, 2, 4242);
    bool any_diff = false;
    for (int m = 1; m < 4; ++m) {
        bool k = same_coset(pool[0], pool[1], m);
        bool o = same_coset_oracle(pool[0], pool[1], m);
        CHECK(k == o);
        if (!k) any_diff = true;
    }
    CHECK(any_diff);
}

TEST_CASE("completion extends a primitive block to determinant one") {
    SplitMix64 g(22);
    int built = 0;
    while (built < 25) {
        int n = 3 + static_cast<int>(g.uniform_int(0, 1));
        int m = 1 + static_cast<int>(g.uniform_int(0, n - 2));
        Mat<int64_t> r(m, n);
        for (auto& v : r.a) v = g.uniform_int(-5, 5);
        if (!bottom_block_primitive(r)) continue;
        ++built;
        Mat<int64_t> a = complete_bottom_block(r);
        REQUIRE(a.rows == n);
        REQUIRE(a.cols == n);
        CHECK(det_bareiss(mat_int_to_big(a)) == bigint(1));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) CHECK(a(n - m + i, j) == r(i, j));
    }
}

TEST_CASE("completion of a fixed block is deterministic") {
    Mat<int64_t> r(2, 3);
    r(0, 0) = 1;
    r(0, 1) = 1;
    r(0, 2) = 2;
    r(1, 0) = 0;
    r(1, 1) = 2;
    r(1, 2) = 1;
    Mat<int64_t> a = complete_bottom_block(r);
    CHECK(a(0, 0) == 0);
    CHECK(a(0, 1) == -1);
    CHECK(a(0, 2) == 0);
    CHECK(det_bareiss(mat_int_to_big(a)) == bigint(1));
}

TEST_CASE("imprimitive and degenerate blocks are rejected") {
    Mat<int64_t> r(1, 3);
    r(0, 0) = 2;
    r(0, 1) = 4;
    r(0, 2) = 6;
    CHECK(!bottom_block_primitive(r));
    CHECK_THROWS_AS(complete_bottom_block(r), domain_error);

    Mat<int64_t> zero(2, 4);
    CHECK(!bottom_block_primitive(zero));
    CHECK_THROWS_AS(complete_bottom_block(zero), domain_error);
}

TEST_CASE("hermite form is canonical under unimodular row mixing") {
    SplitMix64 g(23);
    for (int rep = 0; rep < 20; ++rep) {
        int m = 2, n = 4;
        Mat<bigint> r(m, n);
        for (auto& v : r.a) v = bigint(g.uniform_int(-6, 6));
        // skip rank-deficient rows
        bool nonzero = false;
        for (const bigint& d : bottom_minors(r, m))
            if (d != 0) nonzero = true;
        if (!nonzero) continue;

        Mat<bigint> h = row_hnf(r);
        CHECK(row_hnf(h) == h);

        // mix rows by a random det +-1 integer matrix; canonical form unchanged
        Mat<bigint> u = Mat<bigint>::identity(m);
        u(0, 1) = bigint(g.uniform_int(-3, 3));
        Mat<bigint> l = Mat<bigint>::identity(m);
        l(1, 0) = bigint(g.uniform_int(-3, 3));
        CHECK(row_hnf(u * l * r) == h);
    }
}

TEST_CASE("enumerated representatives carry distinct keys and unit determinant") {
    LatticeEnumSpec spec;
    spec.n = 3;
    spec.m = 1;
    spec.entry_bound = 2;
    std::vector<Mat<int64_t>> reps = enumerate_coset_reps(spec);
    CHECK(reps.size() == 49);
    std::set<CosetKey> seen;
    for (const auto& rep : reps) {
        CHECK(det_bareiss(mat_int_to_big(rep)) == bigint(1));
        CHECK(seen.insert(coset_key(rep, spec.m)).second);
    }

    spec.m = 2;
    std::vector<Mat<int64_t>> reps2 = enumerate_coset_reps(spec);
    CHECK(reps2.size() > 0);
    std::set<CosetKey> seen2;
    for (const auto& rep : reps2) CHECK(seen2.insert(coset_key(rep, spec.m)).second);
}

TEST_CASE("full enumeration agrees with sign-normalized key census at tiny bound") {
    std::vector<Mat<int64_t>> all = enumerate_sl_full(2, 1);
    CHECK(all.size() > 0);
    std::set<CosetKey> keys;
    for (const auto& a : all) {
        CHECK(det_bareiss(mat_int_to_big(a)) == bigint(1));
        Mat<int64_t> neg = a;
        for (int j = 0; j < a.cols; ++j) neg(a.rows - 1, j) = -neg(a.rows - 1, j);
        CosetKey k1 = coset_key(a, 1), k2 = coset_key(neg, 1);
        keys.insert(k2 < k1 ? k2 : k1);
    }
    LatticeEnumSpec spec;
    spec.n = 2;
    spec.m = 1;
    spec.entry_bound = 1;
    CHECK(enumerate_coset_reps(spec).size() == keys.size());
}

TEST_CASE("random pool consists of determinant one matrices") {
    for (int n : {2, 3, 4}) {
        std::vector<Mat<int64_t>> pool = random_sl_pool(n, 30, 77 + n);
        CHECK(pool.size() == 30);
        for (const auto& a : pool) CHECK(det_bareiss(mat_int_to_big(a)) == bigint(1));
    }
}

TEST_CASE("parabolic bottom blocks are primitive canonical forms") {
    std::vector<Mat<int64_t>> blocks = enumerate_parabolic_bottom_blocks(4, 1);
    CHECK(blocks.size() > 0);
    std::set<std::vector<int64_t>> distinct;
    for (const auto& b : blocks) {
        REQUIRE(b.rows == 2);
        REQUIRE(b.cols == 4);
        CHECK(bottom_block_primitive(b));
        Mat<bigint> h = row_hnf(mat_int_to_big(b));
        CHECK(h == mat_int_to_big(b));
        CHECK(distinct.insert(b.a).second);
    }
}

TEST_CASE("no translated frame beats the balance invariant at a reduced point") {
    std::vector<Mat<int64_t>> blocks = enumerate_parabolic_bottom_blocks(4, 1);
    SplitMix64 g(24);
    for (int rep = 0; rep < 6; ++rep) {
        std::vector<double> x(6), y(3);
        for (auto& v : x) v = g.uniform(-0.5, 0.5);
        for (auto& v : y) v = g.uniform(1.0, 2.0);
        IwasawaCoords z(4, x, y);
        HeightScanResult r = verify_height_contraction(z, blocks);
        CHECK(r.classes == static_cast<int64_t>(blocks.size()));
        CHECK(r.violations == 0);
        CHECK(r.max_ratio <= 1.0 + 1e-10);
    }
}

TEST_CASE("height scan through full representatives matches the block route") {
    std::vector<Mat<int64_t>> blocks = enumerate_parabolic_bottom_blocks(4, 1);
    std::vector<Mat<int64_t>> reps;
    reps.reserve(blocks.size());
    for (const auto& b : blocks) reps.push_back(complete_bottom_block(b));
    IwasawaCoords z(4, std::vector<double>(6, 0.2), {1.4, 1.1, 1.7});
    HeightScanResult via_blocks = verify_height_contraction(z, blocks);
    HeightScanResult via_reps = verify_height_contraction_full(z, reps);
    CHECK(via_blocks.classes == via_reps.classes);
    CHECK(via_blocks.violations == 0);
    CHECK(via_reps.violations == 0);
    CHECK(via_blocks.max_ratio == doctest::Approx(via_reps.max_ratio).epsilon(1e-6));
}

TEST_CASE("key census is stable under pool translation") {
    // multiplying every pool element on the left by one subgroup element
    // permutes nothing: keys are unchanged classwise
    std::vector<Mat<int64_t>> pool = random_sl_pool(3, 10, 3131);
    Mat<int64_t> u = mat_cast<int64_t>(Mat<bigint>::identity(3));
    u(0, 1) = 2;
    u(1, 2) = -1;
    for (const auto& a : pool) {
        Mat<int64_t> ua = u * a;
        CHECK(coset_key(ua, 2) == coset_key(a, 2));
    }
}
