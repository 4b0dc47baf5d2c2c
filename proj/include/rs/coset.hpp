#pragma once

#include "rs/common.hpp"
#include "rs/iwasawa.hpp"
#include "rs/matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rs {

// Invariant attached to the bottom m rows of an integer matrix: for each
// k = 1..m, all k-by-k minors of the bottom k rows, column sets in
// lexicographic order.  Equal keys characterize left translation by the
// block-triangular subgroup with special upper-left block and unipotent
// upper-triangular lower-right block.
struct CosetKey {
    int n = 0, m = 0;
    std::vector<std::vector<bigint>> levels;

    bool operator==(const CosetKey& o) const { return n == o.n && m == o.m && levels == o.levels; }
    bool operator<(const CosetKey& o) const;
    std::string to_string() const;
};

CosetKey coset_key(const Mat<int64_t>& A, int m);
CosetKey coset_key_big(const Mat<bigint>& A, int m);

// true if X lies in the block subgroup: zero lower-left block, unit
// upper-triangular lower-right m-by-m block, determinant-one upper-left block
bool block_subgroup_member(const Mat<bigint>& X, int m);

// membership oracle: A * B^{-1} in the block subgroup (A, B in SL(n,Z))
bool same_coset_oracle(const Mat<int64_t>& A, const Mat<int64_t>& B, int m);

// key-equality route
bool same_coset(const Mat<int64_t>& A, const Mat<int64_t>& B, int m);

struct LatticeEnumSpec {
    int n = 2;
    int m = 1;
    int entry_bound = 2;
    int64_t candidate_cap = 10000000;
};

// One representative per distinct sign-normalized key realizable with a
// bottom m-row block with entries in [-bound, bound]; each is completed to a
// determinant-one matrix.  Throws domain_error when the candidate count
// exceeds the cap.
std::vector<Mat<int64_t>> enumerate_coset_reps(const LatticeEnumSpec& spec);

// every det-one matrix with all entries in [-bound, bound]; candidate count
// (2b+1)^(n^2) must stay within the cap
std::vector<Mat<int64_t>> enumerate_sl_full(int n, int bound, int64_t cap = 10000000);

// complete a primitive m-by-n block to a det-one matrix having it as the
// bottom m rows
Mat<int64_t> complete_bottom_block(const Mat<int64_t>& R);

// gcd of all m-by-m minors equals one
bool bottom_block_primitive(const Mat<int64_t>& R);

// deterministic pseudo-random words in elementary matrices
std::vector<Mat<int64_t>> random_sl_pool(int n, int count, uint64_t seed, int word_len = 10);

// row Hermite normal form of a full-rank m-by-n integer block (canonical
// under left GL(m,Z) action)
Mat<bigint> row_hnf(const Mat<bigint>& R);

// All classes of primitive n-by-2n bottom blocks with entries in
// [-bound, bound] under left GL(n,Z), as canonical Hermite forms.  These
// index the parabolic cosets entering the balance-invariant scan.
std::vector<Mat<int64_t>> enumerate_parabolic_bottom_blocks(int two_n, int bound);

struct HeightScanResult {
    int64_t classes = 0;
    int64_t violations = 0;
    double max_ratio = 0.0; // max over classes of h(translate)/h(z)
};

// checks h(gamma z) <= h(z) (1 + tol) over translated frames given by bottom
// blocks; z must have all ratios >= 1
HeightScanResult verify_height_contraction(const IwasawaCoords& z,
                                           const std::vector<Mat<int64_t>>& bottom_blocks,
                                           double tol = 1e-10);

// same check routed through full decomposition of completed representatives
HeightScanResult verify_height_contraction_full(const IwasawaCoords& z,
                                                const std::vector<Mat<int64_t>>& reps,
                                                double tol = 1e-10);

} // namespace rs
