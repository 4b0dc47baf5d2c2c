#include "rs/coset.hpp"

#include "rs/minors.hpp"
#include "rs/parallel.hpp"
#include "rs/rng.hpp"
#include "rs/wedge.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace rs {

bool CosetKey::operator<(const CosetKey& o) const {
    if (n != o.n) return n < o.n;
    if (m != o.m) return m < o.m;
    return levels < o.levels;
}

std::string CosetKey::to_string() const {
    std::ostringstream os;
    os << n << ":" << m;
    for (const auto& lvl : levels) {
        os << "|";
        for (size_t i = 0; i < lvl.size(); ++i) {
            if (i) os << ",";
            os << lvl[i];
        }
    }
    return os.str();
}

namespace {

// key of an m-by-n block standing in for the bottom rows of a larger matrix
CosetKey key_of_block(const Mat<int64_t>& R) {
    CosetKey key;
    key.n = R.cols;
    key.m = R.rows;
    Mat<bigint> rb = mat_int_to_big(R);
    for (int k = 1; k <= R.rows; ++k) key.levels.push_back(bottom_minors(rb, k));
    return key;
}

int64_t det_small(const Mat<int64_t>& s) {
    int k = s.rows;
    if (k == 1) return s(0, 0);
    if (k == 2) return s(0, 0) * s(1, 1) - s(0, 1) * s(1, 0);
    if (k == 3)
        return s(0, 0) * (s(1, 1) * s(2, 2) - s(1, 2) * s(2, 1)) -
               s(0, 1) * (s(1, 0) * s(2, 2) - s(1, 2) * s(2, 0)) +
               s(0, 2) * (s(1, 0) * s(2, 1) - s(1, 1) * s(2, 0));
    int64_t det = 0;
    for (int j = 0; j < k; ++j) {
        Mat<int64_t> minor_m(k - 1, k - 1);
        for (int r = 1; r < k; ++r)
            for (int c = 0, cc = 0; c < k; ++c) {
                if (c == j) continue;
                minor_m(r - 1, cc++) = s(r, c);
            }
        int64_t term = s(0, j) * det_small(minor_m);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

// gcd of all m-minors equals 1, in native integers (entries are small)
bool primitive_fast(const Mat<int64_t>& R) {
    int m = R.rows;
    int64_t g = 0;
    for (const auto& cols : index_tuples(R.cols, m)) {
        Mat<int64_t> s(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) s(i, j) = R(i, cols[j]);
        g = std::gcd(g, std::abs(det_small(s)));
        if (g == 1) return true;
    }
    return g == 1;
}

bool needs_sign_flip(const Mat<int64_t>& R) {
    int last = R.rows - 1;
    for (int j = 0; j < R.cols; ++j)
        if (R(last, j) != 0) return R(last, j) < 0;
    return false;
}

Mat<int64_t> negate(const Mat<int64_t>& R) {
    Mat<int64_t> out = R;
    for (auto& v : out.a) v = -v;
    return out;
}

int64_t ipow_checked(int64_t base, int exp, int64_t cap) {
    int64_t v = 1;
    for (int i = 0; i < exp; ++i) {
        if (v > cap / base + 1) return cap + 1;
        v *= base;
        if (v > cap) return cap + 1;
    }
    return v;
}

} // namespace

CosetKey coset_key_big(const Mat<bigint>& A, int m) {
    if (A.rows != A.cols) throw domain_error("coset_key: need a square matrix");
    if (m < 1 || m >= A.rows) throw domain_error("coset_key: need 1 <= m < n");
    CosetKey key;
    key.n = A.rows;
    key.m = m;
    key.levels.reserve(m);
    for (int k = 1; k <= m; ++k) key.levels.push_back(bottom_minors(A, k));
    return key;
}

CosetKey coset_key(const Mat<int64_t>& A, int m) { return coset_key_big(mat_int_to_big(A), m); }

bool block_subgroup_member(const Mat<bigint>& X, int m) {
    int n = X.rows;
    if (X.cols != n || m < 1 || m >= n) throw domain_error("block_subgroup_member: bad sizes");
    int t = n - m;
    for (int i = t; i < n; ++i)
        for (int j = 0; j < t; ++j)
            if (X(i, j) != 0) return false;
    for (int i = t; i < n; ++i) {
        if (X(i, i) != 1) return false;
        for (int j = t; j < i; ++j)
            if (X(i, j) != 0) return false;
    }
    Mat<bigint> top = X.block(0, t, 0, t);
    return det_bareiss(top) == 1;
}

bool same_coset_oracle(const Mat<int64_t>& A, const Mat<int64_t>& B, int m) {
    Mat<bigint> a = mat_int_to_big(A), b = mat_int_to_big(B);
    if (det_bareiss(a) != 1 || det_bareiss(b) != 1)
        throw domain_error("same_coset_oracle: matrices must have determinant one");
    Mat<bigint> quotient = a * adjugate(b); // b^{-1} = adj(b) when det b = 1
    return block_subgroup_member(quotient, m);
}

bool same_coset(const Mat<int64_t>& A, const Mat<int64_t>& B, int m) {
    return coset_key(A, m) == coset_key(B, m);
}

bool bottom_block_primitive(const Mat<int64_t>& R) { return primitive_fast(R); }

namespace {

// one extended-gcd column operation: combine columns cj and cp so that row i
// gets the gcd at cp and zero at cj
void column_gcd_step(Mat<bigint>& M, Mat<bigint>& U, int i, int cj, int cp) {
    bigint a = M(i, cp), b = M(i, cj);
    if (b == 0) return;
    if (a == 0) {
        for (int r = 0; r < M.rows; ++r) {
            std::swap(M(r, cj), M(r, cp));
            M(r, cj) = -M(r, cj);
        }
        for (int r = 0; r < U.rows; ++r) {
            std::swap(U(r, cj), U(r, cp));
            U(r, cj) = -U(r, cj);
        }
        return;
    }
    bigint x, y, g;
    {
        bigint old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
        while (r != 0) {
            bigint qt = old_r / r;
            bigint tmp = old_r - qt * r;
            old_r = r;
            r = tmp;
            tmp = old_s - qt * s;
            old_s = s;
            s = tmp;
            tmp = old_t - qt * t;
            old_t = t;
            t = tmp;
        }
        g = old_r;
        x = old_s;
        y = old_t;
        if (g < 0) {
            g = -g;
            x = -x;
            y = -y;
        }
    }
    bigint ag = a / g, bg = b / g;
    // new cp = x cp + y cj ; new cj = ag cj - bg cp  (unimodular since x ag + y bg = 1)
    for (int r = 0; r < M.rows; ++r) {
        bigint vp = M(r, cp), vj = M(r, cj);
        M(r, cp) = x * vp + y * vj;
        M(r, cj) = ag * vj - bg * vp;
    }
    for (int r = 0; r < U.rows; ++r) {
        bigint vp = U(r, cp), vj = U(r, cj);
        U(r, cp) = x * vp + y * vj;
        U(r, cj) = ag * vj - bg * vp;
    }
}

} // namespace

Mat<int64_t> complete_bottom_block(const Mat<int64_t>& R) {
    int m = R.rows, n = R.cols;
    if (m >= n) throw domain_error("complete_bottom_block: need m < n");
    if (!bottom_block_primitive(R))
        throw domain_error("complete_bottom_block: block is not primitive");
    Mat<bigint> M = mat_int_to_big(R);
    Mat<bigint> U = Mat<bigint>::identity(n);
    // column-reduce to [0 | T] with upper-triangular T, positive diagonal
    for (int i = m - 1; i >= 0; --i) {
        int p = n - m + i;
        for (int j = 0; j < p; ++j) column_gcd_step(M, U, i, j, p);
        if (M(i, p) < 0) {
            for (int r = 0; r < M.rows; ++r) M(r, p) = -M(r, p);
            for (int r = 0; r < U.rows; ++r) U(r, p) = -U(r, p);
        }
    }
    // with V = U^{-1}, take the top n-m rows of V as the completion
    bigint detU = det_bareiss(U);
    Mat<bigint> V = adjugate(U);
    if (detU == -1) {
        for (auto& v : V.a) v = -v;
    } else if (detU != 1) {
        throw domain_error("complete_bottom_block: internal unimodularity failure");
    }

    Mat<bigint> A(n, n);
    for (int i = 0; i < n - m; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = V(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) A(n - m + i, j) = R(i, j);
    bigint d = det_bareiss(A);
    if (d == -1) {
        for (int j = 0; j < n; ++j) A(0, j) = -A(0, j);
        d = 1;
    }
    if (d != 1) throw domain_error("complete_bottom_block: completion failed");

    Mat<int64_t> out(n, n);
    for (size_t i = 0; i < A.a.size(); ++i) {
        if (A.a[i] > std::numeric_limits<int64_t>::max() ||
            A.a[i] < std::numeric_limits<int64_t>::min())
            throw domain_error("complete_bottom_block: completion entries overflow int64");
        out.a[i] = static_cast<int64_t>(A.a[i]);
    }
    return out;
}

std::vector<Mat<int64_t>> enumerate_coset_reps(const LatticeEnumSpec& spec) {
    int n = spec.n, m = spec.m, b = spec.entry_bound;
    if (n < 2 || m < 1 || m >= n) throw domain_error("enumerate_coset_reps: need 1 <= m < n");
    if (b < 1) throw domain_error("enumerate_coset_reps: need entry bound >= 1");
    int cells = n * m;
    int64_t side = 2 * static_cast<int64_t>(b) + 1;
    int64_t count = ipow_checked(side, cells, spec.candidate_cap);
    if (count > spec.candidate_cap)
        throw domain_error("enumerate_coset_reps: candidate count exceeds the resource cap");

    std::map<CosetKey, Mat<int64_t>> found;
    Mat<int64_t> R(m, n);
    for (int64_t idx = 0; idx < count; ++idx) {
        int64_t rem = idx;
        for (int c = 0; c < cells; ++c) {
            R.a[c] = rem % side - b;
            rem /= side;
        }
        if (!primitive_fast(R)) continue;
        Mat<int64_t> canon = needs_sign_flip(R) ? negate(R) : R;
        CosetKey key = key_of_block(canon);
        if (found.find(key) == found.end()) found.emplace(std::move(key), canon);
    }
    std::vector<Mat<int64_t>> reps;
    reps.reserve(found.size());
    for (auto& [key, block] : found) reps.push_back(complete_bottom_block(block));
    return reps;
}

std::vector<Mat<int64_t>> enumerate_sl_full(int n, int bound, int64_t cap) {
    int cells = n * n;
    int64_t side = 2 * static_cast<int64_t>(bound) + 1;
    int64_t count = ipow_checked(side, cells, cap);
    if (count > cap) throw domain_error("enumerate_sl_full: candidate count exceeds the cap");
    std::vector<Mat<int64_t>> out;
    Mat<int64_t> A(n, n);
    for (int64_t idx = 0; idx < count; ++idx) {
        int64_t rem = idx;
        for (int c = 0; c < cells; ++c) {
            A.a[c] = rem % side - bound;
            rem /= side;
        }
        if (det_small(A) == 1) out.push_back(A);
    }
    return out;
}

std::vector<Mat<int64_t>> random_sl_pool(int n, int count, uint64_t seed, int word_len) {
    std::vector<Mat<int64_t>> pool;
    pool.reserve(count);
    for (int c = 0; c < count; ++c) {
        SplitMix64 g(hash_combine(seed, c));
        Mat<int64_t> A = Mat<int64_t>::identity(n);
        for (int w = 0; w < word_len; ++w) {
            int i = static_cast<int>(g.uniform_int(0, n - 1));
            int j = static_cast<int>(g.uniform_int(0, n - 2));
            if (j >= i) ++j;
            int64_t v = g.uniform_int(0, 1) == 0 ? 1 : -1;
            // right-multiply by E_{ij}(v): column j += v * column i
            for (int r = 0; r < n; ++r) A(r, j) += v * A(r, i);
        }
        pool.push_back(A);
    }
    return pool;
}

Mat<bigint> row_hnf(const Mat<bigint>& R) {
    Mat<bigint> H = R;
    int m = H.rows, n = H.cols;
    int pivot_row = 0;
    for (int col = 0; col < n && pivot_row < m; ++col) {
        // clear below using row gcd steps
        int base = -1;
        for (int r = pivot_row; r < m; ++r)
            if (H(r, col) != 0) { base = r; break; }
        if (base < 0) continue;
        if (base != pivot_row)
            for (int c = 0; c < n; ++c) std::swap(H(pivot_row, c), H(base, c));
        for (int r = pivot_row + 1; r < m; ++r) {
            while (H(r, col) != 0) {
                bigint q = H(pivot_row, col) / H(r, col);
                for (int c = 0; c < n; ++c) H(pivot_row, c) -= q * H(r, c);
                for (int c = 0; c < n; ++c) std::swap(H(pivot_row, c), H(r, c));
            }
        }
        if (H(pivot_row, col) < 0)
            for (int c = 0; c < n; ++c) H(pivot_row, c) = -H(pivot_row, c);
        // reduce entries above the pivot
        for (int r = 0; r < pivot_row; ++r) {
            bigint q;
            // floor division for canonical reduction 0 <= entry < pivot
            bigint num = H(r, col), den = H(pivot_row, col);
            q = num / den;
            if (num - q * den < 0) q -= 1;
            if (q != 0)
                for (int c = 0; c < n; ++c) H(r, c) -= q * H(pivot_row, c);
        }
        ++pivot_row;
    }
    return H;
}

std::vector<Mat<int64_t>> enumerate_parabolic_bottom_blocks(int two_n, int bound) {
    if (two_n % 2 != 0 || two_n < 4)
        throw domain_error("enumerate_parabolic_bottom_blocks: need even dimension >= 4");
    int half = two_n / 2;
    int cells = half * two_n;
    int64_t side = 2 * static_cast<int64_t>(bound) + 1;
    int64_t count = ipow_checked(side, cells, 40000000);
    if (count > 40000000)
        throw domain_error("enumerate_parabolic_bottom_blocks: candidate count exceeds the cap");

    int workers = std::max(1, max_threads());
    std::vector<std::unordered_set<std::string>> sets(workers);
    parallel_chunks(count, [&](int w, int64_t lo, int64_t hi) {
        Mat<int64_t> R(half, two_n);
        Mat<bigint> big(half, two_n);
        for (int64_t idx = lo; idx < hi; ++idx) {
            int64_t rem = idx;
            for (int c = 0; c < cells; ++c) {
                R.a[c] = rem % side - bound;
                rem /= side;
            }
            if (!primitive_fast(R)) continue;
            for (int c = 0; c < cells; ++c) big.a[c] = R.a[c];
            Mat<bigint> H = row_hnf(big);
            std::ostringstream os;
            for (const auto& v : H.a) os << v << ",";
            sets[w].insert(os.str());
        }
    });
    // merge and parse back into integer blocks, sorted for determinism
    std::unordered_set<std::string> merged;
    for (auto& s : sets) merged.merge(s);
    std::vector<std::string> keys(merged.begin(), merged.end());
    std::sort(keys.begin(), keys.end());
    std::vector<Mat<int64_t>> out;
    out.reserve(keys.size());
    for (const auto& k : keys) {
        Mat<int64_t> H(half, two_n);
        size_t pos = 0;
        for (int c = 0; c < cells; ++c) {
            size_t comma = k.find(',', pos);
            H.a[c] = std::stoll(k.substr(pos, comma - pos));
            pos = comma + 1;
        }
        out.push_back(H);
    }
    return out;
}

HeightScanResult verify_height_contraction(const IwasawaCoords& z,
                                           const std::vector<Mat<int64_t>>& bottom_blocks,
                                           double tol) {
    if (z.k % 2 != 0) throw domain_error("verify_height_contraction: need even dimension");
    for (double v : z.y)
        if (v < 1.0 - 1e-12)
            throw domain_error("verify_height_contraction: requires all ratios >= 1");
    int two_n = z.k, half = two_n / 2;
    Mat<double> ztil = z.matrix();
    double s = std::pow(z.det(), -1.0 / two_n);
    for (auto& v : ztil.a) v *= s;
    double hz = height(z);

    int workers = std::max(1, max_threads());
    std::vector<int64_t> viols(workers, 0);
    std::vector<double> maxr(workers, 0.0);
    parallel_chunks(static_cast<int64_t>(bottom_blocks.size()), [&](int w, int64_t lo, int64_t hi) {
        std::vector<double> rowbuf(static_cast<size_t>(half) * two_n);
        for (int64_t bidx = lo; bidx < hi; ++bidx) {
            const Mat<int64_t>& R = bottom_blocks[bidx];
            // rows of R * ztil
            for (int i = 0; i < half; ++i)
                for (int j = 0; j < two_n; ++j) {
                    long double acc = 0.0L;
                    for (int l = 0; l < two_n; ++l)
                        acc += static_cast<long double>(R(i, l)) * ztil(l, j);
                    rowbuf[static_cast<size_t>(i) * two_n + j] = static_cast<double>(acc);
                }
            Mat<double> W(half, two_n);
            W.a = rowbuf;
            std::vector<double> minors = bottom_minors_real(W, half);
            long double wsq = 0.0L;
            for (double v : minors) wsq += static_cast<long double>(v) * v;
            double h_translate = 1.0 / static_cast<double>(wsq);
            double ratio = h_translate / hz;
            if (ratio > maxr[w]) maxr[w] = ratio;
            if (h_translate > hz * (1.0 + tol)) ++viols[w];
        }
    });
    HeightScanResult res;
    res.classes = static_cast<int64_t>(bottom_blocks.size());
    for (int w = 0; w < workers; ++w) {
        res.violations += viols[w];
        res.max_ratio = std::max(res.max_ratio, maxr[w]);
    }
    return res;
}

HeightScanResult verify_height_contraction_full(const IwasawaCoords& z,
                                                const std::vector<Mat<int64_t>>& reps,
                                                double tol) {
    for (double v : z.y)
        if (v < 1.0 - 1e-12)
            throw domain_error("verify_height_contraction: requires all ratios >= 1");
    double hz = height(z);
    HeightScanResult res;
    res.classes = static_cast<int64_t>(reps.size());
    for (const auto& g : reps) {
        IwasawaCoords t = iwasawa_translate(g, z);
        double ht = height(t);
        double ratio = ht / hz;
        res.max_ratio = std::max(res.max_ratio, ratio);
        if (ht > hz * (1.0 + tol)) ++res.violations;
    }
    return res;
}

} // namespace rs
