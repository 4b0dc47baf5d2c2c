#include "rs/minors.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace rs {

namespace {

template <class T>
Mat<T> submatrix(const Mat<T>& m, const MinorIndex& idx) {
    if (idx.rows.size() != idx.cols.size())
        throw domain_error("minor: row and column selections must have equal length");
    int k = static_cast<int>(idx.rows.size());
    Mat<T> s(k, k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            int r = idx.rows[i], c = idx.cols[j];
            if (r < 1 || r > m.rows || c < 1 || c > m.cols)
                throw domain_error("minor: index out of range");
            s(i, j) = m(r - 1, c - 1);
        }
    }
    return s;
}

} // namespace

std::vector<std::vector<int>> index_tuples(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> tuple(k);
    for (int i = 0; i < k; ++i) tuple[i] = i;
    while (true) {
        out.push_back(tuple);
        int i = k - 1;
        while (i >= 0 && tuple[i] == n - k + i) --i;
        if (i < 0) break;
        ++tuple[i];
        for (int j = i + 1; j < k; ++j) tuple[j] = tuple[j - 1] + 1;
    }
    return out;
}

bigint det_bareiss(Mat<bigint> m) {
    assert(m.rows == m.cols);
    int n = m.rows;
    if (n == 0) return 1;
    bigint prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                bigint num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = num / prev;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

bigrat det_rational(Mat<bigrat> m) {
    assert(m.rows == m.cols);
    int n = m.rows;
    bigrat det(1);
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (m(i, k) != 0) { p = i; break; }
        if (p < 0) return bigrat(0);
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            det = -det;
        }
        det *= m(k, k);
        bigrat inv = bigrat(1) / m(k, k);
        for (int i = k + 1; i < n; ++i) {
            bigrat f = m(i, k) * inv;
            if (f == 0) continue;
            for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

long double det_real(const Mat<double>& m) {
    assert(m.rows == m.cols);
    int n = m.rows;
    std::vector<long double> a(m.a.begin(), m.a.end());
    auto at = [&](int i, int j) -> long double& { return a[static_cast<size_t>(i) * n + j]; };
    long double det = 1.0L;
    for (int k = 0; k < n; ++k) {
        int p = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(at(i, k)) > std::abs(at(p, k))) p = i;
        if (at(p, k) == 0.0L) return 0.0L;
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
            det = -det;
        }
        det *= at(k, k);
        for (int i = k + 1; i < n; ++i) {
            long double f = at(i, k) / at(k, k);
            for (int j = k; j < n; ++j) at(i, j) -= f * at(k, j);
        }
    }
    return det;
}

Mat<bigint> adjugate(const Mat<bigint>& m) {
    assert(m.rows == m.cols);
    int n = m.rows;
    Mat<bigint> adj(n, n);
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Mat<bigint> s(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    s(rr, cc++) = m(r, c);
                }
                ++rr;
            }
            bigint cof = det_bareiss(s);
            if ((i + j) % 2 != 0) cof = -cof;
            adj(j, i) = cof;
        }
    }
    return adj;
}

bigint minor_exact(const Mat<bigint>& m, const MinorIndex& idx) {
    return det_bareiss(submatrix(m, idx));
}

bigrat minor_rational(const Mat<bigrat>& m, const MinorIndex& idx) {
    return det_rational(submatrix(m, idx));
}

double minor_real(const Mat<double>& m, const MinorIndex& idx) {
    if (idx.rows.size() != idx.cols.size())
        throw domain_error("minor: row and column selections must have equal length");
    Mat<double> s(static_cast<int>(idx.rows.size()), static_cast<int>(idx.cols.size()));
    for (size_t i = 0; i < idx.rows.size(); ++i)
        for (size_t j = 0; j < idx.cols.size(); ++j) {
            int r = idx.rows[i], c = idx.cols[j];
            if (r < 1 || r > m.rows || c < 1 || c > m.cols)
                throw domain_error("minor: index out of range");
            s(static_cast<int>(i), static_cast<int>(j)) = m(r - 1, c - 1);
        }
    return static_cast<double>(det_real(s));
}

std::vector<bigint> bottom_minors(const Mat<bigint>& m, int k) {
    if (k < 1 || k > m.rows || k > m.cols) throw domain_error("bottom_minors: bad block size");
    std::vector<bigint> out;
    for (const auto& cols : index_tuples(m.cols, k)) {
        Mat<bigint> s(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) s(i, j) = m(m.rows - k + i, cols[j]);
        out.push_back(det_bareiss(std::move(s)));
    }
    return out;
}

std::vector<bigrat> bottom_minors_rational(const Mat<bigrat>& m, int k) {
    if (k < 1 || k > m.rows || k > m.cols) throw domain_error("bottom_minors: bad block size");
    std::vector<bigrat> out;
    for (const auto& cols : index_tuples(m.cols, k)) {
        Mat<bigrat> s(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) s(i, j) = m(m.rows - k + i, cols[j]);
        out.push_back(det_rational(std::move(s)));
    }
    return out;
}

std::vector<double> bottom_minors_real(const Mat<double>& m, int k) {
    if (k < 1 || k > m.rows || k > m.cols) throw domain_error("bottom_minors: bad block size");
    std::vector<double> out;
    for (const auto& cols : index_tuples(m.cols, k)) {
        Mat<double> s(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) s(i, j) = m(m.rows - k + i, cols[j]);
        out.push_back(static_cast<double>(det_real(s)));
    }
    return out;
}

} // namespace rs
