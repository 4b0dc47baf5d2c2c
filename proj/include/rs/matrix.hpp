#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace rs {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

// small dense row-major matrix; sizes here never exceed a dozen rows
template <class T>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, T(0)) {}
    Mat(int r, int c, std::initializer_list<T> vals) : rows(r), cols(c), a(vals) {
        assert(static_cast<int>(a.size()) == r * c);
    }

    T& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const T& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    Mat transpose() const {
        Mat m(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Mat operator*(const Mat& o) const {
        assert(cols == o.rows);
        Mat m(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const T& v = (*this)(i, k);
                if (v == T(0)) continue;
                for (int j = 0; j < o.cols; ++j) m(i, j) += v * o(k, j);
            }
        return m;
    }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    // rows [r0,r1) and columns [c0,c1)
    Mat block(int r0, int r1, int c0, int c1) const {
        Mat m(r1 - r0, c1 - c0);
        for (int i = r0; i < r1; ++i)
            for (int j = c0; j < c1; ++j) m(i - r0, j - c0) = (*this)(i, j);
        return m;
    }
};

template <class T, class U>
Mat<T> mat_cast(const Mat<U>& m) {
    Mat<T> r(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = static_cast<T>(m.a[i]);
    return r;
}

inline Mat<double> mat_int_to_double(const Mat<int64_t>& m) { return mat_cast<double>(m); }

inline Mat<bigint> mat_int_to_big(const Mat<int64_t>& m) {
    Mat<bigint> r(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = m.a[i];
    return r;
}

} // namespace rs
