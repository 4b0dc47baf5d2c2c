#pragma once

#include "rs/common.hpp"
#include "rs/matrix.hpp"

#include <cstdint>
#include <vector>

namespace rs {

// 1-based row/column selectors, strictly increasing
struct MinorIndex {
    std::vector<int> rows, cols;
};

// exact integer determinant, fraction-free elimination
bigint det_bareiss(Mat<bigint> m);

// exact rational determinant
bigrat det_rational(Mat<bigrat> m);

// floating determinant accumulated in long double
long double det_real(const Mat<double>& m);

// exact adjugate, so m * adjugate(m) = det(m) * I
Mat<bigint> adjugate(const Mat<bigint>& m);

// determinant of the submatrix selected by idx (1-based indices)
bigint minor_exact(const Mat<bigint>& m, const MinorIndex& idx);
double minor_real(const Mat<double>& m, const MinorIndex& idx);
bigrat minor_rational(const Mat<bigrat>& m, const MinorIndex& idx);

// all k-by-k minors of the bottom k rows, column subsets in lexicographic order
std::vector<bigint> bottom_minors(const Mat<bigint>& m, int k);
std::vector<double> bottom_minors_real(const Mat<double>& m, int k);
std::vector<bigrat> bottom_minors_rational(const Mat<bigrat>& m, int k);

// strictly increasing index tuples of length k from {0,..,n-1}, lexicographic
std::vector<std::vector<int>> index_tuples(int n, int k);

} // namespace rs
