#pragma once

#include "rs/common.hpp"
#include "rs/matrix.hpp"

namespace rs {

// Upper-triangular coordinates on GL(k)/(orthogonal * scalars): a unit upper
// triangular x-part and positive ratios y_1..y_{k-1}.  The diagonal it encodes
// is d_i = y_1 * ... * y_{k-i} for i < k and d_k = 1, so the last row stays
// unscaled and the overall matrix is taken projectively.
struct IwasawaCoords {
    int k = 0;
    std::vector<double> x; // packed strictly-upper entries, row-major
    std::vector<double> y; // y_1 .. y_{k-1}

    IwasawaCoords() = default;
    IwasawaCoords(int k_, std::vector<double> x_, std::vector<double> y_);

    // strictly upper entry x_{i,j}, 1-based, i < j
    double xat(int i, int j) const;
    double& xat(int i, int j);

    // d_i = product of y_1..y_{k-i}, 1-based row index
    double diag(int i) const;

    // the represented matrix x * diag(d_1,..,d_{k-1},1)
    Mat<double> matrix() const;

    // determinant of matrix(): product of all d_i
    double det() const;
};

// Decompose an invertible real matrix into coordinates, an orthogonal factor
// and a positive scalar: g = x * diag(d) * r * kappa with kappa orthogonal.
// Row Gram data is eliminated from the bottom row upward.  Throws
// domain_error when g is singular to working precision.
IwasawaCoords iwasawa_decompose(const Mat<double>& g);

// coordinates after left multiplication by an integer matrix
IwasawaCoords iwasawa_translate(const Mat<int64_t>& gamma, const IwasawaCoords& z);

// largest |g - x*y*r*kappa| entry achievable by the decomposition, used in tests
double iwasawa_recompose_residual(const Mat<double>& g);

} // namespace rs
