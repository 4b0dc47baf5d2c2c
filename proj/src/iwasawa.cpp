#include "rs/iwasawa.hpp"

#include <cmath>

namespace rs {

IwasawaCoords::IwasawaCoords(int k_, std::vector<double> x_, std::vector<double> y_)
    : k(k_), x(std::move(x_)), y(std::move(y_)) {
    if (k < 2) throw domain_error("IwasawaCoords: need k >= 2");
    if (static_cast<int>(x.size()) != k * (k - 1) / 2 || static_cast<int>(y.size()) != k - 1)
        throw domain_error("IwasawaCoords: wrong coordinate count");
    for (double v : y)
        if (!(v > 0.0)) throw domain_error("IwasawaCoords: y entries must be positive");
}

double IwasawaCoords::xat(int i, int j) const {
    // packed offset for row i: entries (i,i+1)..(i,k); row r starts after
    // (r-1) previous rows holding k-1, k-2, ... entries
    int r = i - 1, c = j - i - 1;
    int start = r * (2 * k - r - 1) / 2;
    return x[start + c];
}

double& IwasawaCoords::xat(int i, int j) {
    int r = i - 1, c = j - i - 1;
    int start = r * (2 * k - r - 1) / 2;
    return x[start + c];
}

double IwasawaCoords::diag(int i) const {
    double d = 1.0;
    for (int j = 1; j <= k - i; ++j) d *= y[j - 1];
    return d;
}

Mat<double> IwasawaCoords::matrix() const {
    Mat<double> m(k, k);
    for (int i = 1; i <= k; ++i) {
        double d = diag(i);
        m(i - 1, i - 1) = d;
        for (int j = i + 1; j <= k; ++j) m(i - 1, j - 1) = xat(i, j) * diag(j);
    }
    return m;
}

double IwasawaCoords::det() const {
    double d = 1.0;
    for (int i = 1; i <= k; ++i) d *= diag(i);
    return d;
}

IwasawaCoords iwasawa_decompose(const Mat<double>& g) {
    if (g.rows != g.cols || g.rows < 2) throw domain_error("iwasawa_decompose: need square k >= 2");
    int k = g.rows;

    // Gram matrix of rows
    Mat<double> G(k, k);
    double scale = 0.0;
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            long double s = 0.0L;
            for (int l = 0; l < k; ++l) s += static_cast<long double>(g(i, l)) * g(j, l);
            G(i, j) = G(j, i) = static_cast<double>(s);
            if (i == j) scale = std::max(scale, std::abs(G(i, i)));
        }
    if (scale == 0.0) throw domain_error("iwasawa_decompose: zero matrix");

    // G = x * diag(Delta) * x^T with unit upper-triangular x, eliminating from
    // the bottom-right corner upward
    std::vector<double> Delta(k, 0.0);
    Mat<double> X = Mat<double>::identity(k);
    for (int i = k - 1; i >= 0; --i) {
        for (int j = k - 1; j > i; --j) {
            long double s = G(i, j);
            for (int l = j + 1; l < k; ++l)
                s -= static_cast<long double>(X(i, l)) * X(j, l) * Delta[l];
            X(i, j) = static_cast<double>(s / Delta[j]);
        }
        long double s = G(i, i);
        for (int l = i + 1; l < k; ++l)
            s -= static_cast<long double>(X(i, l)) * X(i, l) * Delta[l];
        Delta[i] = static_cast<double>(s);
        if (!(Delta[i] > scale * 1e-26))
            throw domain_error("iwasawa_decompose: matrix is singular to working precision");
    }

    std::vector<double> xs;
    xs.reserve(k * (k - 1) / 2);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) xs.push_back(X(i, j));

    // d_i = sqrt(Delta_i / Delta_{k-1}) projectively, y_m = d_{k-m}/d_{k-m+1}
    std::vector<double> ys(k - 1);
    for (int m = 1; m <= k - 1; ++m)
        ys[m - 1] = std::sqrt(Delta[k - m - 1] / Delta[k - m]);
    return IwasawaCoords(k, std::move(xs), std::move(ys));
}

IwasawaCoords iwasawa_translate(const Mat<int64_t>& gamma, const IwasawaCoords& z) {
    if (gamma.rows != z.k || gamma.cols != z.k)
        throw domain_error("iwasawa_translate: dimension mismatch");
    return iwasawa_decompose(mat_int_to_double(gamma) * z.matrix());
}

double iwasawa_recompose_residual(const Mat<double>& g) {
    IwasawaCoords z = iwasawa_decompose(g);
    int k = g.rows;
    Mat<double> zm = z.matrix();

    // recover the scalar: g g^T and zm zm^T agree up to r^2
    auto gram = [&](const Mat<double>& m) {
        Mat<double> G(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                long double s = 0.0L;
                for (int l = 0; l < k; ++l) s += static_cast<long double>(m(i, l)) * m(j, l);
                G(i, j) = static_cast<double>(s);
            }
        return G;
    };
    Mat<double> G = gram(g), H = gram(zm);
    double r2 = G(k - 1, k - 1) / H(k - 1, k - 1);
    double scale = 0.0, resid = 0.0;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            scale = std::max(scale, std::abs(G(i, j)));
            resid = std::max(resid, std::abs(G(i, j) - r2 * H(i, j)));
        }
    return resid / scale;
}

} // namespace rs
