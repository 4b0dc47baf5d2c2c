#include "rs/spectral.hpp"

#include <cmath>

namespace rs {

Mat<int64_t> power_exponent_table(int n) {
    if (n < 2) throw domain_error("power_exponent_table: need n >= 2");
    Mat<int64_t> b(n - 1, n - 1);
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j)
            b(i - 1, j - 1) = (i + j <= n) ? static_cast<int64_t>(i) * j
                                           : static_cast<int64_t>(n - i) * (n - j);
    return b;
}

std::vector<cplx> exponent_row_sums(const SpectralParams& p) {
    if (static_cast<int>(p.nu.size()) != p.n - 1)
        throw domain_error("exponent_row_sums: need n-1 spectral parameters");
    Mat<int64_t> b = power_exponent_table(p.n);
    std::vector<cplx> B(p.n - 1, cplx(0.0));
    for (int i = 0; i < p.n - 1; ++i)
        for (int j = 0; j < p.n - 1; ++j) B[i] += static_cast<double>(b(i, j)) * p.nu[j];
    return B;
}

cplx i_nu_from_y(const std::vector<double>& y, const SpectralParams& p) {
    if (static_cast<int>(y.size()) != p.n - 1)
        throw domain_error("i_nu: need n-1 positive ratios");
    std::vector<cplx> B = exponent_row_sums(p);
    cplx log_val(0.0);
    for (int i = 0; i < p.n - 1; ++i) {
        if (!(y[i] > 0.0)) throw domain_error("i_nu: y entries must be positive");
        log_val += B[i] * std::log(y[i]);
    }
    return std::exp(log_val);
}

cplx i_nu(const IwasawaCoords& z, const SpectralParams& p) {
    if (z.k != p.n) throw domain_error("i_nu: dimension mismatch");
    return i_nu_from_y(z.y, p);
}

std::vector<cplx> langlands_params(const SpectralParams& p) {
    int n = p.n;
    std::vector<cplx> B = exponent_row_sums(p);
    auto Bat = [&](int i) { return B[i - 1]; }; // 1-based
    std::vector<cplx> alpha(n);
    alpha[0] = Bat(n - 1) + 0.5 * (1.0 - n);
    for (int i = 2; i <= n - 1; ++i)
        alpha[i - 1] = Bat(n - i) - Bat(n - i + 1) + 0.5 * (2.0 * i - n - 1.0);
    alpha[n - 1] = -Bat(1) + 0.5 * (n - 1.0);
    return alpha;
}

SpectralParams langlands_inverse(int n, const std::vector<cplx>& alpha) {
    if (static_cast<int>(alpha.size()) != n)
        throw domain_error("langlands_inverse: need n shifted exponents");
    // rebuild the row sums B_{n-1}, B_{n-2}, .., B_1 from the telescoping
    std::vector<cplx> B(n - 1);
    auto Bset = [&](int i, cplx v) { B[i - 1] = v; };
    auto Bat = [&](int i) { return B[i - 1]; };
    Bset(n - 1, alpha[0] - 0.5 * (1.0 - n));
    for (int i = 2; i <= n - 1; ++i)
        Bset(n - i, alpha[i - 1] + Bat(n - i + 1) - 0.5 * (2.0 * i - n - 1.0));

    // solve the (n-1)x(n-1) system b * nu = B with real Gaussian elimination
    Mat<int64_t> bt = power_exponent_table(n);
    int m = n - 1;
    std::vector<std::vector<cplx>> aug(m, std::vector<cplx>(m + 1));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) aug[i][j] = cplx(static_cast<double>(bt(i, j)));
        aug[i][m] = Bat(i + 1);
    }
    for (int c = 0; c < m; ++c) {
        int p = c;
        for (int r = c + 1; r < m; ++r)
            if (std::abs(aug[r][c]) > std::abs(aug[p][c])) p = r;
        std::swap(aug[c], aug[p]);
        for (int r = 0; r < m; ++r) {
            if (r == c) continue;
            cplx f = aug[r][c] / aug[c][c];
            for (int j = c; j <= m; ++j) aug[r][j] -= f * aug[c][j];
        }
    }
    SpectralParams out;
    out.n = n;
    out.nu.resize(m);
    for (int i = 0; i < m; ++i) out.nu[i] = aug[i][m] / aug[i][i];
    return out;
}

int64_t volume_exponent(int n, int k) {
    if (k < 1 || k > n - 1) throw domain_error("volume_exponent: need 1 <= k <= n-1");
    return -static_cast<int64_t>(k) * (n - k) - 1;
}

} // namespace rs
