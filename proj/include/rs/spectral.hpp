#pragma once

#include "rs/common.hpp"
#include "rs/iwasawa.hpp"

namespace rs {

// exponent table: b(i,j) = i*j when i+j <= n, (n-i)(n-j) when i+j >= n,
// for 1 <= i,j <= n-1 (the two branches agree on i+j = n)
Mat<int64_t> power_exponent_table(int n);

// spectral parameters nu_1..nu_{n-1} for GL(n)
struct SpectralParams {
    int n = 0;
    std::vector<cplx> nu;
};

// row sums B_i = sum_j b(i,j) nu_j
std::vector<cplx> exponent_row_sums(const SpectralParams& p);

// the power function: product over i of y_i^{B_i}
cplx i_nu(const IwasawaCoords& z, const SpectralParams& p);
cplx i_nu_from_y(const std::vector<double>& y, const SpectralParams& p);

// shifted exponents alpha_1..alpha_n with alpha_1+...+alpha_n = 0
std::vector<cplx> langlands_params(const SpectralParams& p);

// recover nu from the shifted exponents (inverse of langlands_params)
SpectralParams langlands_inverse(int n, const std::vector<cplx>& alpha);

// exponent -k(n-k)-1 of y_k in the invariant volume element on GL(n)
int64_t volume_exponent(int n, int k);

} // namespace rs
