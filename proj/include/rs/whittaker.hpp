#pragma once

#include "rs/common.hpp"
#include "rs/quadrature.hpp"
#include "rs/spectral.hpp"

namespace rs {

// shift applied to the k-th parameter block: sum_{i=0}^{j-1} (n nu_{n-k+i} - 1)/2
cplx whittaker_shift(const SpectralParams& p, int j, int k);

// mu_j = sum over k = j..n-1 of the shifts
cplx whittaker_mu(const SpectralParams& p, int j);

// product over 1 <= j <= k <= n-1 of Gamma(1/2 + shift) / pi^(1/2 + shift)
cplx whittaker_completion(const SpectralParams& p);

struct WhittakerEval {
    cplx completed; // W*
    cplx value;     // W = W* / completion
};

// degenerating Fourier coefficient profile on GL(2) or GL(3), reduced to
// K-Bessel integrals; y holds n-1 positive ratios
WhittakerEval whittaker_stade(const SpectralParams& p, const std::vector<double>& y,
                              const QuadratureSpec& q = {});

// the defining unipotent integral evaluated by brute quadrature (oracle
// route); requires Re nu_i large enough for absolute convergence
cplx whittaker_direct(const SpectralParams& p, const std::vector<double>& y,
                      const QuadratureSpec& q = {});

// closed form of the profile integrand entering the GL(3) direct route,
// exposed so tests can check it against iwasawa_decompose
double whittaker_gl3_integrand(const SpectralParams& p, const std::vector<double>& y, double u12,
                               double u13, double u23);

// squared-profile Mellin transform on GL(m) in terms of gamma factors
cplx whittaker_mellin_norm(int m, const std::vector<cplx>& beta, cplx w);

// order of the pole of whittaker_mellin_norm at w = 0 implied by coincidences
// among the parameters
int whittaker_mellin_norm_pole_order(const std::vector<cplx>& beta);

struct StirlingPairResult {
    double exact;
    double asymptotic;
    double ratio;
};

// ell-th x-derivative of Gamma((x+iy)/2) Gamma((x-iy)/2) against its large-|y|
// asymptotic main term
StirlingPairResult stirling_pair(double x, double y, int ell);

} // namespace rs
