#pragma once

#include "rs/common.hpp"

#include <vector>

namespace rs {

// Spectral cutoff built from a gamma ratio and squashing factors pinned to
// the pair differences of the shifted exponents alpha (all purely imaginary).
// tilde(0) = 1 exactly, configured-order zeros sit at the pair differences
// rotated onto the real axis, and the closed-form inverse transform is a
// finite nonnegative combination of stretched exponentials.
struct PsiFunction {
    int n = 2;
    double r = 1.0;   // gamma ratio offset, positive
    int order = 4;    // squashing exponent per factor
    int l_coincide = 0;
    std::vector<cplx> alpha;
    std::vector<cplx> deltas; // ordered pair differences over unequal pairs
    std::vector<double> coeff; // expansion coefficients C_m
    std::vector<cplx> gexp;    // expansion exponents g_m

    cplx tilde(cplx w) const;

    // closed-form inverse transform
    double value(double y) const;

    // numerical contour inversion, the independent route
    double value_contour(double y) const;

    // guaranteed exponential decay rate of |tilde| along vertical lines
    double decay_rate() const;
};

PsiFunction make_psi(int n, const std::vector<cplx>& alpha, double r = 1.0, int order = 4);

// observed vanishing order at w0 from circle averages of log|tilde|
double psi_zero_order(const PsiFunction& psi, cplx w0);

// predicted vanishing order: configured order times the number of pair
// factors that hit -1 at w0
int psi_expected_zero_order(const PsiFunction& psi, cplx w0);

// least-squares slope of log|tilde(i v)| over [v_lo, v_hi]
double psi_decay_fit(const PsiFunction& psi, double v_lo, double v_hi, int samples);

// smoothed truncation weight: contour integral of x^w / (w (w + 1)),
// equal to 1 - 1/x for x >= 1 and 0 below
double mellin_cutoff(double x);

} // namespace rs
