#pragma once

#include "rs/common.hpp"
#include "rs/formdata.hpp"

#include <cstdint>

namespace rs {

// archimedean factor of the square L-series of f
cplx log_gamma_factor_rs(const CuspFormData& f, cplx s);
cplx gamma_factor_rs(const CuspFormData& f, cplx s);

// machine-precision routes, available for angle-generated forms: the square
// L-series is a finite product of shifted zetas and its completion a product
// of shifted completed zetas
cplx l_rs_exact(const CuspFormData& f, cplx s);
cplx lambda_completed_exact(const CuspFormData& f, cplx s);

// plain Dirichlet sum over m <= mmax, for Re s > 1
cplx l_rs_dirichlet(const CuspFormData& f, cplx s, int64_t mmax);

struct AfeOptions {
    double x = 1.0;            // balance point between the two sums
    double slack = 6.0;        // sums run to e^slack past the conductor scale
    int64_t max_terms = 100000000;
    double grid_step = 0.005;  // spacing of the weight interpolation grid in log y
    double contour_sigma = 3.0; // upper bound; lowered automatically for heavy conductors
    double contour_step = 0.025;
};

// approximate-functional-equation value of the square L-series at s0
cplx afe_value(const CuspFormData& f, cplx s0, const AfeOptions& opt = {});

// scattering ratio of the parabolic Eisenstein series attached to f
cplx c_ratio(const CuspFormData& f, cplx s);     // completed-zeta route
cplx c_ratio_afe(const CuspFormData& f, cplx s); // AFE cross-route
cplx c_ratio_derivative(const CuspFormData& f, cplx s, double h = 1e-4);

// truncated inner product of two Eisenstein series at parameters r, s and
// truncation height a > 1
cplx maass_selberg_truncated(const CuspFormData& f, cplx r, cplx s, double a);

// its diagonal limit r -> s at s = 1/2 + it: real and nonnegative
cplx maass_selberg_limit(const CuspFormData& f, double t, double a);

// observed order of the one-sided difference T(s + eps) - T(limit); the
// identity predicts slope 1 in eps
double maass_selberg_richardson_slope(const CuspFormData& f, double t, double a,
                                      double eps0 = 1e-2);

// width of the standard zero-free window at height t
double zero_free_region_width(double t, int n, double lower_const, double deriv_const);

// first coefficient of the sieve-twisted form at prime p and height t
cplx fourier_coeff_a1(const CuspFormData& f, int64_t p, double t, cplx l_value,
                      double c_n = 1.0);

} // namespace rs
