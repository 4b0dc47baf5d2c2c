#pragma once

#include "rs/common.hpp"

#include <functional>

namespace rs {

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_floor = 0.0;  // stop once the error estimate is below this
    int max_intervals = 4000;
    int init_panels = 8;
    bool throw_on_failure = true;
};

// globally adaptive Gauss-Kronrod 7/15 on [a,b]
cplx integrate_gk(const std::function<cplx(double)>& f, double a, double b,
                  const QuadratureSpec& q, double* err_out = nullptr);
double integrate_gk_real(const std::function<double(double)>& f, double a, double b,
                         const QuadratureSpec& q, double* err_out = nullptr);

// tanh-sinh rule on [a,b], tolerant of endpoint singularities
cplx integrate_tanh_sinh(const std::function<cplx(double)>& f, double a, double b,
                         double rel_tol, double* err_out = nullptr);
double integrate_tanh_sinh_real(const std::function<double(double)>& f, double a, double b,
                                double rel_tol, double* err_out = nullptr);

// Limit of partial sums S_m = term(0) + .. + term(m) accelerated with the
// Wynn epsilon algorithm; suited to slowly decaying oscillatory tails.
cplx accelerate_sum(const std::function<cplx(int)>& term, int max_terms, double rel_tol,
                    double* err_out = nullptr);

} // namespace rs
