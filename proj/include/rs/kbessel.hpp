#pragma once

#include "rs/common.hpp"
#include "rs/quadrature.hpp"

namespace rs {

// Bessel K of complex order at argument 2*pi*y, through the symmetric
// integral (1/2) int_0^inf exp(-pi y (t + 1/t)) t^nu dt/t with t = e^u.
// Even in nu by construction.  Reliable for y > 0 and |Im nu| up to ~25;
// larger |Im nu| loses digits to cancellation and raises tolerance_error.
cplx k_bessel(cplx nu, double y, const QuadratureSpec& q = {});

// same function of the plain argument x = 2*pi*y
cplx k_bessel_arg(cplx nu, double x, const QuadratureSpec& q = {});

} // namespace rs
