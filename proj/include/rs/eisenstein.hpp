#pragma once

#include "rs/common.hpp"
#include "rs/iwasawa.hpp"
#include "rs/matrix.hpp"

#include <vector>

namespace rs {

// Completed degenerate Eisenstein series on GL(2n) built from the Gaussian
// lattice sum.  z must have even dimension; holomorphic in s away from the
// simple poles at s = 0 and s = 1.
cplx eisenstein_completed(const IwasawaCoords& z, cplx s);

// residual |E(z, s) - E(dual z, 1 - s)| of the reflection identity
double eisenstein_fe_residual(const IwasawaCoords& z, cplx s);

// independent route: zeta-completed sum over primitive integer rows with sup
// norm at most `bound`, both signs included; accurate for Re(s) comfortably
// inside the convergent range
cplx eisenstein_coset_sum(const IwasawaCoords& z, cplx s, int bound);

// growth bound on the critical line s = 1/2 + i*w against the explicit
// majorant; the logarithm factor is floored at 1 so the bound stays usable
// at the corner y = (1,..,1)
struct GrowthCheck {
    double value = 0.0;
    double majorant = 0.0;
    bool pass = false;
};
GrowthCheck eisenstein_growth_check(const IwasawaCoords& z, double w);

// exponent of y_j when the k-th normalized diagonal entry of the rescaled
// lattice basis is written in the y coordinates (1 <= k <= 2n, 1 <= j < 2n)
bigrat dual_basis_y_exponent(int two_n, int k, int j);

// y-exponent vectors (index j = 1..2n-1) for the two majorant term families:
// the derived left side and the closed-form right side.  variant 0 scales the
// diagonal entry by n, variant 1 by k-1.
std::vector<bigrat> majorant_lhs_exponents(int two_n, int k, int variant);
std::vector<bigrat> majorant_rhs_exponents(int two_n, int k, int variant);

} // namespace rs
