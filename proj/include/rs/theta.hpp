#pragma once

#include "rs/common.hpp"
#include "rs/iwasawa.hpp"
#include "rs/matrix.hpp"

#include <cstdint>
#include <vector>

namespace rs {

// Lattice data for the Gaussian sum attached to the unimodular rescaling of z.
// qvals holds the nonzero values of the quadratic form a -> |a^T ztilde|^2 up
// to qmax, sorted ascending, one entry per lattice point.
struct ThetaContext {
    int dim = 0;
    std::vector<double> qvals;
    double qmin = 0.0;
    double qmax = 0.0;
};

ThetaContext make_theta_context(const IwasawaCoords& z, double qmax = 24.0,
                                int64_t point_cap = 6000000);

// coordinates of the reversal conjugate of the inverse transpose
IwasawaCoords theta_dual_coords(const IwasawaCoords& z);

// theta(u) including the zero vector's 1; reliable for u >= 0.75 at default qmax
double theta_value(const ThetaContext& ctx, double u);

// crude estimate of the enumeration tail dropped from theta(u) - 1
double theta_tail_bound(const ThetaContext& ctx, double u);

// integral over [1, infinity) of (theta(u) - 1) u^w du/u
cplx theta_integral(const ThetaContext& ctx, cplx w);

} // namespace rs
