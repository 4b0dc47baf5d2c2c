#pragma once

#include "rs/common.hpp"

namespace rs {

// Riemann zeta via Euler-Maclaurin; throws within 1e-12 of the pole at s = 1
cplx zeta(cplx s);

// completed zeta pi^(-s/2) Gamma(s/2) zeta(s); simple poles at s = 0 and 1
cplx xi_completed(cplx s);
cplx log_xi(cplx s);

} // namespace rs
