#pragma once

#include "rs/common.hpp"

namespace rs {

// log of the gamma function, analytic for Re z > 0 and continued elsewhere by
// reflection; individual values may differ from the principal branch by
// multiples of 2*pi*i, which exponentiation removes
cplx log_gamma(cplx z);

// gamma function; throws domain_error within 1e-12 of a nonpositive integer
cplx gamma_complex(cplx z);

// log(sin(pi z)) computed without overflow for large |Im z|
cplx log_sin_pi(cplx z);

// digamma function via differentiated Lanczos series
cplx digamma(cplx z);

} // namespace rs
