#pragma once

#include "rs/common.hpp"
#include "rs/formdata.hpp"

#include <cstdint>
#include <vector>

namespace rs {

std::vector<int64_t> primes_up_to(int64_t n);

// primes in [n, 2n] by segmented sieve, each confirmed by a deterministic
// strong pseudoprime test
std::vector<int64_t> primes_in_window(int64_t n);

bool is_prime_strong(int64_t n);

// divisor-pair sum: sum over ab = m of (a/b)^s
cplx eta_sum(int64_t m, cplx s);

// closed form of the divisor-pair sum at a prime for s = i*n*t
double eta_at_prime(int64_t p, int n, double t);

struct DensityReport {
    int64_t window_lo = 0;
    int64_t window_hi = 0;
    int64_t prime_count = 0;
    int64_t hits = 0;
    double scaled = 0.0;    // hits normalized as described per check
    double threshold = 0.0;
    bool pass = false;
};

// primes p in [N, 2N] whose Hecke eigenvalue is bounded away from zero;
// scaled value is hits * log(N) / N against 1/(10 n^2)
DensityReport good_prime_density(const CuspFormData& f, int64_t n_window);

// primes whose divisor-pair sum at i*n*t clears the floor 1/(2000^2 n^4);
// scaled value is the plain fraction against 1 - 1/(20 n^2).  Requires the
// window to start at or beyond t^2.
DensityReport eta_lower_density(double t, int n, int64_t n_window);

// primes passing both checks at once; scaled as hits * log(N) / N
DensityReport overlap_density(const CuspFormData& f, double t, int64_t n_window);

// every prime failing the divisor-pair floor must have 2 n t log p within
// 10 sqrt(floor) of an odd multiple of pi
bool eta_failures_cluster(double t, int n, int64_t n_window, double* worst_distance = nullptr);

} // namespace rs
