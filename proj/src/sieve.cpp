#include "rs/sieve.hpp"

#include <algorithm>
#include <cmath>

namespace rs {

std::vector<int64_t> primes_up_to(int64_t n) {
    std::vector<int64_t> out;
    if (n < 2) return out;
    std::vector<bool> comp(n + 1, false);
    for (int64_t i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (int64_t j = i * i; j <= n; j += i) comp[j] = true;
    }
    return out;
}

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_strong(int64_t n) {
    if (n < 2) return false;
    for (int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == static_cast<uint64_t>(n) - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == static_cast<uint64_t>(n) - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<int64_t> primes_in_window(int64_t n) {
    if (n < 2) throw domain_error("sieve: window must start at 2 or later");
    int64_t hi = 2 * n;
    int64_t root = static_cast<int64_t>(std::sqrt(static_cast<double>(hi))) + 2;
    std::vector<int64_t> base = primes_up_to(root);
    std::vector<bool> comp(hi - n + 1, false);
    for (int64_t p : base) {
        int64_t start = std::max(p * p, ((n + p - 1) / p) * p);
        for (int64_t j = start; j <= hi; j += p) comp[j - n] = true;
    }
    std::vector<int64_t> out;
    for (int64_t v = n; v <= hi; ++v) {
        if (v < 2 || comp[v - n]) continue;
        if (!is_prime_strong(v)) throw domain_error("sieve: sieve and primality test disagree");
        out.push_back(v);
    }
    return out;
}

cplx eta_sum(int64_t m, cplx s) {
    if (m < 1) throw domain_error("eta: need m >= 1");
    cplx total = 0.0;
    for (int64_t a = 1; a * a <= m; ++a) {
        if (m % a != 0) continue;
        int64_t b = m / a;
        total += std::exp(s * std::log(static_cast<double>(a) / static_cast<double>(b)));
        if (a != b)
            total += std::exp(s * std::log(static_cast<double>(b) / static_cast<double>(a)));
    }
    return total;
}

double eta_at_prime(int64_t p, int n, double t) {
    return 2.0 * std::cos(n * t * std::log(static_cast<double>(p)));
}

namespace {

double eta_floor(int n) {
    double n4 = std::pow(static_cast<double>(n), 4);
    return 1.0 / (2000.0 * 2000.0 * n4);
}

} // namespace

DensityReport good_prime_density(const CuspFormData& f, int64_t n_window) {
    std::vector<int64_t> ps = primes_in_window(n_window);
    DensityReport r;
    r.window_lo = n_window;
    r.window_hi = 2 * n_window;
    r.prime_count = static_cast<int64_t>(ps.size());
    for (int64_t p : ps) {
        double lam = std::abs(hecke_eigenvalue(f, p));
        if (lam > f.n + 1e-9) throw domain_error("sieve: eigenvalue exceeds the unitary bound");
        if (lam >= 0.01) ++r.hits;
    }
    r.scaled = static_cast<double>(r.hits) * std::log(static_cast<double>(n_window)) /
               static_cast<double>(n_window);
    r.threshold = 1.0 / (10.0 * f.n * f.n);
    r.pass = r.scaled >= r.threshold;
    return r;
}

DensityReport eta_lower_density(double t, int n, int64_t n_window) {
    if (static_cast<double>(n_window) < t * t)
        throw domain_error("sieve: window must start at or beyond t^2");
    std::vector<int64_t> ps = primes_in_window(n_window);
    DensityReport r;
    r.window_lo = n_window;
    r.window_hi = 2 * n_window;
    r.prime_count = static_cast<int64_t>(ps.size());
    double floor = eta_floor(n);
    for (int64_t p : ps)
        if (std::abs(eta_at_prime(p, n, t)) >= floor) ++r.hits;
    r.scaled = static_cast<double>(r.hits) / static_cast<double>(r.prime_count);
    r.threshold = 1.0 - 1.0 / (20.0 * n * n);
    r.pass = r.scaled >= r.threshold;
    return r;
}

DensityReport overlap_density(const CuspFormData& f, double t, int64_t n_window) {
    if (static_cast<double>(n_window) < t * t)
        throw domain_error("sieve: window must start at or beyond t^2");
    std::vector<int64_t> ps = primes_in_window(n_window);
    DensityReport r;
    r.window_lo = n_window;
    r.window_hi = 2 * n_window;
    r.prime_count = static_cast<int64_t>(ps.size());
    double floor = eta_floor(f.n);
    for (int64_t p : ps) {
        if (std::abs(hecke_eigenvalue(f, p)) < 0.01) continue;
        if (std::abs(eta_at_prime(p, f.n, t)) < floor) continue;
        ++r.hits;
    }
    r.scaled = static_cast<double>(r.hits) * std::log(static_cast<double>(n_window)) /
               static_cast<double>(n_window);
    r.threshold = 1.0 / (20.0 * f.n * f.n);
    r.pass = r.scaled >= r.threshold;
    return r;
}

bool eta_failures_cluster(double t, int n, int64_t n_window, double* worst_distance) {
    std::vector<int64_t> ps = primes_in_window(n_window);
    double floor = eta_floor(n);
    double allowance = 10.0 * std::sqrt(floor);
    double worst = 0.0;
    bool ok = true;
    for (int64_t p : ps) {
        if (std::abs(eta_at_prime(p, n, t)) >= floor) continue;
        double phase = 2.0 * n * t * std::log(static_cast<double>(p));
        double m = std::round((phase / PI - 1.0) / 2.0);
        double dist = std::abs(phase - (2.0 * m + 1.0) * PI);
        worst = std::max(worst, dist);
        if (dist >= allowance) ok = false;
    }
    if (worst_distance) *worst_distance = worst;
    return ok;
}

} // namespace rs
