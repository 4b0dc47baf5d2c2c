#pragma once

#include "rs/common.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rs {

// Self-dual test form on GL(n) generated by unitary angles: the Satake vector
// at p is (p^{i theta_1}, .., p^{i theta_n}) and the attached square L-series
// factors through completed zetas, which pins every downstream quantity to
// machine precision.  Explicit satake or hecke tables override the generated
// values when present (forms loaded from JSON may carry either).
struct CuspFormData {
    int n = 1;
    std::vector<cplx> nu;                        // spectral parameters, size n-1
    std::vector<double> theta;                   // angle generators, sum zero
    std::map<int64_t, std::vector<cplx>> satake; // optional explicit table
    std::vector<double> hecke;                   // optional lambda(1), lambda(2), ..
    double petersson_norm = 1.0;
};

// angles recentred to sum zero; nu filled in from the shifted exponents
CuspFormData make_isobaric_form(int n, std::vector<double> theta);
CuspFormData zeta_form(); // n = 1, theta = {0}

std::vector<cplx> satake_params(const CuspFormData& f, int64_t p);
cplx hecke_eigenvalue(const CuspFormData& f, int64_t p); // sum of satake entries

// Square-coefficient machinery: values at p^1..p^kmax via the Newton
// recursion from the pair power sums, then a multiplicative fill over [1, mmax]
// driven by a least-prime-factor sieve.
std::vector<double> rs_prime_powers(const CuspFormData& f, int64_t p, int kmax);
std::vector<double> rs_coefficients(const CuspFormData& f, int64_t mmax);

// archimedean data: shifted exponents of f, and the n^2 pair shifts of the square
std::vector<cplx> form_alpha(const CuspFormData& f);
std::vector<cplx> rs_gamma_shifts(const CuspFormData& f);

CuspFormData form_from_json(const std::string& text);
std::string form_to_json(const CuspFormData& f);

} // namespace rs
