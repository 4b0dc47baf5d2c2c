#include "rs/eisenstein.hpp"

#include "rs/gammafn.hpp"
#include "rs/theta.hpp"
#include "rs/zetafn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rs {

namespace {

cplx eisenstein_from_contexts(const ThetaContext& ctx, const ThetaContext& dual_ctx, cplx s,
                              int n) {
    if (std::abs(s) < 1e-12 || std::abs(s - 1.0) < 1e-12)
        throw domain_error("eisenstein: s is at a pole");
    cplx upper = theta_integral(ctx, double(n) * s);
    cplx lower = theta_integral(dual_ctx, double(n) * (1.0 - s));
    return upper + lower - (1.0 / n) * (1.0 / (1.0 - s) + 1.0 / s);
}

} // namespace

cplx eisenstein_completed(const IwasawaCoords& z, cplx s) {
    if (z.k % 2 != 0) throw domain_error("eisenstein: need even dimension");
    int n = z.k / 2;
    ThetaContext ctx = make_theta_context(z);
    ThetaContext dual_ctx = make_theta_context(theta_dual_coords(z));
    return eisenstein_from_contexts(ctx, dual_ctx, s, n);
}

double eisenstein_fe_residual(const IwasawaCoords& z, cplx s) {
    if (z.k % 2 != 0) throw domain_error("eisenstein: need even dimension");
    int n = z.k / 2;
    IwasawaCoords zd = theta_dual_coords(z);
    ThetaContext ctx = make_theta_context(z);
    ThetaContext dual_ctx = make_theta_context(zd);
    ThetaContext dual_dual_ctx = make_theta_context(theta_dual_coords(zd));
    cplx left = eisenstein_from_contexts(ctx, dual_ctx, s, n);
    cplx right = eisenstein_from_contexts(dual_ctx, dual_dual_ctx, 1.0 - s, n);
    return std::abs(left - right);
}

cplx eisenstein_coset_sum(const IwasawaCoords& z, cplx s, int bound) {
    if (z.k % 2 != 0) throw domain_error("eisenstein: need even dimension");
    if (bound < 1) throw domain_error("eisenstein: need bound >= 1");
    int k = z.k, n = k / 2;
    Mat<double> m = z.matrix();
    double scale = std::pow(z.det(), -1.0 / k);
    for (auto& v : m.a) v *= scale;

    cplx w = double(n) * s;
    int64_t side = 2 * static_cast<int64_t>(bound) + 1;
    int64_t count = 1;
    for (int i = 0; i < k; ++i) count *= side;

    cplx sum = 0.0;
    std::vector<int64_t> a(k);
    for (int64_t idx = 0; idx < count; ++idx) {
        int64_t rem = idx;
        for (int i = 0; i < k; ++i) {
            a[i] = rem % side - bound;
            rem /= side;
        }
        int64_t g = 0;
        for (int64_t v : a) g = std::gcd(g, std::abs(v));
        if (g != 1) continue;
        long double qa = 0.0L;
        for (int j = 0; j < k; ++j) {
            long double row = 0.0L;
            for (int i = 0; i < k; ++i) row += static_cast<long double>(a[i]) * m(i, j);
            qa += row * row;
        }
        sum += std::exp(-w * std::log(static_cast<double>(qa)));
    }
    cplx factor = std::exp(-w * LOG_PI + log_gamma(w)) * zeta(2.0 * w);
    return factor * sum;
}

bigrat dual_basis_y_exponent(int two_n, int k, int j) {
    if (two_n < 2 || two_n % 2 != 0) throw domain_error("need even dimension >= 2");
    if (k < 1 || k > two_n || j < 1 || j >= two_n) throw domain_error("index out of range");
    bigrat val(j <= two_n - k ? 1 : 0);
    val -= bigrat(two_n - j, two_n);
    return val;
}

std::vector<bigrat> majorant_lhs_exponents(int two_n, int k, int variant) {
    if (variant != 0 && variant != 1) throw domain_error("variant must be 0 or 1");
    bigrat scale(variant == 0 ? two_n / 2 : k - 1);
    std::vector<bigrat> e;
    e.reserve(two_n - 1);
    for (int j = 1; j < two_n; ++j) e.push_back(scale * dual_basis_y_exponent(two_n, k, j));
    return e;
}

std::vector<bigrat> majorant_rhs_exponents(int two_n, int k, int variant) {
    if (two_n < 2 || two_n % 2 != 0) throw domain_error("need even dimension >= 2");
    if (k < 1 || k > two_n) throw domain_error("index out of range");
    if (variant != 0 && variant != 1) throw domain_error("variant must be 0 or 1");
    std::vector<bigrat> e;
    e.reserve(two_n - 1);
    for (int j = 1; j < two_n; ++j) {
        if (variant == 0)
            e.push_back(j <= two_n - k ? bigrat(j, 2) : bigrat(two_n - j, 2));
        else
            e.push_back(j <= two_n - k ? bigrat(int64_t(j) * (k - 1), two_n)
                                       : bigrat(int64_t(two_n - j) * (two_n - k + 1), two_n));
    }
    return e;
}

GrowthCheck eisenstein_growth_check(const IwasawaCoords& z, double w) {
    if (z.k % 2 != 0) throw domain_error("eisenstein: need even dimension");
    if (w == 0.0) throw domain_error("eisenstein: growth check needs w != 0");
    int two_n = z.k, n = two_n / 2;
    cplx value = eisenstein_completed(z, cplx(0.5, w));

    double log_prod_y = 0.0;
    for (double v : z.y) log_prod_y += std::log(v);
    double log_factor = std::max(log_prod_y, 1.0);

    double terms = 0.0;
    for (int k = 1; k <= two_n; ++k)
        for (int variant = 0; variant <= 1; ++variant) {
            std::vector<bigrat> e = majorant_rhs_exponents(two_n, k, variant);
            double t = 0.0;
            for (int j = 1; j < two_n; ++j)
                t += static_cast<double>(e[j - 1]) * std::log(z.y[j - 1]);
            terms += std::exp(t);
        }
    double lead = std::exp(0.5 * PI * n * std::abs(w)) / std::pow(std::abs(w), 0.5 * (n - 1));

    GrowthCheck out;
    out.value = std::abs(value);
    out.majorant = lead * terms * log_factor;
    out.pass = out.value <= out.majorant;
    return out;
}

} // namespace rs
