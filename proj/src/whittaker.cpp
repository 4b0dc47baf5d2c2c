#include "rs/whittaker.hpp"

#include "rs/gammafn.hpp"
#include "rs/kbessel.hpp"
#include "rs/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace rs {

cplx whittaker_shift(const SpectralParams& p, int j, int k) {
    int n = p.n;
    if (j < 1 || k < j || k > n - 1) throw domain_error("whittaker_shift: need 1 <= j <= k <= n-1");
    cplx s(0.0);
    for (int i = 0; i <= j - 1; ++i) {
        int idx = n - k + i; // parameter subscript, 1-based
        s += 0.5 * (static_cast<double>(n) * p.nu[idx - 1] - 1.0);
    }
    return s;
}

cplx whittaker_mu(const SpectralParams& p, int j) {
    cplx m(0.0);
    for (int k = j; k <= p.n - 1; ++k) m += whittaker_shift(p, j, k);
    return m;
}

cplx whittaker_completion(const SpectralParams& p) {
    cplx log_c(0.0);
    for (int j = 1; j <= p.n - 1; ++j)
        for (int k = j; k <= p.n - 1; ++k) {
            cplx half_shift = 0.5 + whittaker_shift(p, j, k);
            log_c += log_gamma(half_shift) - half_shift * LOG_PI;
        }
    return std::exp(log_c);
}

namespace {

WhittakerEval stade_gl2(const SpectralParams& p, const std::vector<double>& y,
                        const QuadratureSpec& q) {
    double y1 = y[0];
    cplx mu = whittaker_mu(p, 1); // nu_1 - 1/2
    cplx wstar = 2.0 * std::sqrt(y1) * k_bessel(mu, y1, q);
    return {wstar, wstar / whittaker_completion(p)};
}

WhittakerEval stade_gl3(const SpectralParams& p, const std::vector<double>& y,
                        const QuadratureSpec& q) {
    double y1 = y[0], y2 = y[1];
    cplx nu1 = p.nu[0], nu2 = p.nu[1];
    cplx mu = whittaker_mu(p, 1); // equals whittaker_mu(p, 2) in rank three
    cplx s12 = whittaker_shift(p, 1, 2);

    QuadratureSpec kq = q;
    kq.rel_tol = std::max(q.rel_tol * 0.1, 1e-12);

    // integrand over v = log u
    auto f = [&](double v) -> cplx {
        double u = std::exp(v);
        double a1 = 1.0 + u;       // pairs with y1
        double b2 = 1.0 + 1.0 / u; // pairs with y2
        cplx pow_part = 0.5 * mu * (std::log(a1) - std::log(b2)) - s12 * v;
        cplx k1 = k_bessel(mu, y1 * std::sqrt(a1), kq);
        cplx k2 = k_bessel(mu, y2 * std::sqrt(b2), kq);
        return std::exp(pow_part) * k1 * k2;
    };

    // the K factors decay like exp(-2 pi y1 e^{v/2}) rightward and
    // exp(-2 pi y2 e^{-v/2}) leftward
    double sig = std::abs(mu.real()) + std::abs(s12.real()) + 1.0;
    double vr = std::max(2.0 * std::log((50.0 + 6.0 * sig) / (TWO_PI * y1)), 2.0);
    double vl = std::min(-2.0 * std::log((50.0 + 6.0 * sig) / (TWO_PI * y2)), -2.0);

    QuadratureSpec spec = q;
    spec.init_panels = std::max(16, static_cast<int>((vr - vl) * 1.5));
    double err = 0.0;
    cplx integral = integrate_gk(f, vl, vr, spec, &err);

    cplx expo = 0.5 * ((2.0 + nu2 - nu1) * std::log(y1) + (2.0 + nu1 - nu2) * std::log(y2));
    cplx wstar = 4.0 * std::exp(expo) * integral;
    return {wstar, wstar / whittaker_completion(p)};
}

// integral over the real line of f against e^{-2 pi i x}: head panel around
// the origin plus two half-period tail sums, each accelerated
cplx oscillatory_line(const std::function<cplx(double)>& f, const QuadratureSpec& seg,
                      int max_segs, double tol, bool right_half_only = false) {
    const double quarter = 0.25, halfp = 0.5;
    cplx head = integrate_gk(f, right_half_only ? 0.0 : -quarter, quarter, seg);
    double err = 0.0;
    cplx right = accelerate_sum(
        [&](int k) -> cplx {
            double a = quarter + halfp * k;
            return integrate_gk(f, a, a + halfp, seg);
        },
        max_segs, tol, &err);
    if (right_half_only) return head + right;
    cplx left = accelerate_sum(
        [&](int k) -> cplx {
            double b = -quarter - halfp * k;
            return integrate_gk(f, b - halfp, b, seg);
        },
        max_segs, tol, &err);
    return head + right + left;
}

// direct unipotent integral on GL(2): cosine transform of (y/(y^2+u^2))^nu
cplx direct_gl2(const SpectralParams& p, const std::vector<double>& y, const QuadratureSpec& q) {
    cplx nu = p.nu[0];
    if (nu.real() <= 0.55)
        throw domain_error("whittaker_direct: need Re nu > 0.55 on GL(2) for the oracle route");
    double yy = y[0];
    QuadratureSpec seg = q;
    seg.rel_tol = std::max(q.rel_tol * 0.1, 1e-13);
    seg.init_panels = 4;
    auto f = [&](double u) -> cplx {
        return std::exp(nu * (std::log(yy) - std::log(yy * yy + u * u))) *
               std::exp(cplx(0.0, -TWO_PI * u));
    };
    return oscillatory_line(f, seg, 160, std::max(q.rel_tol, 1e-11));
}

} // namespace

double whittaker_gl3_integrand(const SpectralParams& p, const std::vector<double>& y, double u12,
                               double u13, double u23) {
    double d1 = y[0] * y[1], d2 = y[0];
    double det = d1 * d2;
    double xi1 = d1 * d1 + u12 * u12 * d2 * d2 + u13 * u13;
    double c = u13 - u12 * u23;
    double xi2 = d2 * d2 * c * c + u23 * u23 * d1 * d1 + d1 * d1 * d2 * d2;
    double B1 = (p.nu[0] + 2.0 * p.nu[1]).real();
    double B2 = (2.0 * p.nu[0] + p.nu[1]).real();
    // ratios of the reflected sheared frame: y1 = sqrt(xi2)/xi1,
    // y2 = det sqrt(xi1)/xi2
    double ly1 = 0.5 * std::log(xi2) - std::log(xi1);
    double ly2 = std::log(det) + 0.5 * std::log(xi1) - std::log(xi2);
    return std::exp(B1 * ly1 + B2 * ly2);
}

namespace {

// half-line cosine transform for even integrands: head panel up to the first
// zero of the cosine, then half-period segments fed to the epsilon algorithm
double cosine_half_line(const std::function<double(double)>& f, const QuadratureSpec& seg,
                        int max_segs, double tol) {
    auto fc = [&](double u) { return f(u) * std::cos(TWO_PI * u); };
    double head = integrate_gk_real(fc, 0.0, 0.25, seg);
    double err = 0.0;
    cplx tail = accelerate_sum(
        [&](int k) -> cplx {
            double a = 0.25 + 0.5 * k;
            return cplx(integrate_gk_real(fc, a, a + 0.5, seg), 0.0);
        },
        max_segs, tol, &err);
    return head + tail.real();
}

cplx direct_gl3(const SpectralParams& p, const std::vector<double>& y, const QuadratureSpec& q) {
    if (p.nu[0].imag() != 0.0 || p.nu[1].imag() != 0.0)
        throw domain_error("whittaker_direct: GL(3) oracle route supports real parameters");
    if (std::min(p.nu[0].real(), p.nu[1].real()) <= 0.36)
        throw domain_error("whittaker_direct: need Re nu > 0.36 on GL(3) for the oracle route");
    (void)q;

    // innermost: u13 over the real line, non-oscillatory.  The profile has one
    // peak near u13 = 0 and one near u13 = u12 u23, so split there and map
    // each piece so the node clustering lands on the peaks.  The final value
    // sits far below the integrand scale and every layer has to run near
    // machine accuracy for the cancellation to come out clean.
    auto phi = [&](double u12, double u23) -> double {
        auto base = [&](double u13) { return whittaker_gl3_integrand(p, y, u12, u13, u23); };
        double peak = u12 * u23;
        double e = 0.0;
        double left = integrate_tanh_sinh_real(
            [&](double th) {
                double c = std::cos(th);
                return base(-std::sin(th) / c) / (c * c);
            },
            0.0, 0.5 * PI, 1e-12, &e);
        double mid = peak > 0.0 ? integrate_tanh_sinh_real(base, 0.0, peak, 1e-12, &e) : 0.0;
        double right = integrate_tanh_sinh_real(
            [&](double th) {
                double c = std::cos(th);
                return base(peak + std::sin(th) / c) / (c * c);
            },
            0.0, 0.5 * PI, 1e-12, &e);
        return left + mid + right;
    };

    QuadratureSpec seg;
    seg.rel_tol = 1e-12;
    seg.init_panels = 2;
    seg.max_intervals = 24;
    seg.throw_on_failure = false;

    // the integrand is even in u12 and in u23 separately, so both oscillatory
    // layers reduce to half-line cosine transforms
    auto middle = [&](double u23) -> double {
        return cosine_half_line([&](double u12) { return phi(u12, u23); }, seg, 26, 1e-12);
    };

    // outer layer: segments are independent, so compute them in parallel and
    // run the extrapolation over the cached values
    const int nseg = 26;
    std::vector<double> cache(nseg + 1, 0.0);
    auto fo = [&](double u23) { return middle(u23) * std::cos(TWO_PI * u23); };
    parallel_chunks(nseg + 1, [&](int, int64_t b, int64_t e) {
        for (int64_t i = b; i < e; ++i) {
            if (i == 0) {
                cache[0] = integrate_gk_real(fo, 0.0, 0.25, seg);
            } else {
                double a = 0.25 + 0.5 * (i - 1);
                cache[i] = integrate_gk_real(fo, a, a + 0.5, seg);
            }
        }
    });
    double err = 0.0;
    cplx tail = accelerate_sum([&](int k) -> cplx { return cplx(cache[k + 1], 0.0); }, nseg, 1e-12,
                               &err);
    double quarter = 4.0 * (cache[0] + tail.real());
    return cplx(quarter, 0.0);
}

} // namespace

WhittakerEval whittaker_stade(const SpectralParams& p, const std::vector<double>& y,
                              const QuadratureSpec& q) {
    if (static_cast<int>(y.size()) != p.n - 1)
        throw domain_error("whittaker_stade: need n-1 ratios");
    for (double v : y)
        if (!(v > 0.0)) throw domain_error("whittaker_stade: ratios must be positive");
    if (p.n == 2) return stade_gl2(p, y, q);
    if (p.n == 3) return stade_gl3(p, y, q);
    throw domain_error("whittaker_stade: implemented for n = 2 and n = 3");
}

cplx whittaker_direct(const SpectralParams& p, const std::vector<double>& y,
                      const QuadratureSpec& q) {
    if (static_cast<int>(y.size()) != p.n - 1)
        throw domain_error("whittaker_direct: need n-1 ratios");
    if (p.n == 2) return direct_gl2(p, y, q);
    if (p.n == 3) return direct_gl3(p, y, q);
    throw domain_error("whittaker_direct: implemented for n = 2 and n = 3");
}

namespace {

// power-of-two multiplier in the squared-profile Mellin transform, pinned per
// rank against direct quadrature
double mellin_norm_constant(int m) {
    switch (m) {
        case 2:
            return 0.5;
        case 3:
            return 0.25;
        default:
            throw domain_error("whittaker_mellin_norm: constant pinned only for m = 2, 3");
    }
}

} // namespace

cplx whittaker_mellin_norm(int m, const std::vector<cplx>& beta, cplx w) {
    if (static_cast<int>(beta.size()) != m)
        throw domain_error("whittaker_mellin_norm: need m parameters");
    cplx log_val = -0.5 * (m - 1.0) * m * w * LOG_PI - log_gamma(0.5 * m * w);
    cplx log_compl(0.0);
    for (int j = 1; j <= m - 1; ++j)
        for (int k = j; k <= m - 1; ++k) {
            cplx diff = beta[m - k - 1] - beta[m - k + j - 1];
            log_compl += log_gamma(0.5 * (1.0 + diff)) - (0.5 + 0.5 * diff) * LOG_PI;
        }
    double inv_mod_sq = 1.0 / std::norm(std::exp(log_compl));
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) log_val += log_gamma(0.5 * (w + beta[j] + std::conj(beta[k])));
    return mellin_norm_constant(m) * inv_mod_sq * std::exp(log_val);
}

int whittaker_mellin_norm_pole_order(const std::vector<cplx>& beta) {
    int m = static_cast<int>(beta.size());
    int coincide = 0;
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k)
            if (std::abs(beta[j] + std::conj(beta[k])) < 1e-12) ++coincide;
    return coincide - 1; // one factor is cancelled by 1/Gamma(m w / 2)
}

StirlingPairResult stirling_pair(double x, double y, int ell) {
    if (std::abs(x) > 0.5) throw domain_error("stirling_pair: need |x| <= 1/2");
    if (y == 0.0) throw domain_error("stirling_pair: need y != 0");
    if (ell < 0 || ell > 3) throw domain_error("stirling_pair: derivative order 0..3");
    auto F = [&](double xx) -> double {
        cplx v = std::exp(log_gamma(cplx(0.5 * xx, 0.5 * y)) + log_gamma(cplx(0.5 * xx, -0.5 * y)));
        return v.real();
    };
    double h = 0.02, exact = 0.0;
    switch (ell) {
        case 0:
            exact = F(x);
            break;
        case 1:
            exact = (-F(x + 2 * h) + 8 * F(x + h) - 8 * F(x - h) + F(x - 2 * h)) / (12 * h);
            break;
        case 2:
            exact = (-F(x + 2 * h) + 16 * F(x + h) - 30 * F(x) + 16 * F(x - h) - F(x - 2 * h)) /
                    (12 * h * h);
            break;
        case 3:
            exact = (F(x + 2 * h) - 2 * F(x + h) + 2 * F(x - h) - F(x - 2 * h)) / (2 * h * h * h);
            break;
    }
    double ay = std::abs(y);
    // main term with two correction orders in 1/z, z = (x + i|y|)/2
    cplx z(0.5 * x, 0.5 * ay);
    cplx corr = 1.0 + 1.0 / (12.0 * z) + 1.0 / (288.0 * z * z);
    double angle = std::atan2(ay, x);
    double base = 2.0 * PI * std::exp(-x) * std::pow(0.25 * (x * x + y * y), 0.5 * (x - 1.0)) *
                  std::exp(-ay * angle) * std::norm(corr);
    double asym = std::pow(std::log(0.5 * ay), ell) * base;
    return {exact, asym, exact / asym};
}

} // namespace rs
