#include "rs/psi.hpp"

#include "rs/gammafn.hpp"
#include "rs/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace rs {

namespace {

double binom(int n, int k) {
    double v = 1.0;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

} // namespace

PsiFunction make_psi(int n, const std::vector<cplx>& alpha, double r, int order) {
    if (n < 1 || static_cast<int>(alpha.size()) != n)
        throw domain_error("psi: need n shifted exponents");
    if (r <= 0.0) throw domain_error("psi: offset must be positive");
    if (order < 1) throw domain_error("psi: order must be at least 1");
    for (const cplx& a : alpha)
        if (std::abs(a.real()) > 1e-12)
            throw domain_error("psi: shifted exponents must be purely imaginary");

    PsiFunction psi;
    psi.n = n;
    psi.r = r;
    psi.order = order;
    psi.alpha = alpha;
    double s_half = 0.0;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            cplx d = alpha[j] - alpha[k];
            if (std::abs(d) < 1e-12) {
                ++psi.l_coincide;
                continue;
            }
            psi.deltas.push_back(d);
            if (j < k) s_half += 1.0 / std::abs(d.imag());
        }
    if (order * s_half >= n)
        throw domain_error("psi: pair spacing too small for this order, transform diverges");

    double terms = std::pow(order + 1.0, static_cast<double>(psi.deltas.size()));
    if (terms > 2e6) throw domain_error("psi: expansion too large");
    psi.coeff = {1.0};
    psi.gexp = {cplx(0.0, 0.0)};
    for (const cplx& d : psi.deltas) {
        std::vector<double> c2;
        std::vector<cplx> g2;
        c2.reserve(psi.coeff.size() * (order + 1));
        g2.reserve(psi.coeff.size() * (order + 1));
        cplx step = PI / d;
        for (size_t m = 0; m < psi.coeff.size(); ++m)
            for (int l = 0; l <= order; ++l) {
                c2.push_back(psi.coeff[m] * binom(order, l));
                g2.push_back(psi.gexp[m] + static_cast<double>(l) * step);
            }
        psi.coeff.swap(c2);
        psi.gexp.swap(g2);
    }
    return psi;
}

cplx PsiFunction::tilde(cplx w) const {
    double scale = 2.0 * n;
    cplx lg = log_gamma(scale * (r + w)) - std::lgamma(scale * r) -
              order * static_cast<double>(n * n - l_coincide) * std::log(2.0);
    cplx prod = 1.0;
    for (const cplx& d : deltas) prod *= std::pow(std::exp(PI * w / d) + 1.0, order);
    return std::exp(lg) * prod;
}

double PsiFunction::decay_rate() const {
    double s_half = 0.0;
    for (const cplx& d : deltas)
        if (d.imag() > 0.0) s_half += 1.0 / d.imag();
    return PI * (n - order * s_half);
}

double PsiFunction::value(double y) const {
    if (y <= 0.0) throw domain_error("psi: argument must be positive");
    double scale = 2.0 * n;
    double pref = -std::lgamma(scale * r) -
                  order * static_cast<double>(n * n - l_coincide) * std::log(2.0) -
                  std::log(scale);
    double ly = std::log(y);
    cplx acc = 0.0;
    for (size_t m = 0; m < coeff.size(); ++m) {
        cplx lz = ly - gexp[m];             // log of the stretched argument
        cplx root = std::exp(lz / scale);   // (y e^{-g})^{1/2n}, principal in lz
        acc += coeff[m] * std::exp(pref + r * lz - root);
    }
    return acc.real();
}

double PsiFunction::value_contour(double y) const {
    if (y <= 0.0) throw domain_error("psi: argument must be positive");
    double rate = decay_rate();
    double vmax = std::min(60.0, 46.0 / rate + 6.0);
    double ly = std::log(y);
    auto f = [&](double v) -> cplx { return tilde(cplx(0.0, v)) * std::exp(cplx(0.0, -v * ly)); };
    QuadratureSpec spec;
    spec.rel_tol = 1e-10;
    spec.abs_floor = 1e-14;
    spec.init_panels = std::max(32, static_cast<int>(vmax * (1.0 + std::abs(ly)) / 2.0));
    cplx total = integrate_gk(f, -vmax, vmax, spec);
    return total.real() / TWO_PI;
}

double psi_zero_order(const PsiFunction& psi, cplx w0) {
    const int pts = 16;
    double r1 = 0.01, r2 = 0.02;
    double m1 = 0.0, m2 = 0.0;
    for (int j = 0; j < pts; ++j) {
        double phi = TWO_PI * j / pts;
        cplx e(std::cos(phi), std::sin(phi));
        m1 += std::log(std::abs(psi.tilde(w0 + r1 * e)));
        m2 += std::log(std::abs(psi.tilde(w0 + r2 * e)));
    }
    return (m2 - m1) / (pts * std::log(r2 / r1));
}

int psi_expected_zero_order(const PsiFunction& psi, cplx w0) {
    int hits = 0;
    for (const cplx& d : psi.deltas)
        if (std::abs(std::exp(PI * w0 / d) + 1.0) < 1e-8) ++hits;
    return hits * psi.order;
}

double psi_decay_fit(const PsiFunction& psi, double v_lo, double v_hi, int samples) {
    if (samples < 2 || v_hi <= v_lo) throw domain_error("psi: bad fit window");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < samples; ++i) {
        double v = v_lo + (v_hi - v_lo) * i / (samples - 1);
        double lv = std::log(std::abs(psi.tilde(cplx(0.0, v))));
        sx += v;
        sy += lv;
        sxx += v * v;
        sxy += v * lv;
    }
    double nn = samples;
    return (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
}

double mellin_cutoff(double x) {
    if (x <= 0.0) throw domain_error("cutoff: argument must be positive");
    double lx = std::log(x);
    auto f = [&](double v) -> cplx {
        cplx w(2.0, v);
        return std::exp(w * lx) / (w * (w + 1.0));
    };
    if (std::abs(lx) < 0.02) {
        // near the transition the oscillation is too slow to segment on; fold
        // the whole line onto a finite interval instead and accept estimator
        // noise near the endpoints, where the integrand is pure roundoff
        auto g = [&](double phi) -> cplx {
            double c = std::cos(phi);
            return f(std::tan(phi)) / (c * c);
        };
        QuadratureSpec spec;
        spec.rel_tol = 1e-9;
        spec.abs_floor = 1e-13;
        spec.throw_on_failure = false;
        cplx total = integrate_gk(g, -0.5 * PI + 1e-12, 0.5 * PI - 1e-12, spec);
        return total.real() / TWO_PI;
    }
    double seg = PI / std::abs(lx);
    QuadratureSpec spec;
    spec.rel_tol = 1e-9;
    spec.max_intervals = 60;
    spec.init_panels = 4;
    spec.throw_on_failure = false;
    int max_terms = static_cast<int>(std::min(3000.0, 100000.0 / seg));
    cplx tail = accelerate_sum(
        [&](int k) -> cplx {
            return integrate_gk(f, seg * (k + 1), seg * (k + 2), spec);
        },
        max_terms, 1e-8);
    cplx head = integrate_gk(f, 0.0, seg, spec);
    return (head + tail).real() / PI;
}

} // namespace rs
