#include "rs/lseries.hpp"

#include "rs/gammafn.hpp"
#include "rs/parallel.hpp"
#include "rs/zetafn.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace rs {

namespace {

using cplxl = std::complex<long double>;

cplx parallel_csum(int64_t n, const std::function<cplx(int64_t)>& fn) {
    int workers = std::max(1, max_threads());
    std::vector<cplxl> acc(workers, cplxl(0.0L, 0.0L));
    parallel_chunks(n, [&](int w, int64_t lo, int64_t hi) {
        cplxl s(0.0L, 0.0L);
        for (int64_t i = lo; i < hi; ++i) {
            cplx t = fn(i);
            s += cplxl(t.real(), t.imag());
        }
        acc[w] = s;
    });
    cplxl total(0.0L, 0.0L);
    for (const cplxl& s : acc) total += s;
    return cplx(static_cast<double>(total.real()), static_cast<double>(total.imag()));
}

} // namespace

cplx log_gamma_factor_rs(const CuspFormData& f, cplx s) {
    std::vector<cplx> shifts = rs_gamma_shifts(f);
    cplx lg = -0.5 * static_cast<double>(shifts.size()) * s * LOG_PI;
    for (const cplx& d : shifts) lg += log_gamma(0.5 * (s + d));
    return lg;
}

cplx gamma_factor_rs(const CuspFormData& f, cplx s) { return std::exp(log_gamma_factor_rs(f, s)); }

cplx l_rs_exact(const CuspFormData& f, cplx s) {
    if (static_cast<int>(f.theta.size()) != f.n)
        throw domain_error("lseries: exact route needs an angle-generated form");
    cplx val = 1.0;
    for (const cplx& d : rs_gamma_shifts(f)) val *= zeta(s - d);
    return val;
}

cplx lambda_completed_exact(const CuspFormData& f, cplx s) {
    if (static_cast<int>(f.theta.size()) != f.n)
        throw domain_error("lseries: exact route needs an angle-generated form");
    cplx val = 1.0;
    for (const cplx& d : rs_gamma_shifts(f)) {
        cplx w = s - d;
        val *= std::exp(-0.5 * w * LOG_PI + log_gamma(0.5 * w)) * zeta(w);
    }
    return val;
}

cplx l_rs_dirichlet(const CuspFormData& f, cplx s, int64_t mmax) {
    if (s.real() <= 1.0) throw domain_error("lseries: Dirichlet sum needs Re s > 1");
    std::vector<double> lam = rs_coefficients(f, mmax);
    return parallel_csum(mmax, [&](int64_t i) {
        if (i == 0) return cplx(1.0, 0.0);
        return lam[i] * std::exp(-s * std::log(static_cast<double>(i + 1)));
    });
}

namespace {

// Smooth factor of an approximate-functional-equation weight along a vertical
// contour: V(y) = (h/2pi) y^{-sigma} * F(log y) with F a trapezoid sum of
// precomputed contour values times e^{-i v log y}.  F is tabulated on a
// uniform grid in log y and read back by 6-point interpolation.
struct VTable {
    double logy0 = 0.0;
    double step = 1.0;
    double sigma = 3.0;
    double scale = 1.0; // contour_step / 2pi
    std::vector<cplx> f;

    cplx eval(double y) const {
        double ly = std::log(y);
        double u = (ly - logy0) / step;
        int64_t i = static_cast<int64_t>(std::floor(u));
        if (i < 2) i = 2;
        if (i > static_cast<int64_t>(f.size()) - 4) i = static_cast<int64_t>(f.size()) - 4;
        double w = u - static_cast<double>(i);
        // 6-point Lagrange on offsets -2..3
        static const double den[6] = {-120.0, 24.0, -12.0, 12.0, -24.0, 120.0};
        double numer[6];
        double full = 1.0;
        for (int k = 0; k < 6; ++k) full *= w - (k - 2);
        cplx acc = 0.0;
        if (std::abs(full) < 1e-300) {
            acc = f[i + static_cast<int64_t>(std::lround(w)) ];
        } else {
            for (int k = 0; k < 6; ++k) {
                numer[k] = full / (w - (k - 2));
                acc += numer[k] / den[k] * f[i + k - 2];
            }
        }
        return scale * std::exp(-sigma * ly) * acc;
    }
};

// contour values W(v) = exp(log gamma-factor(num_s + u) - lg_den + u^2/4)/u,
// u = sigma + i v, on a symmetric uniform v-grid wide enough that the Gaussian
// has crushed the gamma-ratio growth
std::vector<cplx> contour_values(const CuspFormData& f, cplx num_s, cplx lg_den, double sigma,
                                 double vstep, double* vmax_out) {
    auto log_mag = [&](double v) {
        cplx u(sigma, v);
        cplx lg = log_gamma_factor_rs(f, num_s + u) - lg_den + 0.25 * u * u;
        return lg.real() - std::log(std::abs(u));
    };
    double vmax = 8.0;
    while (vmax < 120.0 && (log_mag(vmax) > -52.0 || log_mag(-vmax) > -52.0)) vmax += 4.0;
    vmax += 2.0;
    int half = static_cast<int>(std::ceil(vmax / vstep));
    std::vector<cplx> w(2 * half + 1);
    parallel_chunks(2 * half + 1, [&](int, int64_t lo, int64_t hi) {
        for (int64_t idx = lo; idx < hi; ++idx) {
            double v = (static_cast<double>(idx) - half) * vstep;
            cplx u(sigma, v);
            w[idx] = std::exp(log_gamma_factor_rs(f, num_s + u) - lg_den + 0.25 * u * u) / u;
        }
    });
    *vmax_out = half * vstep;
    return w;
}

VTable build_v_table(const CuspFormData& f, cplx num_s, cplx lg_den, double logy_lo,
                     double logy_hi, const AfeOptions& opt) {
    VTable t;
    t.sigma = opt.contour_sigma;
    t.step = opt.grid_step;
    t.scale = opt.contour_step / TWO_PI;
    t.logy0 = logy_lo - 3.0 * t.step;
    int64_t nodes = static_cast<int64_t>(std::ceil((logy_hi - t.logy0) / t.step)) + 4;

    double vmax = 0.0;
    std::vector<cplx> w = contour_values(f, num_s, lg_den, t.sigma, opt.contour_step, &vmax);

    t.f.resize(nodes);
    parallel_chunks(nodes, [&](int, int64_t lo, int64_t hi) {
        for (int64_t idx = lo; idx < hi; ++idx) {
            double ly = t.logy0 + idx * t.step;
            // sum_k w_k e^{-i v_k ly} by phase recurrence from v = -vmax
            cplx rot = std::exp(cplx(0.0, vmax * ly));
            cplx drot = std::exp(cplx(0.0, -opt.contour_step * ly));
            cplxl acc(0.0L, 0.0L);
            for (size_t k = 0; k < w.size(); ++k) {
                cplx term = w[k] * rot;
                acc += cplxl(term.real(), term.imag());
                rot *= drot;
                if ((k & 1023) == 1023) rot = std::exp(cplx(0.0, (vmax - (k + 1) * opt.contour_step) * ly));
            }
            t.f[idx] = cplx(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
        }
    });
    return t;
}

std::vector<cplx> lambda_pole_list(const CuspFormData& f) {
    std::vector<cplx> poles;
    for (const cplx& d : rs_gamma_shifts(f)) {
        for (const cplx& cand : {d, d + 1.0}) {
            bool seen = false;
            for (const cplx& p : poles)
                if (std::abs(p - cand) < 1e-9) { seen = true; break; }
            if (!seen) poles.push_back(cand);
        }
    }
    return poles;
}

// sum of residues of Lambda(s0+u) X^u e^{u^2/4} / u over all poles of Lambda,
// divided by the gamma factor at s0, one trapezoid circle per cluster of
// nearby poles.  The division is folded into the ring exponent because the
// two factors can overflow and underflow separately while their product is
// tame.
cplx residue_correction(const CuspFormData& f, cplx s0, double x, cplx lg_den) {
    std::vector<cplx> poles = lambda_pole_list(f);
    std::vector<int> group(poles.size());
    for (size_t i = 0; i < poles.size(); ++i) group[i] = static_cast<int>(i);
    bool merged = true;
    while (merged) {
        merged = false;
        for (size_t i = 0; i < poles.size(); ++i)
            for (size_t j = i + 1; j < poles.size(); ++j)
                if (group[i] != group[j] && std::abs(poles[i] - poles[j]) < 0.15) {
                    int from = group[j], to = group[i];
                    for (auto& g : group)
                        if (g == from) g = to;
                    merged = true;
                }
    }
    cplx total = 0.0;
    double logx = std::log(x);
    for (size_t gi = 0; gi < poles.size(); ++gi) {
        if (group[gi] != static_cast<int>(gi)) continue;
        std::vector<cplx> members;
        for (size_t j = 0; j < poles.size(); ++j)
            if (group[j] == static_cast<int>(gi)) members.push_back(poles[j] - s0);
        cplx center = 0.0;
        for (const cplx& m : members) center += m;
        center /= static_cast<double>(members.size());
        double spread = 0.0;
        for (const cplx& m : members) spread = std::max(spread, std::abs(m - center));
        double radius = spread + 0.06;
        if (std::abs(center) < radius + 0.05)
            throw domain_error("afe: s0 sits too close to a pole of the completed series");
        // Gaussian damping decides whether the cluster can matter at all
        double damp = 0.25 * (center * center).real() + std::abs(center.real()) * std::abs(logx) +
                      radius * (std::abs(center) + radius) - lg_den.real();
        if (damp < -45.0) continue;
        cplx ring = 0.0;
        const int pts = 64;
        for (int j = 0; j < pts; ++j) {
            double phi = TWO_PI * (j + 0.5) / pts;
            cplx e(std::cos(phi), std::sin(phi));
            cplx u = center + radius * e;
            ring += lambda_completed_exact(f, s0 + u) * std::exp(u * logx + 0.25 * u * u - lg_den) / u * e;
        }
        total += ring * (radius / pts);
    }
    return total;
}

double log_conductor(const CuspFormData& f, cplx s0) {
    double lq = 0.0;
    for (const cplx& d : rs_gamma_shifts(f)) lq += std::log(std::max(2.0, std::abs(s0 + d)));
    return lq;
}

} // namespace

cplx afe_value(const CuspFormData& f, cplx s0, const AfeOptions& opt) {
    if (opt.x <= 0.0) throw domain_error("afe: balance point must be positive");
    for (const cplx& p : lambda_pole_list(f))
        if (std::abs(s0 - p) < 0.05)
            throw domain_error("afe: s0 sits too close to a pole of the completed series");

    double sqrt_cond = std::exp(0.5 * log_conductor(f, s0));
    int64_t m1 = static_cast<int64_t>(std::ceil(opt.x * sqrt_cond * std::exp(opt.slack)));
    int64_t m2 = static_cast<int64_t>(std::ceil(sqrt_cond * std::exp(opt.slack) / opt.x));
    if (m1 > opt.max_terms || m2 > opt.max_terms)
        throw tolerance_error("afe: series cutoff exceeds the term budget");

    std::vector<double> lam = rs_coefficients(f, std::max(m1, m2));
    cplx lg_den = log_gamma_factor_rs(f, s0);

    // The gamma ratio on the contour line grows like exp(sigma * lq2 / 2), and
    // the weight integral cancels that growth back down to O(1), so every
    // decade of ratio growth costs a decade of relative accuracy; node errors
    // are smooth in log y and accumulate coherently across the term sums.  Cap
    // the amplification at e^10.75 by lowering the abscissa for heavy
    // conductors; it must stay right of u = 0 and of every pole of the
    // completed series, which keeps it above 1 - Re s0 + 1/2.
    double lq2 = 0.0;
    for (const cplx& d : rs_gamma_shifts(f))
        lq2 += std::log(std::max(2.0, std::abs(s0 + d)) / 2.0);
    AfeOptions topt = opt;
    topt.contour_sigma = std::max(std::max(1.0, 1.5 - s0.real()),
                                  std::min(opt.contour_sigma, 21.5 / std::max(lq2, 1.0)));

    VTable v1 = build_v_table(f, s0, lg_den, -std::log(opt.x) - 0.01,
                              std::log(static_cast<double>(m1) / opt.x) + 0.01, topt);
    VTable v2 = build_v_table(f, 1.0 - s0, lg_den, std::log(opt.x) - 0.01,
                              std::log(static_cast<double>(m2) * opt.x) + 0.01, topt);

    cplx sum1 = parallel_csum(m1, [&](int64_t i) {
        double m = static_cast<double>(i + 1);
        return lam[i] * std::exp(-s0 * std::log(m)) * v1.eval(m / opt.x);
    });
    cplx sum2 = parallel_csum(m2, [&](int64_t i) {
        double m = static_cast<double>(i + 1);
        return lam[i] * std::exp((s0 - 1.0) * std::log(m)) * v2.eval(m * opt.x);
    });
    cplx res = residue_correction(f, s0, opt.x, lg_den);
    return sum1 + sum2 - res;
}

cplx c_ratio(const CuspFormData& f, cplx s) {
    cplx w = static_cast<double>(f.n) * (2.0 * s - 1.0);
    return lambda_completed_exact(f, w) / lambda_completed_exact(f, 1.0 + w);
}

cplx c_ratio_afe(const CuspFormData& f, cplx s) {
    cplx w = static_cast<double>(f.n) * (2.0 * s - 1.0);
    cplx num = gamma_factor_rs(f, w) * afe_value(f, w);
    cplx den = gamma_factor_rs(f, 1.0 + w) * afe_value(f, 1.0 + w);
    return num / den;
}

cplx c_ratio_derivative(const CuspFormData& f, cplx s, double h) {
    return (c_ratio(f, s + h) - c_ratio(f, s - h)) / (2.0 * h);
}

cplx maass_selberg_truncated(const CuspFormData& f, cplx r, cplx s, double a) {
    if (a <= 1.0) throw domain_error("maass-selberg: need truncation height a > 1");
    cplx sb = std::conj(s);
    if (std::abs(r - sb) < 1e-12 || std::abs(r + sb - 1.0) < 1e-12)
        throw domain_error("maass-selberg: parameters sit on a removable singularity");
    double n = static_cast<double>(f.n);
    double la = std::log(a);
    cplx cr = c_ratio(f, r);
    cplx csb = std::conj(c_ratio(f, s));
    double norm2 = f.petersson_norm * f.petersson_norm;
    cplx t1 = std::exp(n * (r + sb - 1.0) * la) / (r + sb - 1.0);
    cplx t2 = csb * std::exp(n * (r - sb) * la) / (r - sb);
    cplx t3 = cr * std::exp(n * (sb - r) * la) / (sb - r);
    cplx t4 = cr * csb * std::exp(n * (1.0 - r - sb) * la) / (1.0 - r - sb);
    return norm2 * (t1 + t2 + t3 + t4);
}

cplx maass_selberg_limit(const CuspFormData& f, double t, double a) {
    if (a <= 1.0) throw domain_error("maass-selberg: need truncation height a > 1");
    if (t == 0.0) throw domain_error("maass-selberg: need t != 0");
    cplx s(0.5, t);
    double n = static_cast<double>(f.n);
    double la = std::log(a);
    cplx cs = c_ratio(f, s);
    cplx cp = c_ratio_derivative(f, s);
    double norm2 = f.petersson_norm * f.petersson_norm;
    cplx two_it(0.0, 2.0 * t);
    cplx osc = std::conj(cs) * std::exp(cplx(0.0, 2.0 * n * t * la)) / two_it -
               cs * std::exp(cplx(0.0, -2.0 * n * t * la)) / two_it;
    return norm2 * (osc + 2.0 * n * la - cp / cs);
}

double maass_selberg_richardson_slope(const CuspFormData& f, double t, double a, double eps0) {
    cplx s(0.5, t);
    cplx t0 = maass_selberg_truncated(f, s + eps0, s, a);
    cplx t1 = maass_selberg_truncated(f, s + eps0 / 2.0, s, a);
    cplx t2 = maass_selberg_truncated(f, s + eps0 / 4.0, s, a);
    double d1 = std::abs(t0 - t1), d2 = std::abs(t1 - t2);
    if (d2 == 0.0) throw domain_error("maass-selberg: vanishing refinement step");
    return std::log2(d1 / d2);
}

double zero_free_region_width(double t, int n, double lower_const, double deriv_const) {
    if (n < 1 || lower_const <= 0.0 || deriv_const <= 0.0)
        throw domain_error("zero-free width: constants must be positive");
    double c = lower_const / (2.0 * deriv_const);
    double l = std::log(std::abs(t) + 2.0);
    return c / std::pow(l, 5);
}

cplx fourier_coeff_a1(const CuspFormData& f, int64_t p, double t, cplx l_value, double c_n) {
    if (std::abs(l_value) == 0.0) throw domain_error("fourier coefficient: zero L-value");
    double eta = 2.0 * std::cos(f.n * t * std::log(static_cast<double>(p)));
    cplx lam = hecke_eigenvalue(f, p);
    double denom = std::pow(static_cast<double>(p), (2.0 * f.n - 1.0) / 2.0);
    return c_n * std::conj(lam * eta) / (denom * l_value);
}

} // namespace rs
