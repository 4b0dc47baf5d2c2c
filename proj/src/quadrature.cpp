#include "rs/quadrature.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <queue>
#include <vector>

namespace rs {

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1,1]
constexpr double GK_X[8] = {
    0.0,
    0.2077849550078985,
    0.4058451513773972,
    0.5860872354676911,
    0.7415311855993944,
    0.8648644233597691,
    0.9491079123427585,
    0.9914553711208126,
};
constexpr double K15_W[8] = {
    0.2094821410847278,
    0.2044329400752989,
    0.1903505780647854,
    0.1690047266392679,
    0.1406532597155259,
    0.1047900103222502,
    0.0630920926299786,
    0.0229353220105292,
};
constexpr double G7_W[4] = {
    0.4179591836734694,
    0.3818300505051189,
    0.2797053914892767,
    0.1294849661688697,
};

struct Segment {
    double a, b;
    cplx integral;
    double err;
    uint64_t id;
};

struct SegmentWorse {
    bool operator()(const Segment& p, const Segment& q) const {
        if (p.err != q.err) return p.err < q.err;
        return p.id > q.id;
    }
};

void gk15(const std::function<cplx(double)>& f, double a, double b, cplx& integral, double& err) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    cplx fk[15];
    fk[0] = f(c);
    for (int i = 1; i < 8; ++i) {
        fk[2 * i - 1] = f(c - h * GK_X[i]);
        fk[2 * i] = f(c + h * GK_X[i]);
    }
    cplx k15 = K15_W[0] * fk[0];
    for (int i = 1; i < 8; ++i) k15 += K15_W[i] * (fk[2 * i - 1] + fk[2 * i]);
    cplx g7 = G7_W[0] * fk[0];
    for (int i = 1; i < 4; ++i) g7 += G7_W[i] * (fk[4 * i - 1] + fk[4 * i]);
    integral = k15 * h;
    err = std::abs(k15 - g7) * h;
}

} // namespace

cplx integrate_gk(const std::function<cplx(double)>& f, double a, double b,
                  const QuadratureSpec& q, double* err_out) {
    if (!(b > a)) {
        if (err_out) *err_out = 0.0;
        return cplx(0.0);
    }
    std::priority_queue<Segment, std::vector<Segment>, SegmentWorse> heap;
    uint64_t next_id = 0;
    cplx total(0.0);
    double total_err = 0.0;
    int panels = std::max(1, q.init_panels);
    for (int p = 0; p < panels; ++p) {
        Segment s;
        s.a = a + (b - a) * p / panels;
        s.b = a + (b - a) * (p + 1) / panels;
        gk15(f, s.a, s.b, s.integral, s.err);
        s.id = next_id++;
        total += s.integral;
        total_err += s.err;
        heap.push(s);
    }
    int used = panels;
    while (total_err > std::max(q.abs_floor, q.rel_tol * std::abs(total)) &&
           used < q.max_intervals && !heap.empty()) {
        Segment worst = heap.top();
        heap.pop();
        total -= worst.integral;
        total_err -= worst.err;
        double mid = 0.5 * (worst.a + worst.b);
        for (int half = 0; half < 2; ++half) {
            Segment s;
            s.a = half == 0 ? worst.a : mid;
            s.b = half == 0 ? mid : worst.b;
            gk15(f, s.a, s.b, s.integral, s.err);
            s.id = next_id++;
            total += s.integral;
            total_err += s.err;
            heap.push(s);
        }
        ++used;
    }
    if (err_out) *err_out = total_err;
    double target = std::max(q.abs_floor, q.rel_tol * std::abs(total));
    if (q.throw_on_failure && total_err > std::max(10.0 * target, 1e-300) && used >= q.max_intervals)
        throw tolerance_error("integrate_gk: tolerance not reached within interval budget");
    return total;
}

double integrate_gk_real(const std::function<double(double)>& f, double a, double b,
                         const QuadratureSpec& q, double* err_out) {
    cplx v = integrate_gk([&](double x) { return cplx(f(x), 0.0); }, a, b, q, err_out);
    return v.real();
}

double integrate_tanh_sinh_real(const std::function<double(double)>& f, double a, double b,
                                double rel_tol, double* err_out) {
    boost::math::quadrature::tanh_sinh<double> rule(12);
    double err = 0.0, l1 = 0.0;
    double v = rule.integrate(f, a, b, rel_tol, &err, &l1);
    if (err_out) *err_out = err * l1;
    return v;
}

cplx integrate_tanh_sinh(const std::function<cplx(double)>& f, double a, double b,
                         double rel_tol, double* err_out) {
    double er = 0.0, ei = 0.0;
    double re = integrate_tanh_sinh_real([&](double x) { return f(x).real(); }, a, b, rel_tol, &er);
    double im = integrate_tanh_sinh_real([&](double x) { return f(x).imag(); }, a, b, rel_tol, &ei);
    if (err_out) *err_out = er + ei;
    return cplx(re, im);
}

namespace {

using cld = std::complex<long double>;

// One pass of the Wynn epsilon table over partial sums; returns the deepest
// stable even-column entry and an error estimate from its last change.
std::pair<cld, long double> wynn_limit(const std::vector<cld>& partial) {
    int n = static_cast<int>(partial.size());
    std::vector<cld> prev(n, cld(0.0L)), curr = partial;
    cld latest = curr.back(), before = latest;
    for (int k = 1; k < n; ++k) {
        std::vector<cld> nxt(n - k);
        bool degenerate = false;
        for (int i = 0; i + k < n; ++i) {
            cld d = curr[i + 1] - curr[i];
            if (std::abs(d) < 1e-32L) {
                degenerate = true;
                break;
            }
            nxt[i] = prev[i + 1] + cld(1.0L) / d;
        }
        if (degenerate) break;
        prev.swap(curr);
        curr.swap(nxt);
        if (k % 2 == 0) {
            before = latest;
            latest = curr.back();
        }
    }
    return {latest, std::abs(latest - before)};
}

} // namespace

cplx accelerate_sum(const std::function<cplx(int)>& term, int max_terms, double rel_tol,
                    double* err_out) {
    std::vector<cld> partial;
    partial.reserve(max_terms);
    cld sum(0.0L);
    cplx best(0.0);
    double best_err = HUGE_VAL;
    for (int m = 0; m < max_terms; ++m) {
        cplx t = term(m);
        sum += cld(t.real(), t.imag());
        partial.push_back(sum);
        int n = static_cast<int>(partial.size());
        bool last = (m == max_terms - 1);
        if (n < 6 || (n % 4 != 0 && !last)) continue;
        auto [limit, change] = wynn_limit(partial);
        cplx cand(static_cast<double>(limit.real()), static_cast<double>(limit.imag()));
        double err = static_cast<double>(change) + std::abs(t) * 1e-3;
        if (err < best_err) {
            best_err = err;
            best = cand;
        }
        if (best_err <= rel_tol * std::max(std::abs(best), 1e-300)) break;
    }
    if (err_out) *err_out = best_err;
    return best;
}

} // namespace rs
