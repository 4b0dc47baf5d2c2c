#include "rs/theta.hpp"

#include "rs/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace rs {

namespace {

// unimodular rescaling det^{-1/dim} * z.matrix()
Mat<double> scaled_matrix(const IwasawaCoords& z) {
    Mat<double> m = z.matrix();
    double s = std::pow(z.det(), -1.0 / z.k);
    for (auto& v : m.a) v *= s;
    return m;
}

Mat<double> row_gram(const Mat<double>& m) {
    int k = m.rows;
    Mat<double> g(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= i; ++j) {
            long double acc = 0.0L;
            for (int l = 0; l < k; ++l)
                acc += static_cast<long double>(m(i, l)) * m(j, l);
            g(i, j) = g(j, i) = static_cast<double>(acc);
        }
    return g;
}

// Q = C C^T with C lower triangular
Mat<double> cholesky(const Mat<double>& q) {
    int k = q.rows;
    Mat<double> c(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= i; ++j) {
            long double s = q(i, j);
            for (int l = 0; l < j; ++l)
                s -= static_cast<long double>(c(i, l)) * c(j, l);
            if (i == j) {
                if (s <= 0.0L) throw domain_error("theta: form is not positive definite");
                c(i, i) = std::sqrt(static_cast<double>(s));
            } else {
                c(i, j) = static_cast<double>(s) / c(j, j);
            }
        }
    return c;
}

struct Enumerator {
    const Mat<double>& B; // upper triangular, form value = |B a|^2
    double qmax;
    int64_t cap;
    std::vector<int64_t> a;
    std::vector<double>& out;

    // choose coordinate i given the partial combination from coordinates > i
    void walk(int i, double used, const std::vector<double>& shift) {
        double b = B(i, i);
        double rem = qmax - used;
        double center = -shift[i] / b;
        double radius = std::sqrt(rem) / std::abs(b);
        int64_t lo = static_cast<int64_t>(std::ceil(center - radius - 1e-12));
        int64_t hi = static_cast<int64_t>(std::floor(center + radius + 1e-12));
        for (int64_t ai = lo; ai <= hi; ++ai) {
            a[i] = ai;
            double f = b * ai + shift[i];
            double used2 = used + f * f;
            if (used2 > qmax + 1e-12) continue;
            if (i == 0) {
                bool zero = true;
                for (int64_t v : a)
                    if (v != 0) { zero = false; break; }
                if (zero) continue;
                if (static_cast<int64_t>(out.size()) >= cap)
                    throw tolerance_error("theta: lattice point budget exhausted");
                out.push_back(used2);
            } else {
                std::vector<double> shift2 = shift;
                for (int r = 0; r < i; ++r) shift2[r] += B(r, i) * ai;
                walk(i - 1, used2, shift2);
            }
        }
    }
};

} // namespace

ThetaContext make_theta_context(const IwasawaCoords& z, double qmax, int64_t point_cap) {
    if (z.k < 2) throw domain_error("theta: need dimension >= 2");
    Mat<double> m = scaled_matrix(z);
    Mat<double> q = row_gram(m);
    Mat<double> c = cholesky(q);
    Mat<double> b(z.k, z.k); // B = C^T
    for (int i = 0; i < z.k; ++i)
        for (int j = i; j < z.k; ++j) b(i, j) = c(j, i);

    ThetaContext ctx;
    ctx.dim = z.k;
    ctx.qmax = qmax;
    Enumerator en{b, qmax, point_cap, std::vector<int64_t>(z.k, 0), ctx.qvals};
    en.walk(z.k - 1, 0.0, std::vector<double>(z.k, 0.0));
    if (ctx.qvals.empty()) throw domain_error("theta: no lattice points under the cutoff");
    std::sort(ctx.qvals.begin(), ctx.qvals.end());
    ctx.qmin = ctx.qvals.front();
    return ctx;
}

IwasawaCoords theta_dual_coords(const IwasawaCoords& z) {
    int k = z.k;
    Mat<double> m = z.matrix();
    // invert the upper triangular matrix by back substitution
    Mat<double> inv(k, k);
    for (int col = 0; col < k; ++col) {
        std::vector<long double> xcol(k, 0.0L);
        for (int i = k - 1; i >= 0; --i) {
            long double rhs = (i == col) ? 1.0L : 0.0L;
            for (int j = i + 1; j < k; ++j)
                rhs -= static_cast<long double>(m(i, j)) * xcol[j];
            xcol[i] = rhs / m(i, i);
        }
        for (int i = 0; i < k; ++i) inv(i, col) = static_cast<double>(xcol[i]);
    }
    // reversal conjugate of the transpose is upper triangular again
    Mat<double> dual(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) dual(i, j) = inv(k - 1 - j, k - 1 - i);
    return iwasawa_decompose(dual);
}

double theta_value(const ThetaContext& ctx, double u) {
    if (u < 0.75) throw domain_error("theta: context only covers u >= 0.75");
    long double s = 0.0L;
    double qcut = ctx.qmin + 46.0 / (PI * u);
    for (double q : ctx.qvals) {
        if (q > qcut) break;
        s += std::exp(static_cast<long double>(-PI * u * q));
    }
    return 1.0 + static_cast<double>(s);
}

double theta_tail_bound(const ThetaContext& ctx, double u) {
    double n2 = 0.5 * ctx.dim;
    double c = static_cast<double>(ctx.qvals.size()) * n2 / std::pow(ctx.qmax, n2);
    double x = PI * u * ctx.qmax;
    if (x > 700.0) return 0.0;
    return c * std::pow(ctx.qmax, n2 - 1.0) * std::exp(-x) / (PI * u) *
           (1.0 + std::max(0.0, n2 - 1.0) / x);
}

cplx theta_integral(const ThetaContext& ctx, cplx w) {
    double grow = std::max(0.0, w.real() - 1.0);
    double upper = 2.0;
    for (int it = 0; it < 4; ++it)
        upper = std::max(2.0, 1.0 + (55.0 + grow * std::log(upper)) / (PI * ctx.qmin));
    auto f = [&](double u) -> cplx {
        long double s = 0.0L;
        double qcut = ctx.qmin + 46.0 / (PI * u);
        for (double q : ctx.qvals) {
            if (q > qcut) break;
            s += std::exp(static_cast<long double>(-PI * u * q));
        }
        return static_cast<double>(s) * std::exp((w - 1.0) * std::log(u));
    };
    QuadratureSpec spec;
    spec.rel_tol = 1e-11;
    spec.init_panels = std::max(16, static_cast<int>(std::abs(w.imag()) * std::log(upper) / 3.0) + 8);
    return integrate_gk(f, 1.0, upper, spec);
}

} // namespace rs
