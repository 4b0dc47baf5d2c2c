#include "rs/wedge.hpp"

#include "rs/minors.hpp"

#include <cmath>

namespace rs {

double wedge_norm_sq(const Mat<double>& m, int i) {
    if (i < 1 || i + 1 > m.rows) throw domain_error("wedge_norm_sq: need 1 <= i <= rows-1");
    std::vector<double> minors = bottom_minors_real(m, i + 1);
    long double acc = 0.0L;
    for (double v : minors) acc += static_cast<long double>(v) * v;
    return static_cast<double>(acc);
}

double wedge_norm_sq(const IwasawaCoords& z, int i) { return wedge_norm_sq(z.matrix(), i); }

bigrat wedge_norm_sq_exact(const Mat<bigrat>& m, int i) {
    if (i < 1 || i + 1 > m.rows) throw domain_error("wedge_norm_sq: need 1 <= i <= rows-1");
    std::vector<bigrat> minors = bottom_minors_rational(m, i + 1);
    bigrat acc(0);
    for (const auto& v : minors) acc += v * v;
    return acc;
}

double wedge_norm_closed_form(const IwasawaCoords& z, int i) {
    if (i < 1 || i >= z.k) throw domain_error("wedge_norm_closed_form: need 1 <= i <= k-1");
    double norm = 1.0;
    for (int l = 1; l <= i; ++l) norm *= std::pow(z.y[l - 1], i + 1 - l);
    return norm * norm;
}

std::vector<bigrat> wedge_closed_form_exponents(int k, int i) {
    if (i < 1 || i >= k) throw domain_error("wedge_closed_form_exponents: need 1 <= i <= k-1");
    std::vector<bigrat> e(k - 1, bigrat(0));
    for (int l = 1; l <= i; ++l) e[l - 1] = bigrat(i + 1 - l);
    return e;
}

double height(const IwasawaCoords& z) {
    if (z.k % 2 != 0) throw domain_error("height: defined on GL(2n), need even k");
    int n = z.k / 2;
    double h = 1.0;
    for (int i = 1; i <= 2 * n - 1; ++i) {
        int e = (i <= n) ? i : 2 * n - i;
        h *= std::pow(z.y[i - 1], e);
    }
    return h;
}

double height_via_wedge(const IwasawaCoords& z) {
    if (z.k % 2 != 0) throw domain_error("height_via_wedge: defined on GL(2n), need even k");
    int n = z.k / 2;
    Mat<double> m = z.matrix();
    double det = z.det();
    double s = std::pow(det, -1.0 / z.k);
    for (auto& v : m.a) v *= s;
    return 1.0 / wedge_norm_sq(m, n - 1);
}

} // namespace rs
