#include "rs/kbessel.hpp"

#include <algorithm>
#include <cmath>

namespace rs {

cplx k_bessel_arg(cplx nu, double x, const QuadratureSpec& q) {
    if (!(x > 0.0)) throw domain_error("k_bessel: argument must be positive");
    if (x > 1400.0) return cplx(0.0); // below 1e-300 either way
    double sigma = std::abs(nu.real()), tau = std::abs(nu.imag());

    // truncation point: x(cosh U - 1) - sigma U > -log(eps_tail)
    double budget = 46.0;
    double U = 1.0;
    for (int it = 0; it < 40; ++it) {
        double need = (budget + sigma * U) / x + 1.0;
        double next = std::acosh(std::max(need, 1.0 + 1e-12));
        if (std::abs(next - U) < 1e-9) {
            U = next;
            break;
        }
        U = next;
    }
    U = std::max(U, 0.5);

    // factor exp(x) out to keep the integrand near unit scale; split cosh to
    // avoid overflow when sigma*u is large
    auto f = [&](double u) -> cplx {
        double c = std::cosh(u);
        cplx nuu = nu * u;
        return 0.5 * (std::exp(nuu - x * (c - 1.0)) + std::exp(-nuu - x * (c - 1.0)));
    };

    QuadratureSpec spec = q;
    spec.init_panels = std::max(8, static_cast<int>(std::ceil(U * (tau + 1.0) / 2.0)));
    spec.max_intervals = std::max(spec.max_intervals, spec.init_panels * 8);
    double err = 0.0;
    cplx val = integrate_gk(f, 0.0, U, spec, &err);

    // cancellation floor: the integrand is O(exp(sigma U)) while the result may be tiny
    double round_off = 5e-17 * U * std::exp(std::min(sigma * U, 700.0));
    double total_err = err + round_off;
    if (q.throw_on_failure && std::abs(val) > 0.0 && total_err > 1e-2 * std::abs(val) &&
        total_err > q.abs_floor)
        throw tolerance_error("k_bessel: cancellation exceeds accuracy budget");
    return std::exp(-x) * val;
}

cplx k_bessel(cplx nu, double y, const QuadratureSpec& q) {
    return k_bessel_arg(nu, TWO_PI * y, q);
}

} // namespace rs
