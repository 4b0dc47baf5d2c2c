#include "rs/gammafn.hpp"

#include <cmath>

namespace rs {

namespace {

// Lanczos approximation, g = 607/128, 15 coefficients
constexpr double LANCZOS_G = 4.7421875;
constexpr double LANCZOS_C[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

cplx log_gamma_core(cplx z) {
    // valid for Re z >= 0.5
    cplx sum(LANCZOS_C[0], 0.0);
    for (int k = 1; k < 15; ++k) sum += LANCZOS_C[k] / (z + cplx(k - 1.0));
    cplx t = z + (LANCZOS_G - 0.5);
    return 0.5 * LOG_2PI + (z - 0.5) * std::log(t) - t + std::log(sum);
}

} // namespace

cplx log_sin_pi(cplx z) {
    // sin(pi z) = -(exp(-i pi z) / 2i) (1 - exp(2 i pi z)); pick the half-plane
    // where the exponential inside log1p-style term is small
    if (z.imag() >= 0.0) {
        cplx w = std::exp(cplx(0.0, 2.0 * PI) * z);
        return cplx(0.0, -PI) * z + std::log(cplx(1.0) - w) - std::log(cplx(0.0, -2.0));
    }
    return std::conj(log_sin_pi(std::conj(z)));
}

cplx log_gamma(cplx z) {
    if (z.real() >= 0.5) return log_gamma_core(z);
    // reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
    return LOG_PI - log_sin_pi(z) - log_gamma_core(cplx(1.0) - z);
}

cplx gamma_complex(cplx z) {
    if (z.imag() == 0.0) {
        double r = z.real();
        double nearest = std::round(r);
        if (nearest <= 0.0 && std::abs(r - nearest) < 1e-12)
            throw domain_error("gamma_complex: argument within 1e-12 of a nonpositive integer");
    }
    return std::exp(log_gamma(z));
}

cplx digamma(cplx z) {
    if (z.real() < 0.5) {
        // psi(z) = psi(1-z) - pi cot(pi z)
        cplx w = cplx(1.0) - z;
        cplx cot;
        if (std::abs(z.imag()) > 20.0) {
            cot = cplx(0.0, (z.imag() > 0 ? -1.0 : 1.0));
        } else {
            cot = std::cos(PI * z) / std::sin(PI * z);
        }
        return digamma(w) - PI * cot;
    }
    cplx sum(LANCZOS_C[0], 0.0), dsum(0.0, 0.0);
    for (int k = 1; k < 15; ++k) {
        cplx d = cplx(1.0) / (z + cplx(k - 1.0));
        sum += LANCZOS_C[k] * d;
        dsum -= LANCZOS_C[k] * d * d;
    }
    cplx t = z + (LANCZOS_G - 0.5);
    return std::log(t) + (z - 0.5) / t - 1.0 + dsum / sum;
}

} // namespace rs
