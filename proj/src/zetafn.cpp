#include "rs/zetafn.hpp"

#include "rs/gammafn.hpp"

#include <cmath>

namespace rs {

namespace {

// B_2, B_4, ..., B_24
constexpr double BERNOULLI[12] = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
};

} // namespace

cplx zeta(cplx s) {
    if (std::abs(s - cplx(1.0)) < 1e-12) throw domain_error("zeta: pole at s = 1");
    if (s.real() < -0.5) {
        // reflection: zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)
        cplx t = cplx(1.0) - s;
        cplx chi = std::exp(s * std::log(cplx(2.0)) + (s - 1.0) * std::log(cplx(PI)) +
                            log_sin_pi(0.5 * s) + log_gamma(t));
        return chi * zeta(t);
    }
    int N = std::max(25, static_cast<int>(std::ceil(1.3 * std::abs(s.imag()))) + 5);
    constexpr int J = 12;
    cplx sum(0.0);
    for (int m = 1; m < N; ++m) sum += std::exp(-s * std::log(static_cast<double>(m)));
    cplx Ns = std::exp(-s * std::log(static_cast<double>(N)));
    sum += Ns * (static_cast<double>(N) / (s - 1.0) + 0.5);
    // correction terms B_{2j}/(2j)! * s(s+1)..(s+2j-2) * N^{1-s-2j}
    cplx poch = s;
    double fact = 2.0; // (2j)! running
    double Npow = 1.0 / N;
    for (int j = 1; j <= J; ++j) {
        sum += (BERNOULLI[j - 1] / fact) * poch * Ns * Npow;
        // advance to next j: multiply pochhammer by (s+2j-1)(s+2j)
        poch *= (s + cplx(2.0 * j - 1.0)) * (s + cplx(2.0 * j));
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
        Npow /= static_cast<double>(N) * N;
    }
    return sum;
}

cplx xi_completed(cplx s) { return std::exp(log_xi(s)); }

cplx log_xi(cplx s) {
    if (std::abs(s) < 1e-12 || std::abs(s - cplx(1.0)) < 1e-12)
        throw domain_error("log_xi: pole at s = 0 or s = 1");
    return -0.5 * s * LOG_PI + log_gamma(0.5 * s) + std::log(zeta(s));
}

} // namespace rs
