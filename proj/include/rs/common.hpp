#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace rs {

using cplx = std::complex<double>;

inline constexpr double PI = 3.141592653589793238462643383279502884;
inline constexpr double TWO_PI = 2.0 * PI;
inline constexpr double LOG_PI = 1.144729885849400174143427351353058712;
inline constexpr double LOG_2PI = 1.837877066409345483560659472811235279;

// thrown when a documented precondition is violated
struct domain_error : std::domain_error {
    explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

// thrown when a numerical routine cannot reach its requested tolerance
struct tolerance_error : std::runtime_error {
    explicit tolerance_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

} // namespace rs
