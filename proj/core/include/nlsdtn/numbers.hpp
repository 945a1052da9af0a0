#pragma once

#include <complex>
#include <numbers>

namespace nlsdtn {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr Complex iu{0.0, 1.0};

inline const double sqrt_pi = std::sqrt(pi);
inline const double sqrt_2pi = std::sqrt(2.0 * pi);
inline const double sqrt_pi_over_2 = std::sqrt(pi / 2.0);

// exp(+i pi/4) and exp(-i pi/4)
inline const Complex exp_ipi4{std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0};
inline const Complex exp_mipi4{std::numbers::sqrt2 / 2.0, -std::numbers::sqrt2 / 2.0};

}  // namespace nlsdtn
