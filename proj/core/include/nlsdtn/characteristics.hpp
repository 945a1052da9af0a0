#pragma once

#include <functional>

#include "nlsdtn/numbers.hpp"

namespace nlsdtn {

using DiagFn = std::function<Complex(double)>;
using RhsFn = std::function<Complex(double, double)>;

/// Solution of F_t - F_s = f along the characteristic t + s = const:
///   F(t, s) = diag((t+s)/2) + int_{(t+s)/2}^{t} f(tau, t+s-tau) dtau,
/// integrated by the trapezoid rule on `steps` equal subdivisions.
Complex characteristic_minus(const DiagFn& diag, const RhsFn& rhs, double t,
                             double s, int steps);

/// Solution of F_t + F_s = f along the characteristic t - s = const:
///   F(t, s) = antidiag((t-s)/2) + int_{(t-s)/2}^{t} f(tau, tau + s - t) dtau.
Complex characteristic_plus(const DiagFn& antidiag, const RhsFn& rhs, double t,
                            double s, int steps);

}  // namespace nlsdtn
