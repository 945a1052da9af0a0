#include "nlsdtn/characteristics.hpp"

#include <stdexcept>

namespace nlsdtn {

namespace {

Complex trapezoid_path(const RhsFn& rhs, double a, double b,
                       const std::function<double(double)>& sigma, int steps) {
  if (steps < 1) throw std::invalid_argument("characteristic: steps must be >= 1");
  const double h = (b - a) / steps;
  Complex acc = 0.5 * (rhs(a, sigma(a)) + rhs(b, sigma(b)));
  for (int k = 1; k < steps; ++k) {
    const double tau = a + k * h;
    acc += rhs(tau, sigma(tau));
  }
  return acc * h;
}

}  // namespace

Complex characteristic_minus(const DiagFn& diag, const RhsFn& rhs, double t,
                             double s, int steps) {
  if (s < -t || s > t)
    throw std::invalid_argument("characteristic_minus: need -t <= s <= t");
  const double base = 0.5 * (t + s);
  Complex val = diag(base);
  if (t > base)
    val += trapezoid_path(rhs, base, t, [&](double tau) { return t + s - tau; },
                          steps);
  return val;
}

Complex characteristic_plus(const DiagFn& antidiag, const RhsFn& rhs, double t,
                            double s, int steps) {
  if (s < -t || s > t)
    throw std::invalid_argument("characteristic_plus: need -t <= s <= t");
  const double base = 0.5 * (t - s);
  Complex val = antidiag(base);
  if (t > base)
    val += trapezoid_path(rhs, base, t, [&](double tau) { return tau + s - t; },
                          steps);
  return val;
}

}  // namespace nlsdtn
