#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "nlsdtn/numbers.hpp"

namespace nlsdtn::quad {

using RealFn = std::function<double(double)>;

/// Gauss-Legendre nodes and weights on [-1, 1]. Cached per order.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussRule& gauss_legendre(int n);

/// Nodes and weights such that sum_i w_i f(x_i) ~ int_a^b f(x)/sqrt(b-x) dx,
/// built from the order-2n Gauss-Legendre rule via x = b - (b-a) u^2.
GaussRule gauss_jacobi_sqrt(int n, double a, double b);

/// Fixed-order Gauss-Legendre on [a, b].
template <typename F>
auto gl_integrate(F&& f, double a, double b, int n = 16) {
  const GaussRule& r = gauss_legendre(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  decltype(f(mid) * 1.0) s{};
  for (int i = 0; i < n; ++i) s += r.weights[i] * f(mid + half * r.nodes[i]);
  return half * s;
}

/// Composite fixed-order rule with panels no wider than max_width.
template <typename F>
auto composite_integrate(F&& f, double a, double b, double max_width, int n = 12) {
  using R = decltype(f(a));
  if (b <= a) return R{};
  const int m = std::max(1, static_cast<int>(std::ceil((b - a) / max_width)));
  const double w = (b - a) / m;
  R s{};
  for (int k = 0; k < m; ++k) s += gl_integrate(f, a + k * w, a + (k + 1) * w, n);
  return s;
}

/// Composite rule for integrands behaving like a polynomial in sqrt(x - a)
/// near x = a (anything built from h, H_c, H_s). The leading unit of the
/// range is integrated in the variable v = sqrt(x - a).
template <typename F>
auto composite_sqrt_origin(F&& f, double a, double b, double max_width, int n = 12) {
  using R = decltype(f(b));
  if (b <= a) return R{};
  const double s0 = std::min(1.0, 0.5 * (b - a));
  auto head = [&](double v) { return 2.0 * v * f(a + v * v); };
  R acc = composite_integrate(head, 0.0, std::sqrt(s0),
                              std::max(0.25 * max_width, 0.05), n);
  acc += composite_integrate(f, a + s0, b, max_width, n);
  return acc;
}

/// int_0^t f(s)/sqrt(t-s) ds for f oscillating with angular frequency at
/// most freq. The endpoint s = t is removed by s = t - u^2 with panel
/// boundaries at equal phase increments; the origin is integrated in
/// v = sqrt(s) so half-power behaviour of f at 0 costs nothing.
template <typename F>
auto integrate_abel(F&& f, double t, double freq, int n = 12) {
  using R = decltype(f(t));
  if (t <= 0.0) return R{};
  const double w = std::max(freq, 0.5);
  const double s0 = std::min(1.0, 0.5 * t);
  auto head = [&](double v) { return 2.0 * v * f(v * v) / std::sqrt(t - v * v); };
  R acc = composite_integrate(head, 0.0, std::sqrt(s0), 0.2, n);
  const double umax = std::sqrt(t - s0);
  const GaussRule& r = gauss_legendre(n);
  double u0 = 0.0;
  while (u0 < umax) {
    const double kphase = std::floor(w * u0 * u0 / pi) + 1.0;
    double u1 = std::min({umax, std::sqrt(pi * kphase / w), u0 + 0.5});
    if (u1 <= u0) u1 = std::min(umax, u0 + 1e-3);
    const double mid = 0.5 * (u0 + u1), half = 0.5 * (u1 - u0);
    R s{};
    for (int i = 0; i < n; ++i) {
      const double u = mid + half * r.nodes[i];
      s += r.weights[i] * 2.0 * f(t - u * u);
    }
    acc += half * s;
    u0 = u1;
  }
  return acc;
}

inline double abel_oscillatory(const RealFn& f, double t, double freq, int n = 12) {
  return integrate_abel(f, t, freq, n);
}

/// Piecewise-Chebyshev antiderivative of f on [0, length]: builds once,
/// evaluates F(s) = int_0^s f for any s in the range. If sqrt_origin is set
/// the first unit of the range is represented in the variable v = sqrt(s).
class CumulativeIntegral {
 public:
  CumulativeIntegral() = default;
  /// freq controls the panel width (smaller panels for faster oscillation).
  CumulativeIntegral(const RealFn& f, double length, double freq,
                     bool sqrt_origin = true, int order = 20);

  double operator()(double s) const;
  double length() const { return length_; }

 private:
  struct Panel {
    double a, b;                // panel range in the working variable
    std::vector<double> anti;   // Chebyshev coefficients of the antiderivative
    double full;                // integral over the whole panel
    double prefix;              // integral of everything before this panel
  };
  // region 1 panels live in v = sqrt(s) on [0, sqrt(s0)], region 2 in s.
  double length_ = 0.0;
  double split_ = 0.0;  // s0; v-panels cover [0, sqrt(s0)]
  std::vector<Panel> vpanels_;
  std::vector<Panel> spanels_;

  static void build_panels(const RealFn& g, double a, double b, double width,
                           int order, std::vector<Panel>& out, double& acc);
  static double eval_panels(const std::vector<Panel>& panels, double x);
};

}  // namespace nlsdtn::quad
