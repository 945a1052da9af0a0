#include "nlsdtn/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "nlsdtn/quadrature.hpp"
#include "nlsdtn/special.hpp"

namespace nlsdtn::oracle {

QuadratureResult adaptive_integrate(const std::function<Complex(double)>& f,
                                    double a, double b,
                                    const QuadratureSpec& spec) {
  if (a > b) throw std::invalid_argument("adaptive_integrate: a > b");
  if (a == b) return {Complex(0.0), 0.0};
  struct Seg {
    double a, b;
  };
  std::vector<Seg> stack{{a, b}};
  Complex total = 0.0;
  double err = 0.0;
  int used = 0;
  // first pass estimate of the scale for the relative tolerance
  const double scale0 = std::abs(quad::gl_integrate(f, a, b, 15));
  while (!stack.empty()) {
    const Seg s = stack.back();
    stack.pop_back();
    const Complex coarse = quad::gl_integrate(f, s.a, s.b, 7);
    const Complex fine = quad::gl_integrate(f, s.a, s.b, 15);
    const double e = std::abs(fine - coarse);
    const double frac = (s.b - s.a) / (b - a);
    const double allowed =
        std::max(spec.absolute_tol, spec.relative_tol * std::max(scale0, 1e-300)) *
        std::max(frac, 1e-6);
    if (e <= allowed || (s.b - s.a) <= 1e-14 * (b - a)) {
      total += fine;
      err += e;
    } else {
      if (++used > spec.max_subdivisions)
        throw std::runtime_error(
            "adaptive_integrate: tolerance not reached within max_subdivisions");
      const double m = 0.5 * (s.a + s.b);
      stack.push_back({s.a, m});
      stack.push_back({m, s.b});
    }
  }
  return {total, err};
}

QuadratureResult adaptive_integrate(const std::function<double(double)>& f,
                                    double a, double b,
                                    const QuadratureSpec& spec) {
  auto fc = [&](double x) { return Complex(f(x), 0.0); };
  return adaptive_integrate(std::function<Complex(double)>(fc), a, b, spec);
}

QuadratureResult integrate_sqrt_endpoint(const std::function<Complex(double)>& f,
                                         double a, double b,
                                         const QuadratureSpec& spec) {
  if (b <= a) return {Complex(0.0), 0.0};
  if (spec.singularity_handling == SingularityHandling::substitution) {
    auto g = [&](double u) { return 2.0 * f(b - u * u); };
    return adaptive_integrate(std::function<Complex(double)>(g), 0.0,
                              std::sqrt(b - a), spec);
  }
  // sqrt-weighted nodes; order doubled until two rules agree
  Complex prev = 0.0;
  for (int n = 24; n <= 768; n *= 2) {
    const quad::GaussRule r = quad::gauss_jacobi_sqrt(n, a, b);
    Complex acc = 0.0;
    for (size_t i = 0; i < r.nodes.size(); ++i) acc += r.weights[i] * f(r.nodes[i]);
    if (n > 24) {
      const double e = std::abs(acc - prev);
      if (e <= std::max(spec.absolute_tol, spec.relative_tol * std::abs(acc)))
        return {acc, e};
    }
    prev = acc;
  }
  return {prev, std::abs(prev) * 1e-8};
}

namespace {

double phi_eval(int which, double x) {
  switch (which) {
    case 0: return std::sin(x);
    case 1: return std::cos(x);
    default: return h_exact(x);
  }
}

struct TripleFns {
  int outer, middle, inner;
};

TripleFns kernel_fns(TripleKernel k) {
  switch (k) {
    case TripleKernel::ssc: return {0, 0, 1};  // sin, sin, cos
    case TripleKernel::shh: return {0, 2, 2};  // sin, h, h
    case TripleKernel::hsh: return {2, 0, 2};  // h, sin, h
    default: return {2, 2, 0};                 // h, h, sin
  }
}

// int_p^q phi(x) (c - x)^{-3/2} dx, semi-analytic per panel: the slowly
// varying factor is represented by the cubic through four panel nodes and
// integrated against the exact kernel moments.
double inner_panel(int phi, double p, double q, double c) {
  const double w = q - p;
  const double m = 0.5 * (p + q);
  const double mu = c - m;
  if (w < 0.2 * (c - q)) {
    // far from the singularity the kernel is smooth on the panel and the
    // moment formula below would cancel catastrophically; plain quadrature
    return quad::gl_integrate(
        [phi, c](double x) { return phi_eval(phi, x) * std::pow(c - x, -1.5); },
        p, q, 8);
  }
  const double dp = c - p, dq = c - q;
  const double rdp = std::sqrt(dp), rdq = std::sqrt(dq);
  // I_j = int d^{j - 3/2} over [dq, dp]
  const double I0 = 2.0 * (1.0 / rdq - 1.0 / rdp);
  const double I1 = 2.0 * (rdp - rdq);
  const double I2 = (2.0 / 3.0) * (dp * rdp - dq * rdq);
  const double I3 = 0.4 * (dp * dp * rdp - dq * dq * rdq);
  // kernel moments M_k = int (x - m)^k (c - x)^{-3/2} dx, x - m = mu - d
  const double M0 = I0;
  const double M1 = mu * I0 - I1;
  const double M2 = mu * mu * I0 - 2.0 * mu * I1 + I2;
  const double M3 = mu * mu * mu * I0 - 3.0 * mu * mu * I1 + 3.0 * mu * I2 - I3;
  // cubic through nodes p + i w/3 in the variable y = (x - m)/w in [-1/2, 1/2]
  const double f0 = phi_eval(phi, p);
  const double f1 = phi_eval(phi, p + w / 3.0);
  const double f2 = phi_eval(phi, p + 2.0 * w / 3.0);
  const double f3 = phi_eval(phi, q);
  // Lagrange coefficients of y^0..y^3 for nodes y = -1/2, -1/6, 1/6, 1/2
  const double a0 = (-f0 + 9.0 * f1 + 9.0 * f2 - f3) / 16.0;
  const double a1 = (f0 - 27.0 * f1 + 27.0 * f2 - f3) / 8.0;
  const double a2 = 4.5 * (f0 - f1 - f2 + f3) / 2.0;
  const double a3 = 4.5 * (-f0 + 3.0 * f1 - 3.0 * f2 + f3);
  return a0 * M0 + a1 * M1 / w + a2 * M2 / (w * w) + a3 * M3 / (w * w * w);
}

// Panels graded toward the near-singular end x = upper (distance c - upper)
// and, when the slowly varying factor is h (infinite slope at 0), toward
// x = 0 as well. Width <= min(phase cap, grade * distance).
double inner_pass(int phi, double upper, double c, double cap, double grade) {
  const bool sqrt_zero = (phi == 2);  // h ~ 2 sqrt(x) near x = 0
  double total = 0.0;
  double q = upper;
  while (q > 0.0) {
    double width = std::min({cap, grade * (c - q), q});
    if (sqrt_zero) width = std::min(width, std::max(grade * q, 1e-7));
    const double p = q - width;
    total += inner_panel(phi, p, q, c);
    q = (p < 1e-12 * upper) ? 0.0 : p;
  }
  return total;
}

}  // namespace

// one full evaluation at a fixed resolution level; all three layers use
// deterministic composite rules so refinement is a clean parameter scaling
static double triple_pass_impl(const TripleFns& fns, double t, double scale) {
  const double inner_cap = 0.3 * scale, inner_grade = 0.5 * scale;
  const double mid_width = 0.4 * scale;
  const double outer_width = 0.15 * scale;  // in v = sqrt(t - t')

  auto middle = [&](double tp) -> double {
    const double a = t - tp;
    auto f = [&](double tpp) -> double {
      if (tpp <= 0.0) return 0.0;
      return phi_eval(fns.middle, tpp) *
             inner_pass(fns.inner, tpp, a + tpp, inner_cap, inner_grade);
    };
    return quad::composite_sqrt_origin(f, 0.0, tp, mid_width, 10);
  };
  auto outer = [&](double v) -> double {
    const double tp = t - v * v;
    if (tp <= 0.0) return 0.0;
    return 2.0 * v * phi_eval(fns.outer, tp) * middle(tp);
  };
  return quad::composite_integrate(outer, 0.0, std::sqrt(t), outer_width, 10);
}

namespace detail {
double triple_pass(TripleKernel kernel, double t, double scale) {
  return triple_pass_impl(kernel_fns(kernel), t, scale);
}
}  // namespace detail

double triple_singular(TripleKernel kernel, double t, const QuadratureSpec& spec) {
  if (t < 0.0) throw std::invalid_argument("triple_singular: t must be >= 0");
  if (t > 12.0)
    throw std::invalid_argument("triple_singular: budget exceeded for t > 12");
  if (t == 0.0) return 0.0;
  const TripleFns fns = kernel_fns(kernel);
  double scale = 1.0;
  double prev = triple_pass_impl(fns, t, scale);
  for (int level = 0; level < 3; ++level) {
    scale *= 0.5;
    const double cur = triple_pass_impl(fns, t, scale);
    const double err = std::abs(cur - prev);
    if (err <= std::max(spec.absolute_tol, spec.relative_tol * std::abs(cur)))
      return cur;
    prev = cur;
  }
  throw std::runtime_error("triple_singular: tolerance not reached");
}

double h_series(double t) {
  if (t < 0.0) throw std::domain_error("h_series: t must be >= 0");
  if (t == 0.0) return 0.0;
  // 1F2(1; 3/4, 5/4; -t^2/4) by its power series, term-ratio stop at 1e-15
  const double x = -0.25 * t * t;
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < 500; ++k) {
    term *= x / ((0.75 + k) * (1.25 + k));
    sum += term;
    if (std::abs(term) < 1e-15 * std::abs(sum)) break;
  }
  return 2.0 * std::sqrt(t) * sum;
}

}  // namespace nlsdtn::oracle
