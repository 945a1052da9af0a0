#include "nlsdtn/special.hpp"

#include <cmath>
#include <stdexcept>

#include "nlsdtn/fresnel.hpp"
#include "nlsdtn/quadrature.hpp"

namespace nlsdtn {

double h_exact(double t) {
  if (t < 0.0) throw std::domain_error("h_exact: t must be >= 0");
  if (t == 0.0) return 0.0;
  const auto [c, s] = fresnel(std::sqrt(2.0 * t / pi));
  return sqrt_2pi * (c * std::cos(t) + s * std::sin(t));
}

double h_prime(double t) {
  if (t <= 0.0) throw std::domain_error("h_prime: t must be > 0");
  const auto [c, s] = fresnel(std::sqrt(2.0 * t / pi));
  return 1.0 / std::sqrt(t) + sqrt_2pi * (s * std::cos(t) - c * std::sin(t));
}

double h_minus_leading(double t) {
  if (t < 0.0) throw std::domain_error("h_minus_leading: t must be >= 0");
  if (t == 0.0) return -sqrt_pi_over_2;
  const auto [c, s] = fresnel(std::sqrt(2.0 * t / pi));
  // sqrt(2 pi)((C - 1/2) cos t + (S - 1/2) sin t); exact for all t, but the
  // cancellation is only benign because C, S -> 1/2.
  return sqrt_2pi * ((c - 0.5) * std::cos(t) + (s - 0.5) * std::sin(t));
}

double hc_exact(double t) {
  if (t < 0.0) throw std::domain_error("hc_exact: t must be >= 0");
  if (t == 0.0) return 0.0;
  const auto [c, s] = fresnel(std::sqrt(2.0 * t / pi));
  return 0.25 * (sqrt_2pi * c * (2.0 * t + std::sin(2.0 * t)) -
                 sqrt_2pi * s * std::cos(2.0 * t) - 2.0 * std::sqrt(t) * std::sin(t));
}

double hs_exact(double t) {
  if (t < 0.0) throw std::domain_error("hs_exact: t must be >= 0");
  if (t == 0.0) return 0.0;
  const auto [c, s] = fresnel(std::sqrt(2.0 * t / pi));
  return 0.25 * (2.0 * std::sqrt(t) * std::cos(t) -
                 sqrt_2pi * (c * std::cos(2.0 * t) +
                             s * (std::sin(2.0 * t) - 2.0 * t)));
}

Complex abel(const std::function<Complex(double)>& f, double t) {
  if (t < 0.0) throw std::domain_error("abel: t must be >= 0");
  if (t == 0.0) return 0.0;
  // s = t - u^2; panels sized adaptively by bisection against a finer rule.
  auto g = [&](double u) { return 2.0 * f(t - u * u); };
  const double umax = std::sqrt(t);
  // simple adaptive bisection with embedded GL7/GL15 estimate
  struct Seg {
    double a, b;
  };
  std::vector<Seg> stack{{0.0, umax}};
  Complex total = 0.0;
  int used = 0;
  while (!stack.empty()) {
    const Seg sg = stack.back();
    stack.pop_back();
    const Complex coarse = quad::gl_integrate(g, sg.a, sg.b, 7);
    const Complex fine = quad::gl_integrate(g, sg.a, sg.b, 15);
    if (std::abs(fine - coarse) < 1e-12 * (1.0 + std::abs(fine)) ||
        (sg.b - sg.a) < 1e-12 * umax || ++used > 4000) {
      total += fine;
    } else {
      const double m = 0.5 * (sg.a + sg.b);
      stack.push_back({sg.a, m});
      stack.push_back({m, sg.b});
    }
  }
  return total;
}

double abel(const std::function<double(double)>& f, double t) {
  auto fc = [&](double s) { return Complex(f(s), 0.0); };
  return abel(std::function<Complex(double)>(fc), t).real();
}

Complex abel(const SampledFunction& f, double t) {
  if (f.front() > 0.0 || f.back() < t)
    throw std::domain_error("abel: sampled function must cover [0, t]");
  auto fc = [&](double s) { return f(s); };
  return abel(std::function<Complex(double)>(fc), t);
}

Complex inverse_abel(const SampledFunction& row, double t, double s,
                     double boundary_tol) {
  const auto& xs = row.nodes();
  if (std::abs(xs.front() + t) > 1e-9 * std::max(1.0, t))
    throw std::domain_error("inverse_abel: row must start at tau = -t");
  if (s < -t - 1e-12 || s > t + 1e-12)
    throw std::domain_error("inverse_abel: s outside [-t, t]");
  if (std::abs(row.values().front()) > boundary_tol)
    throw std::domain_error(
        "inverse_abel: F(t, -t) != 0, simplified inverse not applicable");
  if (s <= xs.front()) return 0.0;

  const std::vector<Complex> d = row.node_derivatives();
  // product integration of the piecewise-linear derivative against the kernel
  Complex acc = 0.0;
  for (size_t k = 0; k + 1 < xs.size() && xs[k] < s; ++k) {
    const double ta = xs[k];
    const double tb = std::min(xs[k + 1], s);
    const double a = s - ta;
    const double b = s - tb;
    const double sa = std::sqrt(a), sb = std::sqrt(b);
    const double w0 = 2.0 * (sa - sb);
    const double w1 =
        (a * w0 - 2.0 / 3.0 * (a * sa - b * sb)) / (xs[k + 1] - xs[k]);
    // derivative linear on the panel: d(tau) = d_k + (d_{k+1}-d_k)(tau-ta)/dx
    acc += d[k] * w0 + (d[k + 1] - d[k]) * w1;
  }
  return acc / pi;
}

AsymptoticDescriptor AsymptoticDescriptor::with_harmonics(int n) {
  AsymptoticDescriptor d;
  d.c.assign(n, {});
  d.s.assign(n, {});
  d.chat1.assign(n, Complex(0.0));
  d.shat1.assign(n, Complex(0.0));
  return d;
}

Complex AsymptoticDescriptor::evaluate(double t) const {
  Complex acc = 0.0;
  for (int j = 0; j <= 4; ++j) {
    Complex inner = f[j];
    for (int n = 1; n <= harmonics(); ++n)
      inner += c[n - 1][j] * std::cos(n * t) + s[n - 1][j] * std::sin(n * t);
    acc += std::pow(t, 0.5 * j) * inner;
  }
  Complex tail = fhat1;
  for (int n = 1; n <= harmonics(); ++n)
    tail += chat1[n - 1] * std::cos(n * t) + shat1[n - 1] * std::sin(n * t);
  acc += tail / std::sqrt(t);
  return acc;
}

Complex abel_asymptotics(const AsymptoticDescriptor& d, double t) {
  if (t <= 0.0) throw std::domain_error("abel_asymptotics: t must be > 0");
  Complex acc = d.fhat1 * pi;
  for (int j = 0; j <= 4; ++j) {
    // Gamma-ratio term for the pure power t^{j/2}
    acc += sqrt_pi * d.f[j] * std::pow(t, 0.5 * (j + 1)) *
           std::tgamma(0.5 * j + 1.0) / std::tgamma(0.5 * (j + 3));
  }
  for (int n = 1; n <= d.harmonics(); ++n) {
    const double nt = n * t;
    const double sn = std::sin(nt), cs = std::cos(nt);
    for (int j = 0; j <= 4; ++j) {
      const Complex cjn = d.c[n - 1][j];
      if (cjn != 0.0) {
        const double poly_s = -3.0 * (j - 2.0) * j - 8.0 * j * n * t +
                              32.0 * n * n * t * t;
        const double poly_c = -3.0 * (j - 2.0) * j + 8.0 * j * n * t +
                              32.0 * n * n * t * t;
        acc += sqrt_pi_over_2 * cjn / (32.0 * std::pow(n, 2.5)) *
               std::pow(t, 0.5 * j - 2.0) * (poly_s * sn + poly_c * cs);
      }
      const Complex sjn = d.s[n - 1][j];
      if (sjn != 0.0) {
        acc += sqrt_pi_over_2 * sjn / (4.0 * std::pow(n, 1.5)) *
               std::pow(t, 0.5 * j - 1.0) *
               ((j + 4.0 * n * t) * sn + (j - 4.0 * n * t) * cs);
      }
    }
  }
  return acc;
}

}  // namespace nlsdtn
