#include "nlsdtn/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace nlsdtn::quad {

namespace {

// Legendre P_n and P_n' by recurrence.
void legendre(int n, double x, double& p, double& dp) {
  double p0 = 1.0, p1 = x;
  if (n == 0) {
    p = 1.0;
    dp = 0.0;
    return;
  }
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  dp = n * (x * p1 - p0) / (x * x - 1.0);
}

GaussRule make_gauss_legendre(int n) {
  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Newton from the Chebyshev-like initial guess.
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double p, dp;
    for (int it = 0; it < 100; ++it) {
      legendre(n, x, p, dp);
      const double dx = -p / dp;
      x += dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre(n, x, p, dp);
    r.nodes[n - 1 - i] = x;
    r.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  static std::map<int, GaussRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_gauss_legendre(n)).first;
  return it->second;
}

GaussRule gauss_jacobi_sqrt(int n, double a, double b) {
  // int_a^b f(x) (b-x)^{-1/2} dx = 2 sqrt(b-a) int_0^1 f(b - (b-a) u^2) du
  const GaussRule& gl = gauss_legendre(2 * n);
  GaussRule r;
  const double L = b - a;
  const double s = std::sqrt(L);
  for (int i = 0; i < 2 * n; ++i) {
    const double u = 0.5 * (gl.nodes[i] + 1.0);
    if (u <= 0.0) continue;
    r.nodes.push_back(b - L * u * u);
    r.weights.push_back(s * gl.weights[i]);
  }
  return r;
}

// ---------------------------------------------------------------------------
// CumulativeIntegral

namespace {

// Chebyshev coefficients of f on [a,b] from order+1 Chebyshev-Lobatto samples.
std::vector<double> cheb_coeffs(const RealFn& f, double a, double b, int order) {
  const int n = order;
  std::vector<double> fx(n + 1);
  for (int j = 0; j <= n; ++j) {
    const double x = std::cos(pi * j / n);
    fx[j] = f(0.5 * (a + b) + 0.5 * (b - a) * x);
  }
  std::vector<double> c(n + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    double s = 0.0;
    for (int j = 0; j <= n; ++j) {
      const double w = (j == 0 || j == n) ? 0.5 : 1.0;
      s += w * fx[j] * std::cos(pi * k * j / n);
    }
    c[k] = 2.0 * s / n;
    if (k == 0 || k == n) c[k] *= 0.5;
  }
  return c;
}

// Antiderivative coefficients of a Chebyshev series, scaled to [a,b],
// normalized so the antiderivative vanishes at x = a.
std::vector<double> cheb_antiderivative(const std::vector<double>& c, double a,
                                        double b) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<double> A(n + 2, 0.0);
  const double half = 0.5 * (b - a);
  for (int k = 1; k <= n + 1; ++k) {
    // int T_0 = T_1, int T_k = T_{k+1}/(2(k+1)) - T_{k-1}/(2(k-1))
    const double ckm1 = (k == 1) ? 2.0 * c[0] : c[k - 1];
    const double ckp1 = (k + 1 <= n) ? c[k + 1] : 0.0;
    A[k] = half * (ckm1 - ckp1) / (2.0 * k);
  }
  // fix constant term so A(-1) = 0
  double at_m1 = 0.0;
  for (int k = 1; k <= n + 1; ++k) at_m1 += A[k] * ((k % 2) ? -1.0 : 1.0);
  A[0] = -at_m1;
  return A;
}

double clenshaw(const std::vector<double>& c, double x) {
  double b1 = 0.0, b2 = 0.0;
  for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k) {
    const double b0 = 2.0 * x * b1 - b2 + c[k];
    b2 = b1;
    b1 = b0;
  }
  return x * b1 - b2 + c[0];
}

}  // namespace

void CumulativeIntegral::build_panels(const RealFn& g, double a, double b,
                                      double width, int order,
                                      std::vector<Panel>& out, double& acc) {
  if (b <= a) return;
  const int m = std::max(1, static_cast<int>(std::ceil((b - a) / width)));
  const double w = (b - a) / m;
  for (int k = 0; k < m; ++k) {
    Panel p;
    p.a = a + k * w;
    p.b = a + (k + 1) * w;
    p.anti = cheb_antiderivative(cheb_coeffs(g, p.a, p.b, order), p.a, p.b);
    p.full = clenshaw(p.anti, 1.0);
    p.prefix = acc;
    acc += p.full;
    out.push_back(std::move(p));
  }
}

CumulativeIntegral::CumulativeIntegral(const RealFn& f, double length, double freq,
                                       bool sqrt_origin, int order) {
  length_ = length;
  const double w = std::max(freq, 0.5);
  const double width = std::min(0.75, 0.5 * pi / w);
  double acc = 0.0;
  if (sqrt_origin) {
    split_ = std::min(1.0, length);
    auto g = [&f](double v) { return 2.0 * v * f(v * v); };
    build_panels(g, 0.0, std::sqrt(split_), std::min(width, 0.25), order, vpanels_,
                 acc);
  } else {
    split_ = 0.0;
  }
  build_panels(f, split_, length, width, order, spanels_, acc);
}

double CumulativeIntegral::eval_panels(const std::vector<Panel>& panels, double x) {
  // panels are contiguous; find the one containing x
  size_t lo = 0, hi = panels.size();
  while (hi - lo > 1) {
    const size_t mid = (lo + hi) / 2;
    if (x < panels[mid].a) hi = mid;
    else lo = mid;
  }
  const Panel& p = panels[lo];
  const double xi = std::clamp(2.0 * (x - p.a) / (p.b - p.a) - 1.0, -1.0, 1.0);
  return p.prefix + clenshaw(p.anti, xi);
}

double CumulativeIntegral::operator()(double s) const {
  if (s <= 0.0) return 0.0;
  if (s > length_ * (1.0 + 1e-12) && s > length_ + 1e-12)
    throw std::domain_error("CumulativeIntegral: argument beyond table range");
  s = std::min(s, length_);
  if (s <= split_ && !vpanels_.empty()) return eval_panels(vpanels_, std::sqrt(s));
  return eval_panels(spanels_, s);
}

}  // namespace nlsdtn::quad
