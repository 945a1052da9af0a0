#include "nlsdtn/sampled_function.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace nlsdtn {

SampledFunction::SampledFunction(std::vector<double> nodes,
                                 std::vector<Complex> values,
                                 int interpolation_order)
    : nodes_(std::move(nodes)), values_(std::move(values)),
      order_(interpolation_order) {
  if (nodes_.size() != values_.size())
    throw std::invalid_argument("SampledFunction: nodes/values length mismatch");
  if (nodes_.size() < 2)
    throw std::invalid_argument("SampledFunction: need at least two nodes");
  if (order_ < 1) throw std::invalid_argument("SampledFunction: order must be >= 1");
  for (size_t i = 1; i < nodes_.size(); ++i)
    if (!(nodes_[i] > nodes_[i - 1]))
      throw std::invalid_argument("SampledFunction: nodes must strictly increase");
}

size_t SampledFunction::stencil_start(double x, int width) const {
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
  long k = std::distance(nodes_.begin(), it) - 1;
  long start = k - (width - 1) / 2;
  start = std::clamp<long>(start, 0, static_cast<long>(nodes_.size()) - width);
  return static_cast<size_t>(start);
}

Complex SampledFunction::operator()(double x) const {
  const double eps = 1e-12 * std::max(1.0, std::abs(nodes_.back()));
  if (x < nodes_.front() - eps || x > nodes_.back() + eps)
    throw std::domain_error("SampledFunction: evaluation outside node range");
  x = std::clamp(x, nodes_.front(), nodes_.back());
  const int width = std::min<int>(order_ + 1, static_cast<int>(nodes_.size()));
  const size_t s = stencil_start(x, width);
  // Neville's scheme on the local stencil
  std::vector<Complex> p(values_.begin() + s, values_.begin() + s + width);
  for (int m = 1; m < width; ++m)
    for (int i = 0; i < width - m; ++i) {
      const double xa = nodes_[s + i], xb = nodes_[s + i + m];
      p[i] = ((x - xa) * p[i + 1] - (x - xb) * p[i]) / (xb - xa);
    }
  return p[0];
}

std::vector<Complex> SampledFunction::node_derivatives() const {
  const size_t n = nodes_.size();
  std::vector<Complex> d(n);
  const int width = std::min<int>(order_ + 1, static_cast<int>(n));
  for (size_t j = 0; j < n; ++j) {
    long start = static_cast<long>(j) - width / 2;
    start = std::clamp<long>(start, 0, static_cast<long>(n) - width);
    // derivative of the local Lagrange interpolant at node j
    Complex acc = 0.0;
    for (int i = 0; i < width; ++i) {
      const size_t gi = start + i;
      // dL_i/dx at x_j
      double dl = 0.0;
      for (int m = 0; m < width; ++m) {
        if (m == i) continue;
        double prod = 1.0;
        for (int q = 0; q < width; ++q) {
          if (q == i || q == m) continue;
          prod *= (nodes_[j] - nodes_[start + q]) / (nodes_[gi] - nodes_[start + q]);
        }
        dl += prod / (nodes_[gi] - nodes_[start + m]);
      }
      acc += dl * values_[gi];
    }
    d[j] = acc;
  }
  return d;
}

SampledFunction SampledFunction::from_callable(
    const std::function<Complex(double)>& f, double a, double b, int n, int order) {
  std::vector<double> xs(n + 1);
  std::vector<Complex> ys(n + 1);
  for (int i = 0; i <= n; ++i) {
    xs[i] = a + (b - a) * i / n;
    ys[i] = f(xs[i]);
  }
  return SampledFunction(std::move(xs), std::move(ys), order);
}

}  // namespace nlsdtn
