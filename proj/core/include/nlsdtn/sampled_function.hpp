#pragma once

#include <functional>
#include <vector>

#include "nlsdtn/numbers.hpp"

namespace nlsdtn {

/// Complex samples on strictly increasing abscissae with local polynomial
/// interpolation of a fixed small order. Evaluation outside the node range
/// throws std::domain_error.
class SampledFunction {
 public:
  SampledFunction() = default;
  SampledFunction(std::vector<double> nodes, std::vector<Complex> values,
                  int interpolation_order = 3);

  Complex operator()(double x) const;

  /// Nodal derivatives by finite differences: centered in the interior,
  /// one-sided at the ends, order matching the interpolation order.
  std::vector<Complex> node_derivatives() const;

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<Complex>& values() const { return values_; }
  int interpolation_order() const { return order_; }
  double front() const { return nodes_.front(); }
  double back() const { return nodes_.back(); }
  size_t size() const { return nodes_.size(); }

  /// Samples a callable on n+1 uniform nodes over [a, b].
  static SampledFunction from_callable(const std::function<Complex(double)>& f,
                                       double a, double b, int n, int order = 3);

 private:
  std::vector<double> nodes_;
  std::vector<Complex> values_;
  int order_ = 3;

  size_t stencil_start(double x, int width) const;
};

}  // namespace nlsdtn
