#pragma once

#include <functional>
#include <vector>

#include "nlsdtn/grid.hpp"
#include "nlsdtn/numbers.hpp"
#include "nlsdtn/sampled_function.hpp"

namespace nlsdtn {

/// Per-order kernels M1^{(n)}, M2^{(n)} and Neumann coefficients g1^{(n)}
/// on a common triangular grid.
struct PerturbationSeries {
  TriangularGrid grid;
  int lambda = 1;
  struct Order {
    std::vector<Complex> M1, M2;       // triangular storage
    std::vector<Complex> g1;           // per time node
  };
  std::vector<Order> orders;           // orders[n-1] = order n

  int max_order() const { return static_cast<int>(orders.size()); }
  const Order& order(int n) const { return orders.at(n - 1); }
  Complex m1(int n, int i, int j) const { return order(n).M1[grid.idx(i, j)]; }
  Complex m2(int n, int i, int j) const { return order(n).M2[grid.idx(i, j)]; }
  SampledFunction g1_order(int n) const;
};

/// Order-by-order solve of the nonlinear integral system: the order-n right
/// hand sides are assembled generically from all products of lower orders,
/// so each order is an explicit (non-iterative) characteristic march.
/// g0_orders[k] is the order-(k+1) boundary profile; missing orders are zero.
PerturbationSeries expand(
    const std::vector<std::function<Complex(double)>>& g0_orders, int n_max,
    const TriangularGrid& grid, int lambda = 1);

/// First-order Neumann coefficient for general data:
///   g11(t) = -(e^{-i pi/4}/sqrt(pi)) int_0^t g0dot(s)/sqrt(t-s) ds.
Complex g11_general(const std::function<Complex(double)>& g0dot, double t);

}  // namespace nlsdtn
