#include "nlsdtn/perturbation.hpp"

#include <cmath>

#include "nlsdtn/glm_solver.hpp"
#include "nlsdtn/special.hpp"

namespace nlsdtn {

SampledFunction PerturbationSeries::g1_order(int n) const {
  std::vector<double> t(grid.N + 1);
  for (int i = 0; i <= grid.N; ++i) t[i] = grid.t(i);
  return SampledFunction(std::move(t), order(n).g1, 3);
}

PerturbationSeries expand(
    const std::vector<std::function<Complex(double)>>& g0_orders, int n_max,
    const TriangularGrid& grid, int lambda) {
  if (n_max < 1) throw std::invalid_argument("expand: n_max must be >= 1");
  const int N = grid.N;
  const double dt = grid.delta();
  const double eta = 2.0 * dt;
  const double lam = lambda;
  const Complex k1 = sqrt_2pi * exp_ipi4;
  const Complex k2 = sqrt_2pi * exp_mipi4;

  PerturbationSeries series;
  series.grid = grid;
  series.lambda = lambda;
  series.orders.resize(n_max);

  const size_t nodes = grid.node_count();
  // inverse Abel transforms of each computed order, kept for the recursion
  std::vector<std::vector<Complex>> ia1(n_max), ia2(n_max);
  for (int n = 0; n < n_max; ++n) {
    series.orders[n].M1.assign(nodes, Complex(0.0));
    series.orders[n].M2.assign(nodes, Complex(0.0));
    series.orders[n].g1.assign(N + 1, Complex(0.0));
    ia1[n].assign(nodes, Complex(0.0));
    ia2[n].assign(nodes, Complex(0.0));
  }

  auto g0k = [&](int k, double t) -> Complex {
    if (k < 1 || k > static_cast<int>(g0_orders.size()) || !g0_orders[k - 1])
      return 0.0;
    return g0_orders[k - 1](t);
  };

  detail::RowInverseAbel inv(N, eta);
  std::vector<Complex> row, d, ia;

  for (int n = 1; n <= n_max; ++n) {
    auto& ord = series.orders[n - 1];
    std::vector<Complex> phi1prev, phi2prev, phi2prev2, phi1cur, phi2cur;

    auto assemble_phi = [&](int i, std::vector<Complex>& p1,
                            std::vector<Complex>& p2) {
      const double t_i = grid.t(i);
      p1.assign(i + 1, Complex(0.0));
      p2.assign(i + 1, Complex(0.0));
      // cubic terms: sum over a + b + c = n with every factor at least 1
      for (int a = 1; a <= n - 2; ++a) {
        const Complex ga = g0k(a, t_i);
        if (ga == 0.0) continue;
        for (int b = 1; b <= n - 1 - a; ++b) {
          const int c = n - a - b;
          const Complex gb = g0k(b, t_i);
          if (gb == 0.0) continue;
          const Complex f1 = -iu * lam * ga * std::conj(gb);
          const Complex f2 = iu * std::conj(ga) * gb;
          const auto& m1c = series.orders[c - 1].M1;
          const auto& m2c = series.orders[c - 1].M2;
          for (int j = 0; j <= i; ++j) {
            const size_t id = grid.idx(i, j);
            p1[j] += f1 * m1c[id];
            p2[j] += f2 * m2c[id];
          }
        }
      }
      // quadratic terms: a + c = n
      for (int a = 1; a <= n - 1; ++a) {
        const int c = n - a;
        const Complex ga = g0k(a, t_i);
        const Complex g1a = series.orders[a - 1].g1[i];
        const auto& oc = series.orders[c - 1];
        const auto& a1c = ia1[c - 1];
        const auto& a2c = ia2[c - 1];
        for (int j = 0; j <= i; ++j) {
          const size_t id = grid.idx(i, j);
          p1[j] += -k1 * ga * a2c[id] + iu * g1a * oc.M2[id];
          p2[j] += -k1 * std::conj(ga) * a1c[id] -
                   iu * std::conj(g1a) * oc.M1[id];
        }
      }
    };

    for (int i = 0; i <= N; ++i) {
      const double t_i = grid.t(i);
      assemble_phi(i, phi1cur, phi2cur);

      if (i == 0) {
        ord.M1[grid.idx(0, 0)] = g0k(n, 0.0);
      } else {
        for (int j = 0; j < i; ++j)
          ord.M1[grid.idx(i, j)] = ord.M1[grid.idx(i - 1, j)] +
                                   0.5 * dt * (phi1prev[j] + phi1cur[j]);
        ord.M1[grid.idx(i, i)] = g0k(n, t_i);
        ord.M2[grid.idx(i, 0)] = 0.0;
        for (int j = 1; j <= i; ++j)
          ord.M2[grid.idx(i, j)] =
              ord.M2[grid.idx(i - 1, j - 1)] +
              lam * 0.5 * dt * (phi2prev[j - 1] + phi2cur[j]);
        if (i >= 3)
          ord.M2[grid.idx(i, 3)] += lam * detail::plus_head_correction(
                                              phi2prev2[1], phi2prev[2],
                                              phi2cur[3], dt);
      }

      // row inverse Abel transforms and the order-n Neumann coefficient
      row.assign(i + 1, Complex(0.0));
      for (int j = 0; j <= i; ++j) row[j] = ord.M1[grid.idx(i, j)];
      detail::row_derivative(row, eta, d);
      inv.apply(d, i + 1, ia);
      for (int j = 0; j <= i; ++j) ia1[n - 1][grid.idx(i, j)] = ia[j];
      const Complex a1_diag = ia[i];
      for (int j = 0; j <= i; ++j) row[j] = ord.M2[grid.idx(i, j)];
      detail::row_derivative(row, eta, d);
      inv.apply(d, i + 1, ia);
      for (int j = 0; j <= i; ++j) ia2[n - 1][grid.idx(i, j)] = ia[j];

      Complex g1n = -k2 * a1_diag;
      for (int a = 1; a <= n - 1; ++a)
        g1n += g0k(a, t_i) * series.orders[n - a - 1].M2[grid.idx(i, i)];
      ord.g1[i] = g1n;

      phi2prev2.swap(phi2prev);
      phi2prev.swap(phi2cur);
      phi1prev.swap(phi1cur);
    }
  }

  return series;
}

Complex g11_general(const std::function<Complex(double)>& g0dot, double t) {
  return -(exp_mipi4 / sqrt_pi) * abel(g0dot, t);
}

}  // namespace nlsdtn
