#pragma once

#include <vector>

#include "nlsdtn/numbers.hpp"

namespace nlsdtn {

/// Characteristic-aligned discretization of {0 < t < T, -t < s < t}:
/// nodes (t_i, s_j) with t_i = i*delta and s_j = -t_i + 2*j*delta for
/// 0 <= j <= i <= N. Both characteristic families t+s = const and
/// t-s = const pass exactly through nodes.
struct TriangularGrid {
  double T = 0.0;
  int N = 0;

  TriangularGrid() = default;
  TriangularGrid(double horizon, int steps);

  double delta() const { return T / N; }
  double t(int i) const { return T * i / N; }
  double s(int i, int j) const { return -t(i) + 2.0 * delta() * j; }
  /// flat index of node (i, j); rows are stored contiguously
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * (i + 1) / 2 + j;
  }
  size_t node_count() const { return static_cast<size_t>(N + 1) * (N + 2) / 2; }
};

/// Complex samples of the GLM kernels on a TriangularGrid. L1, L2 are
/// present only for Goursat solves; M-only fields leave them empty.
struct KernelField {
  TriangularGrid grid;
  std::vector<Complex> M1, M2;
  std::vector<Complex> L1, L2;  // empty when absent

  explicit KernelField(const TriangularGrid& g, bool with_L = false);
  bool has_L() const { return !L1.empty(); }

  Complex& m1(int i, int j) { return M1[grid.idx(i, j)]; }
  Complex& m2(int i, int j) { return M2[grid.idx(i, j)]; }
  Complex& l1(int i, int j) { return L1[grid.idx(i, j)]; }
  Complex& l2(int i, int j) { return L2[grid.idx(i, j)]; }
  const Complex& m1(int i, int j) const { return M1[grid.idx(i, j)]; }
  const Complex& m2(int i, int j) const { return M2[grid.idx(i, j)]; }
  const Complex& l1(int i, int j) const { return L1[grid.idx(i, j)]; }
  const Complex& l2(int i, int j) const { return L2[grid.idx(i, j)]; }
};

}  // namespace nlsdtn
