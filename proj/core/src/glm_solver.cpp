#include "nlsdtn/glm_solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace nlsdtn {

namespace detail {

void row_derivative(const std::vector<Complex>& row, double eta,
                    std::vector<Complex>& out) {
  const size_t n = row.size();
  out.resize(n);
  if (n == 1) {
    out[0] = 0.0;
    return;
  }
  if (n == 2) {
    out[0] = out[1] = (row[1] - row[0]) / eta;
    return;
  }
  out[0] = (-3.0 * row[0] + 4.0 * row[1] - row[2]) / (2.0 * eta);
  out[n - 1] = (3.0 * row[n - 1] - 4.0 * row[n - 2] + row[n - 3]) / (2.0 * eta);
  for (size_t k = 1; k + 1 < n; ++k) out[k] = (row[k + 1] - row[k - 1]) / (2.0 * eta);
}

RowInverseAbel::RowInverseAbel(int max_row, double eta) : eta_(eta) {
  // panel k against target m (lag r = m - k):
  //   int over the panel of (D_k + slope (tau - tau_k)) / sqrt(s - tau)
  // with a = r eta, b = (r-1) eta:
  //   W0 = 2(sqrt a - sqrt b),  W1 = (a W0 - (2/3)(a^{3/2} - b^{3/2})) / eta
  wa_.assign(max_row + 2, 0.0);
  wb_.assign(max_row + 2, 0.0);
  const double se = std::sqrt(eta);
  for (int r = 1; r <= max_row + 1; ++r) {
    const double sa = std::sqrt(static_cast<double>(r));
    const double sb = std::sqrt(static_cast<double>(r - 1));
    const double w0 = 2.0 * se * (sa - sb);
    const double w1 =
        se * (2.0 * r * (sa - sb) - (2.0 / 3.0) * (r * sa - (r - 1.0) * sb));
    wa_[r] = (w0 - w1) / pi;
    wb_[r] = w1 / pi;
  }
}

void RowInverseAbel::apply(const std::vector<Complex>& deriv, int row_len,
                           std::vector<Complex>& out) const {
  out.resize(row_len);
  out[0] = 0.0;
  for (int m = 1; m < row_len; ++m) {
    Complex acc = 0.0;
    for (int k = 0; k < m; ++k) {
      const int r = m - k;
      acc += deriv[k] * wa_[r] + deriv[k + 1] * wb_[r];
    }
    out[m] = acc;
  }
}

namespace {

// Correction replacing the trapezoid head of a plus-characteristic integral
// by the exact integral of the fit b sqrt(q) + c q + d q^{3/2} through the
// first three interior samples (the base sample is structurally zero).
struct HeadWeights {
  double w1, w2, w3;
};

HeadWeights head_weights() {
  // A [b c d]^T = [f1 f2 f3]^T with rows (sqrt j, j, j^{3/2}), j = 1,2,3;
  // integral over [0, 3 eta] = eta (J . [b c d]).
  double A[3][3];
  for (int j = 1; j <= 3; ++j) {
    A[j - 1][0] = std::sqrt(static_cast<double>(j));
    A[j - 1][1] = j;
    A[j - 1][2] = std::pow(static_cast<double>(j), 1.5);
  }
  const double J[3] = {2.0 / 3.0 * std::pow(3.0, 1.5), 4.5,
                       0.4 * std::pow(3.0, 2.5)};
  // solve A^T w = J  (so that J . A^{-1} f = w . f)
  double M[3][4] = {{A[0][0], A[1][0], A[2][0], J[0]},
                    {A[0][1], A[1][1], A[2][1], J[1]},
                    {A[0][2], A[1][2], A[2][2], J[2]}};
  for (int c = 0; c < 3; ++c) {
    int p = c;
    for (int r = c + 1; r < 3; ++r)
      if (std::abs(M[r][c]) > std::abs(M[p][c])) p = r;
    std::swap(M[c], M[p]);
    for (int r = 0; r < 3; ++r) {
      if (r == c) continue;
      const double f = M[r][c] / M[c][c];
      for (int q = c; q < 4; ++q) M[r][q] -= f * M[c][q];
    }
  }
  return {M[0][3] / M[0][0], M[1][3] / M[1][1], M[2][3] / M[2][2]};
}

const HeadWeights& head() {
  static const HeadWeights hw = head_weights();
  return hw;
}

double max_abs(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

// integral-fit head minus the trapezoid head over the first three panels
Complex plus_head_correction(Complex f1, Complex f2, Complex f3, double step) {
  const HeadWeights& hw = head();
  return step * (hw.w1 * f1 + hw.w2 * f2 + hw.w3 * f3 - (f1 + f2 + 0.5 * f3));
}

}  // namespace detail

DtnResult solve_dtn(const BoundaryData& g0, const TriangularGrid& grid,
                    const SolverOptions& opts) {
  const int N = grid.N;
  const double dt = grid.delta();
  const double eta = 2.0 * dt;
  const double lam = g0.lambda();
  const Complex k1 = sqrt_2pi * exp_ipi4;   // multiplies A^{-1} terms
  const Complex k2 = sqrt_2pi * exp_mipi4;  // in the g1 extraction

  KernelField field(grid, /*with_L=*/false);
  std::vector<Complex> g1v(N + 1, Complex(0.0));
  std::vector<double> times(N + 1);
  for (int i = 0; i <= N; ++i) times[i] = grid.t(i);
  std::vector<int> iters(N + 1, 0);
  double drift = 0.0;

  detail::RowInverseAbel inv(N, eta);

  std::vector<Complex> m1prev{g0.g0(0.0)}, m2prev{Complex(0.0)};
  std::vector<Complex> phi1prev, phi2prev, phi2prev2;
  std::vector<Complex> m1row, m2row, m1new, m2new, d1, d2, ia1, ia2, phi1cur,
      phi2cur;

  auto compute_phi = [&](double t_i, const std::vector<Complex>& m1,
                         const std::vector<Complex>& m2,
                         const std::vector<Complex>& a1,
                         const std::vector<Complex>& a2, Complex g1_i,
                         std::vector<Complex>& p1, std::vector<Complex>& p2) {
    const Complex g = g0.g0(t_i);
    const Complex gc = std::conj(g);
    const Complex g1c = std::conj(g1_i);
    const size_t n = m1.size();
    p1.resize(n);
    p2.resize(n);
    for (size_t j = 0; j < n; ++j) {
      p1[j] = -g * (iu * lam * gc * m1[j] + k1 * a2[j]) + iu * g1_i * m2[j];
      p2[j] = gc * (iu * g * m2[j] - k1 * a1[j]) - iu * g1c * m1[j];
    }
  };

  // row 0
  field.m1(0, 0) = g0.g0(0.0);
  field.m2(0, 0) = 0.0;
  {
    std::vector<Complex> a0{Complex(0.0)};
    compute_phi(0.0, m1prev, m2prev, a0, a0, Complex(0.0), phi1prev, phi2prev);
  }

  for (int i = 1; i <= N; ++i) {
    const double t_i = grid.t(i);
    const Complex g0_i = g0.g0(t_i);

    // predictor: continue the previous row along the characteristics
    m1row.assign(i + 1, Complex(0.0));
    m2row.assign(i + 1, Complex(0.0));
    for (int j = 0; j < i; ++j) m1row[j] = m1prev[j];
    m1row[i] = g0_i;
    for (int j = 1; j <= i; ++j) m2row[j] = m2prev[j - 1];
    m2row[0] = 0.0;

    Complex g1_i = 0.0;
    int it = 0;
    for (; it < opts.max_iter; ++it) {
      detail::row_derivative(m1row, eta, d1);
      detail::row_derivative(m2row, eta, d2);
      inv.apply(d1, i + 1, ia1);
      inv.apply(d2, i + 1, ia2);
      g1_i = g0_i * m2row[i] - k2 * ia1[i];
      compute_phi(t_i, m1row, m2row, ia1, ia2, g1_i, phi1cur, phi2cur);

      m1new.assign(i + 1, Complex(0.0));
      m2new.assign(i + 1, Complex(0.0));
      for (int j = 0; j < i; ++j)
        m1new[j] = m1prev[j] + 0.5 * dt * (phi1prev[j] + phi1cur[j]);
      m1new[i] = g0_i;
      m2new[0] = 0.0;
      for (int j = 1; j <= i; ++j)
        m2new[j] = m2prev[j - 1] + lam * 0.5 * dt * (phi2prev[j - 1] + phi2cur[j]);
      if (i >= 3) {
        // sqrt-aware head of the plus-characteristic reaching age 3 here
        m2new[3] += lam * detail::plus_head_correction(
            phi2prev2[1], phi2prev[2], phi2cur[3], dt);
      }

      double diff = 0.0;
      for (int j = 0; j <= i; ++j)
        diff = std::max({diff, std::abs(m1new[j] - m1row[j]),
                         std::abs(m2new[j] - m2row[j])});
      m1row.swap(m1new);
      m2row.swap(m2new);
      const double scale =
          1.0 + std::max(detail::max_abs(m1row), detail::max_abs(m2row));
      if (diff < opts.picard_tol * scale) break;
    }
    if (it == opts.max_iter)
      throw SolverError("solve_dtn: Picard iteration did not converge (step " +
                            std::to_string(i) + "; reduce the step size)",
                        i);
    iters[i] = it + 1;

    drift = std::max({drift, std::abs(m1row[0]), std::abs(m2row[0])});
    if (drift > opts.antidiag_abort)
      throw SolverError(
          "solve_dtn: anti-diagonal drift " + std::to_string(drift) +
              " invalidates the simplified inverse Abel transform (step " +
              std::to_string(i) + ")",
          i);

    for (int j = 0; j <= i; ++j) {
      field.m1(i, j) = m1row[j];
      field.m2(i, j) = m2row[j];
    }

    // final consistent sweep data for the next row
    detail::row_derivative(m1row, eta, d1);
    detail::row_derivative(m2row, eta, d2);
    inv.apply(d1, i + 1, ia1);
    inv.apply(d2, i + 1, ia2);
    g1_i = g0_i * m2row[i] - k2 * ia1[i];
    g1v[i] = g1_i;
    phi2prev2.swap(phi2prev);
    compute_phi(t_i, m1row, m2row, ia1, ia2, g1_i, phi1prev, phi2prev);
    m1prev = m1row;
    m2prev = m2row;
  }

  DtnResult res{std::move(field),
                SampledFunction(std::move(times), std::move(g1v), 3),
                std::move(iters), drift};
  return res;
}

GoursatResult solve_goursat(const BoundaryData& g0,
                            const std::function<Complex(double)>& g1,
                            const TriangularGrid& grid,
                            const SolverOptions& opts) {
  const int N = grid.N;
  const double dt = grid.delta();
  const double lam = g0.lambda();

  KernelField field(grid, /*with_L=*/true);
  std::vector<int> iters(N + 1, 0);

  // per-time coefficient cache
  auto alpha = [&](double t) {
    const Complex a = g0.g0(t), b = g1(t);
    return 0.5 * lam * (a * std::conj(b) - std::conj(a) * b);
  };
  auto beta = [&](double t) {
    const Complex a = g0.g0(t);
    return 0.5 * (iu * g0.g0_dot(t) - lam * std::norm(a) * a);
  };

  struct Rows {
    std::vector<Complex> l1, m1, l2, m2;
  };
  Rows prev, cur, nxt;
  Rows fprev, fcur;  // right-hand sides

  auto rhs = [&](double t, const Rows& r, Rows& f) {
    const Complex g = g0.g0(t), gc = std::conj(g);
    const Complex h = g1(t), hc = std::conj(h);
    const Complex al = alpha(t), be = beta(t), bec = std::conj(be);
    const size_t n = r.l1.size();
    f.l1.resize(n);
    f.m1.resize(n);
    f.l2.resize(n);
    f.m2.resize(n);
    for (size_t j = 0; j < n; ++j) {
      f.l1[j] = iu * h * r.l2[j] + al * r.m1[j] + be * r.m2[j];
      f.m1[j] = 2.0 * g * r.l2[j] + iu * h * r.m2[j];
      f.l2[j] = -iu * lam * hc * r.l1[j] - al * r.m2[j] + lam * bec * r.m1[j];
      f.m2[j] = 2.0 * lam * gc * r.l1[j] - iu * lam * hc * r.m1[j];
    }
  };

  prev.l1 = {0.5 * iu * g1(0.0)};
  prev.m1 = {g0.g0(0.0)};
  prev.l2 = {Complex(0.0)};
  prev.m2 = {Complex(0.0)};
  field.l1(0, 0) = prev.l1[0];
  field.m1(0, 0) = prev.m1[0];
  rhs(0.0, prev, fprev);

  for (int i = 1; i <= N; ++i) {
    const double t_i = grid.t(i);
    cur.l1.assign(i + 1, Complex(0.0));
    cur.m1.assign(i + 1, Complex(0.0));
    cur.l2.assign(i + 1, Complex(0.0));
    cur.m2.assign(i + 1, Complex(0.0));
    for (int j = 0; j < i; ++j) {
      cur.l1[j] = prev.l1[j];
      cur.m1[j] = prev.m1[j];
    }
    cur.l1[i] = 0.5 * iu * g1(t_i);
    cur.m1[i] = g0.g0(t_i);
    for (int j = 1; j <= i; ++j) {
      cur.l2[j] = prev.l2[j - 1];
      cur.m2[j] = prev.m2[j - 1];
    }

    int it = 0;
    for (; it < opts.max_iter; ++it) {
      rhs(t_i, cur, fcur);
      nxt.l1.assign(i + 1, Complex(0.0));
      nxt.m1.assign(i + 1, Complex(0.0));
      nxt.l2.assign(i + 1, Complex(0.0));
      nxt.m2.assign(i + 1, Complex(0.0));
      for (int j = 0; j < i; ++j) {
        nxt.l1[j] = prev.l1[j] + 0.5 * dt * (fprev.l1[j] + fcur.l1[j]);
        nxt.m1[j] = prev.m1[j] + 0.5 * dt * (fprev.m1[j] + fcur.m1[j]);
      }
      nxt.l1[i] = 0.5 * iu * g1(t_i);
      nxt.m1[i] = g0.g0(t_i);
      for (int j = 1; j <= i; ++j) {
        nxt.l2[j] = prev.l2[j - 1] + 0.5 * dt * (fprev.l2[j - 1] + fcur.l2[j]);
        nxt.m2[j] = prev.m2[j - 1] + 0.5 * dt * (fprev.m2[j - 1] + fcur.m2[j]);
      }

      double diff = 0.0;
      for (int j = 0; j <= i; ++j)
        diff = std::max({diff, std::abs(nxt.l1[j] - cur.l1[j]),
                         std::abs(nxt.m1[j] - cur.m1[j]),
                         std::abs(nxt.l2[j] - cur.l2[j]),
                         std::abs(nxt.m2[j] - cur.m2[j])});
      std::swap(cur, nxt);
      const double scale = 1.0 + std::max({detail::max_abs(cur.l1),
                                           detail::max_abs(cur.m1),
                                           detail::max_abs(cur.l2),
                                           detail::max_abs(cur.m2)});
      if (diff < opts.picard_tol * scale) break;
    }
    if (it == opts.max_iter)
      throw SolverError("solve_goursat: Picard iteration did not converge (step " +
                            std::to_string(i) + ")",
                        i);
    iters[i] = it + 1;

    for (int j = 0; j <= i; ++j) {
      field.l1(i, j) = cur.l1[j];
      field.m1(i, j) = cur.m1[j];
      field.l2(i, j) = cur.l2[j];
      field.m2(i, j) = cur.m2[j];
    }
    rhs(t_i, cur, fprev);
    std::swap(prev, cur);
  }

  return GoursatResult{std::move(field), std::move(iters)};
}

namespace {

// inverse Abel transforms of both M-rows for every row of a field
struct FieldInverse {
  std::vector<std::vector<Complex>> ia1, ia2;
};

FieldInverse field_inverse(const KernelField& f) {
  const int N = f.grid.N;
  const double eta = 2.0 * f.grid.delta();
  detail::RowInverseAbel inv(N, eta);
  FieldInverse out;
  out.ia1.resize(N + 1);
  out.ia2.resize(N + 1);
  std::vector<Complex> row, d;
  for (int i = 0; i <= N; ++i) {
    row.assign(i + 1, Complex(0.0));
    for (int j = 0; j <= i; ++j) row[j] = f.m1(i, j);
    detail::row_derivative(row, eta, d);
    inv.apply(d, i + 1, out.ia1[i]);
    for (int j = 0; j <= i; ++j) row[j] = f.m2(i, j);
    detail::row_derivative(row, eta, d);
    inv.apply(d, i + 1, out.ia2[i]);
  }
  return out;
}

}  // namespace

GlobalRelationResidual global_relation_residual(const KernelField& field,
                                                const BoundaryData& g0) {
  if (!field.has_L())
    throw std::invalid_argument("global_relation_residual: field lacks L1, L2");
  const int N = field.grid.N;
  const double lam = g0.lambda();
  const Complex coeff = sqrt_pi_over_2 * exp_ipi4;
  const FieldInverse fi = field_inverse(field);
  double r1 = 0.0, r2 = 0.0, r3 = 0.0;
  double m1d = 0.0, l1d = 0.0;
  for (int i = 0; i <= N; ++i) {
    const Complex g = g0.g0(field.grid.t(i));
    for (int j = 0; j <= i; ++j) {
      const Complex e1 = field.l1(i, j) - 0.5 * iu * g * field.m2(i, j) +
                         coeff * fi.ia1[i][j];
      const Complex e2 = field.l2(i, j) +
                         0.5 * iu * lam * std::conj(g) * field.m1(i, j) +
                         coeff * fi.ia2[i][j];
      r1 = std::max(r1, std::abs(e1));
      r2 = std::max(r2, std::abs(e2));
    }
    m1d = std::max(m1d, std::abs(field.m1(i, 0)));
    l1d = std::max(l1d, std::abs(field.l1(i, 0)));
  }
  r3 = m1d + l1d;
  return {r1, r2, r3};
}

AppendixResidual appendix_residual(const KernelField& field,
                                   const BoundaryData& g0) {
  const int N = field.grid.N;
  const double dt = field.grid.delta();
  const double eta = 2.0 * dt;
  const double lam = g0.lambda();
  const FieldInverse fi = field_inverse(field);
  const Complex cA = sqrt_pi_over_2 * exp_ipi4;
  const Complex cB = std::sqrt(2.0 / pi) * exp_ipi4;

  double ra1 = 0.0, ra2 = 0.0;
  std::vector<Complex> sq, dsq1, dsq2;
  for (int i = 2; i <= N; ++i) {
    const Complex g = g0.g0(field.grid.t(i));
    const Complex gc = std::conj(g);
    const double g2 = std::norm(g);
    // row derivatives of M1^2 and M2^2
    sq.assign(i + 1, Complex(0.0));
    for (int j = 0; j <= i; ++j) sq[j] = field.m1(i, j) * field.m1(i, j);
    detail::row_derivative(sq, eta, dsq1);
    for (int j = 0; j <= i; ++j) sq[j] = field.m2(i, j) * field.m2(i, j);
    detail::row_derivative(sq, eta, dsq2);

    for (int j = 1; j < i; ++j) {
      const Complex P1 = pi * fi.ia1[i][j];
      const Complex P2 = pi * fi.ia2[i][j];
      const Complex dP1m = pi * (fi.ia1[i][j] - fi.ia1[i - 1][j]) / dt;
      const Complex dP2p = pi * (fi.ia2[i][j] - fi.ia2[i - 1][j - 1]) / dt;
      const Complex dM1m = (field.m1(i, j) - field.m1(i - 1, j)) / dt;
      const Complex dM2p = (field.m2(i, j) - field.m2(i - 1, j - 1)) / dt;
      const Complex M1 = field.m1(i, j), M2 = field.m2(i, j);
      const Complex cross = iu * lam * g2 * (M2 * P1 - M1 * P2);
      const Complex e1 = M2 * dP1m - dM1m * P2 + cA * g * dsq2[j] + cross -
                         cB * g * P2 * P2;
      const Complex e2 = M1 * dP2p - dM2p * P1 + lam * cA * gc * dsq1[j] +
                         cross - lam * cB * gc * P1 * P1;
      ra1 = std::max(ra1, std::abs(e1));
      ra2 = std::max(ra2, std::abs(e2));
    }
  }
  return {ra1, ra2};
}

}  // namespace nlsdtn
