#pragma once

#include <functional>
#include <vector>

#include "nlsdtn/boundary.hpp"
#include "nlsdtn/grid.hpp"
#include "nlsdtn/numbers.hpp"
#include "nlsdtn/sampled_function.hpp"

namespace nlsdtn {

struct SolverOptions {
  double picard_tol = 1e-12;
  int max_iter = 50;
  /// solve_dtn aborts when |M_j(t,-t)| drifts beyond this; the simplified
  /// inverse Abel transform (no boundary term) is otherwise unjustified.
  double antidiag_abort = 0.05;
};

/// Thrown when per-step Picard iteration fails to contract (step too large,
/// or a focusing blowup) or the anti-diagonal drift invalidates the scheme.
struct SolverError : std::runtime_error {
  int step;
  SolverError(const std::string& what, int step_) : std::runtime_error(what),
                                                    step(step_) {}
};

struct DtnResult {
  KernelField field;          // M1, M2
  SampledFunction g1;         // Neumann trace on the grid times
  std::vector<int> picard_iterations;  // per time step
  double max_antidiag_drift = 0.0;     // max |M1(t,-t)|, |M2(t,-t)| seen
};

/// Dirichlet-to-Neumann solve: marches the quadratically nonlinear Volterra
/// system for M1, M2 on the triangular grid (time steps resolved jointly by
/// Picard iteration using only already-computed history) and extracts
///   g1(t) = g0(t) M2(t,t) - sqrt(2 pi) e^{-i pi/4} (A^{-1} M1)(t,t).
DtnResult solve_dtn(const BoundaryData& g0, const TriangularGrid& grid,
                    const SolverOptions& opts = {});

struct GoursatResult {
  KernelField field;  // L1, L2, M1, M2
  std::vector<int> picard_iterations;
};

/// Forward Goursat solve of the four coupled transport equations given both
/// boundary functions g0 and g1.
GoursatResult solve_goursat(const BoundaryData& g0,
                            const std::function<Complex(double)>& g1,
                            const TriangularGrid& grid,
                            const SolverOptions& opts = {});

struct GlobalRelationResidual {
  double r1;  // max-norm residual of the first global-relation equation
  double r2;  // second equation
  double r3;  // max |M1(t,-t)| + max |L1(t,-t)|
};

/// Residuals of the global-relation equations on a field carrying L1, L2.
GlobalRelationResidual global_relation_residual(const KernelField& field,
                                                const BoundaryData& g0);

struct AppendixResidual {
  double ra1;
  double ra2;
};

/// Residuals of the alternative (g1-free) nonlinear system on an M-field;
/// consistency cross-check only, first-order accurate differences.
AppendixResidual appendix_residual(const KernelField& field,
                                   const BoundaryData& g0);

namespace detail {
/// Second-order finite-difference derivative of a row of samples with
/// spacing eta (centered interior, one-sided ends).
void row_derivative(const std::vector<Complex>& row, double eta,
                    std::vector<Complex>& out);

/// Correction replacing the trapezoid head of a plus-characteristic path by
/// the exact integral of a fit b sqrt(q) + c q + d q^{3/2} through the first
/// three interior samples (the base sample is structurally zero). The kernel
/// A^{-1}M1 behaves like sqrt(tau - base) there, which plain trapezoid
/// integration would resolve only to O(step^{3/2}).
Complex plus_head_correction(Complex f1, Complex f2, Complex f3, double step);

/// Row inverse Abel transform by product integration of the piecewise-linear
/// derivative against (s - tau)^{-1/2}; out[m] = (A^{-1} row)(t, s_m).
/// Weights are the precomputed convolution tables for the uniform spacing.
class RowInverseAbel {
 public:
  RowInverseAbel() = default;
  RowInverseAbel(int max_row, double eta);
  void apply(const std::vector<Complex>& deriv, int row_len,
             std::vector<Complex>& out) const;

 private:
  std::vector<double> wa_, wb_;  // weights for D_k and D_{k+1} per lag
  double eta_ = 0.0;
};
}  // namespace detail

}  // namespace nlsdtn
