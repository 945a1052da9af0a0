#pragma once

#include <functional>

#include "nlsdtn/numbers.hpp"

namespace nlsdtn::oracle {

enum class SingularityHandling { substitution, jacobi_weights };

struct QuadratureSpec {
  double absolute_tol = 1e-10;
  double relative_tol = 1e-10;
  int max_subdivisions = 20000;
  SingularityHandling singularity_handling = SingularityHandling::substitution;
};

struct QuadratureResult {
  Complex value;
  double err_estimate;
};

/// Adaptive integration of f on [a, b] with an embedded GL7/GL15 error
/// estimate per panel. Throws std::runtime_error if the subdivision budget
/// runs out before the tolerances are met.
QuadratureResult adaptive_integrate(const std::function<Complex(double)>& f,
                                    double a, double b, const QuadratureSpec& spec);
QuadratureResult adaptive_integrate(const std::function<double(double)>& f,
                                    double a, double b, const QuadratureSpec& spec);

/// int_a^b f(x)/sqrt(b-x) dx with the endpoint singularity handled either by
/// the x = b - u^2 substitution or by sqrt-weighted Jacobi-type nodes.
QuadratureResult integrate_sqrt_endpoint(const std::function<Complex(double)>& f,
                                         double a, double b,
                                         const QuadratureSpec& spec);

enum class TripleKernel { ssc, shh, hsh, hhs };

/// Brute-force evaluation of the nested triple integrals
///   int_0^t dt' phi1 int_0^{t'} dt'' phi2 int_0^{t''} dt''' phi3 / (t-t'+t''-t''')^{3/2}
/// with (phi1,phi2,phi3) = (sin,sin,cos), (sin,h,h), (h,sin,h), (h,h,sin).
/// The innermost -3/2 layer is done semi-analytically per panel (exact kernel
/// antiderivative, slowly varying factor frozen at the panel midpoint, with
/// adaptive refinement); the outer endpoint t' = t is removed by t' = t - v^2.
/// Restricted to t <= 12; the cost grows like t^3.
double triple_singular(TripleKernel kernel, double t, const QuadratureSpec& spec);

namespace detail {
/// One fixed-resolution evaluation of the triple integral (scale = 1 is the
/// base resolution; halving refines every layer). Exposed for calibration.
double triple_pass(TripleKernel kernel, double t, double scale);
}  // namespace detail

/// Reference value of h via the power series h = 2 sqrt(t) 1F2(1; 3/4, 5/4; -t^2/4),
/// summed with term-ratio stopping at 1e-15. Test oracle for the closed form.
double h_series(double t);

}  // namespace nlsdtn::oracle
