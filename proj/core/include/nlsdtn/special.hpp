#pragma once

#include <array>
#include <functional>
#include <vector>

#include "nlsdtn/numbers.hpp"
#include "nlsdtn/sampled_function.hpp"

namespace nlsdtn {

/// h(t) = int_0^t cos(s)/sqrt(t-s) ds in its Fresnel closed form
///   sqrt(2 pi) ( C(sqrt(2t/pi)) cos t + S(sqrt(2t/pi)) sin t ).
double h_exact(double t);

/// dh/dt = 1/sqrt(t) + sqrt(2 pi)( S(sqrt(2t/pi)) cos t - C(sqrt(2t/pi)) sin t ).
double h_prime(double t);

/// h(t) minus its leading sinusoid sqrt(pi/2)(sin t + cos t); decays like
/// t^{-3/2} and is used where the sinusoidal part must be split off exactly.
double h_minus_leading(double t);

/// H_c(t) = int_0^t h(s) cos s ds and H_s(t) = int_0^t h(s) sin s ds,
/// closed forms in the Fresnel integrals.
double hc_exact(double t);
double hs_exact(double t);

/// Abel transform int_0^t f(s)/sqrt(t-s) ds of a smooth callable.
/// The endpoint singularity is removed by the substitution s = t - u^2.
/// Relative error ~1e-10 for smooth f; throws std::domain_error on t < 0.
Complex abel(const std::function<Complex(double)>& f, double t);
double abel(const std::function<double(double)>& f, double t);

/// Abel transform of a sampled function (nodes must cover [0, t]).
Complex abel(const SampledFunction& f, double t);

/// Inverse Abel transform on a row s in [-t, t]:
///   (1/pi) int_{-t}^{s} dF/dtau (t, tau) / sqrt(s - tau) dtau,
/// valid when F(t, -t) = 0 (checked against `boundary_tol`).
/// The derivative is formed from the sample's finite-difference derivatives
/// and integrated against the kernel panel by panel.
Complex inverse_abel(const SampledFunction& row, double t, double s,
                     double boundary_tol = 1e-6);

/// Large-t coefficient data for the oscillatory Abel expansion:
/// f_a(t) = sum_{j=0..4} t^{j/2} ( f_j + sum_n c_{jn} cos nt + s_{jn} sin nt )
///        + t^{-1/2} ( fhat_1 + sum_n chat_{1n} cos nt + shat_{1n} sin nt ).
struct AsymptoticDescriptor {
  std::array<Complex, 5> f{};                  // f_j
  std::vector<std::array<Complex, 5>> c;       // c[n-1][j]
  std::vector<std::array<Complex, 5>> s;       // s[n-1][j]
  Complex fhat1{};
  std::vector<Complex> chat1;                  // chat1[n-1]
  std::vector<Complex> shat1;
  int harmonics() const { return static_cast<int>(c.size()); }

  static AsymptoticDescriptor with_harmonics(int n);
  Complex evaluate(double t) const;  // f_a(t) itself
};

/// Leading large-t behaviour of the Abel transform of a function with the
/// profile described by `d`, with the O(t^{-1/16}) remainder discarded:
/// the Gamma-ratio term per power, the constant pi*fhat_1, and the two
/// oscillatory double sums.
Complex abel_asymptotics(const AsymptoticDescriptor& d, double t);

}  // namespace nlsdtn
