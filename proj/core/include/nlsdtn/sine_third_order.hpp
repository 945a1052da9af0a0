#pragma once

#include <array>
#include <memory>

#include "nlsdtn/numbers.hpp"
#include "nlsdtn/quadrature.hpp"

namespace nlsdtn {

/// Index conventions shared by the third-order machinery, Lemma-style
/// expansions and constant extraction. The trig pattern (Hc cos), (Hs cos),
/// (Hs sin), (Hc sin) matches the order k1..k4 / k5..k8 of the constants.
enum class HTrig { hc_cos = 0, hs_cos = 1, hs_sin = 2, hc_sin = 3 };

/// Third-order Neumann response to the sine wave g0 = sin t, assembled from
/// the reduced forms of the nested integrals (Fresnel closed forms, Abel
/// transforms and the cumulative tables below). All evaluations are exact
/// quadratures; nothing here discards a remainder.
///
/// Cumulative tables are built once for a fixed range; pointwise Abel
/// transforms are done per call. Evaluations are valid for t <= t_max().
class SineThirdOrder {
 public:
  explicit SineThirdOrder(double t_max);
  ~SineThirdOrder();
  SineThirdOrder(SineThirdOrder&&) noexcept;
  SineThirdOrder& operator=(SineThirdOrder&&) noexcept;

  double t_max() const;

  /// A(H_c cos)(t) etc., pointwise oscillatory Abel transforms.
  double abel_H(HTrig which, double t) const;
  /// I(h H_c cos)(t) etc. (table lookup).
  double int_hH(HTrig which, double t) const;
  /// I[h A(H_c cos)](t) etc. (table lookup; the tables are the expensive part).
  double int_hAH(HTrig which, double t) const;
  /// I_1..I_4(t), the sqrt-weighted double integrals (table lookup), idx 1..4.
  double int_I(int idx, double t) const;

  /// Reduced I-integrals.
  double I_ssc(double t) const;  // Fresnel closed form
  double I_shh(double t) const;
  double I_hsh(double t) const;
  double I_hhs(double t) const;

  /// The final double-integral term of the I_hhs reduction,
  ///   2 int_0^t dt' h(t') int_0^{t'} dt'' psi(t'') / sqrt(t - t' + t''),
  /// psi = cos Hc + sin Hs. Exact by quadrature at any t (the large-t path
  /// splits h into its leading sinusoid plus the exactly-known remainder).
  double hhs_tail(double t) const;

  /// T-terms of the third-order formula in the lambda = +1 normalization.
  Complex T(int k, double t) const;  // k = 1..7
  /// lambda g13(t) = T1 + ... + T7; multiply by lambda for the signed value.
  Complex g13(double t) const;

 private:
  struct Tables;
  std::unique_ptr<Tables> tb_;
};

/// Closed form of I_ssc (valid for any t >= 0, no tables needed).
double I_ssc_closed(double t);

/// T1 closed form (lambda = +1).
Complex T1_closed(double t);

}  // namespace nlsdtn
