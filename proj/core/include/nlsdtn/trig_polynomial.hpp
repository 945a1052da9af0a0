#pragma once

#include <vector>

#include "nlsdtn/numbers.hpp"

namespace nlsdtn {

/// Sum of terms coeff * t^{half_power/2} * {cos, sin}(harmonic * t).
/// Asymptotic expansions are stored in this structured form so they can be
/// both evaluated and queried coefficient-by-coefficient (the secular
/// cancellation check sums stored coefficients exactly).
class TrigPolynomial {
 public:
  enum class Kind { cos, sin };  // harmonic 0 with cos means a pure power

  struct Term {
    int half_power;  // power of t in units of 1/2 (may be negative)
    int harmonic;    // n in cos(nt)/sin(nt); 0 means no oscillation
    Kind kind;
    Complex coeff;
  };

  TrigPolynomial() = default;

  TrigPolynomial& add(int half_power, int harmonic, Kind kind, Complex coeff);
  TrigPolynomial& operator+=(const TrigPolynomial& other);
  TrigPolynomial operator*(Complex scale) const;

  Complex evaluate(double t) const;
  /// Exact sum of stored coefficients matching (half_power, harmonic, kind).
  Complex coefficient(int half_power, int harmonic, Kind kind) const;
  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::vector<Term> terms_;
};

}  // namespace nlsdtn
