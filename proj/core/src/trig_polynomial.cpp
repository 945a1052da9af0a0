#include "nlsdtn/trig_polynomial.hpp"

#include <cmath>

namespace nlsdtn {

TrigPolynomial& TrigPolynomial::add(int half_power, int harmonic, Kind kind,
                                    Complex coeff) {
  if (harmonic == 0) kind = Kind::cos;  // canonical form for pure powers
  terms_.push_back({half_power, harmonic, kind, coeff});
  return *this;
}

TrigPolynomial& TrigPolynomial::operator+=(const TrigPolynomial& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

TrigPolynomial TrigPolynomial::operator*(Complex scale) const {
  TrigPolynomial out(*this);
  for (auto& t : out.terms_) t.coeff *= scale;
  return out;
}

Complex TrigPolynomial::evaluate(double t) const {
  Complex acc = 0.0;
  for (const auto& term : terms_) {
    double osc = 1.0;
    if (term.harmonic != 0)
      osc = (term.kind == Kind::cos) ? std::cos(term.harmonic * t)
                                     : std::sin(term.harmonic * t);
    acc += term.coeff * std::pow(t, 0.5 * term.half_power) * osc;
  }
  return acc;
}

Complex TrigPolynomial::coefficient(int half_power, int harmonic,
                                    Kind kind) const {
  Complex acc = 0.0;
  for (const auto& term : terms_)
    if (term.half_power == half_power && term.harmonic == harmonic &&
        term.kind == kind)
      acc += term.coeff;
  return acc;
}

}  // namespace nlsdtn
