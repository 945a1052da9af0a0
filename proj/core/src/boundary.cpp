#include "nlsdtn/boundary.hpp"

#include <cmath>
#include <stdexcept>

namespace nlsdtn {

BoundaryData::BoundaryData(Sine s, int lambda, double horizon)
    : kind_(s), lambda_(lambda), horizon_(horizon) {
  validate();
}
BoundaryData::BoundaryData(Series s, int lambda, double horizon)
    : kind_(std::move(s)), lambda_(lambda), horizon_(horizon) {
  validate();
}
BoundaryData::BoundaryData(Table t, int lambda, double horizon)
    : kind_(std::move(t)), lambda_(lambda), horizon_(horizon) {
  validate();
}

void BoundaryData::validate() const {
  if (lambda_ != 1 && lambda_ != -1)
    throw std::invalid_argument("BoundaryData: lambda must be +1 or -1");
  if (horizon_ <= 0.0)
    throw std::invalid_argument("BoundaryData: horizon must be positive");
  if (const auto* t = std::get_if<Table>(&kind_)) {
    if (t->samples.front() > 0.0 || t->samples.back() < horizon_)
      throw std::invalid_argument("BoundaryData: table must cover [0, T]");
  }
  if (std::abs(g0(0.0)) > 1e-9)
    throw std::invalid_argument("BoundaryData: g0(0) must vanish");
}

Complex BoundaryData::g0(double t) const {
  if (const auto* s = std::get_if<Sine>(&kind_))
    return s->amplitude * std::sin(s->frequency * t + s->phase);
  if (const auto* s = std::get_if<Series>(&kind_)) {
    Complex acc = 0.0;
    double scale = 1.0;
    for (const auto& f : s->orders) {
      scale *= s->epsilon;
      acc += scale * f(t);
    }
    return acc;
  }
  return std::get<Table>(kind_).samples(t);
}

Complex BoundaryData::g0_dot(double t) const {
  if (const auto* s = std::get_if<Sine>(&kind_))
    return s->amplitude * s->frequency * std::cos(s->frequency * t + s->phase);
  // 4th-order central differences, shifted inward near the ends
  const double hh = 1e-4 * std::max(1.0, horizon_);
  double c = t;
  if (c < 2 * hh) c = 2 * hh;
  if (c > horizon_ - 2 * hh) c = horizon_ - 2 * hh;
  const Complex d = (-g0(c + 2 * hh) + 8.0 * g0(c + hh) - 8.0 * g0(c - hh) +
                     g0(c - 2 * hh)) /
                    (12.0 * hh);
  return d;
}

BoundaryData BoundaryData::sine(double amplitude, int lambda, double horizon,
                                double frequency, double phase) {
  return BoundaryData(Sine{amplitude, frequency, phase}, lambda, horizon);
}

BoundaryData BoundaryData::from_table(SampledFunction samples, int lambda) {
  const double T = samples.back();
  return BoundaryData(Table{std::move(samples)}, lambda, T);
}

}  // namespace nlsdtn
