#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "nlsdtn/numbers.hpp"
#include "nlsdtn/sampled_function.hpp"

namespace nlsdtn {

/// Dirichlet datum g0(t) on [0, T] with the equation sign lambda.
/// Three kinds: the builtin sine family, an amplitude-scaled series of
/// per-order profiles, or a sampled table. g0(0) = 0 is required
/// (compatibility with zero initial data).
class BoundaryData {
 public:
  struct Sine {
    double amplitude = 1.0;
    double frequency = 1.0;
    double phase = 0.0;
  };
  struct Series {
    double epsilon = 1.0;
    std::vector<std::function<Complex(double)>> orders;  // orders[k] = g0^{(k+1)}
  };
  struct Table {
    SampledFunction samples;
  };

  BoundaryData(Sine s, int lambda, double horizon);
  BoundaryData(Series s, int lambda, double horizon);
  BoundaryData(Table t, int lambda, double horizon);

  Complex g0(double t) const;
  /// dg0/dt; analytic for sine and series (finite differences of the series
  /// callables), 4th-order central differences for tables.
  Complex g0_dot(double t) const;

  int lambda() const { return lambda_; }
  double horizon() const { return horizon_; }

  static BoundaryData sine(double amplitude, int lambda, double horizon,
                           double frequency = 1.0, double phase = 0.0);
  static BoundaryData from_table(SampledFunction samples, int lambda);

 private:
  std::variant<Sine, Series, Table> kind_;
  int lambda_ = 1;
  double horizon_ = 0.0;

  void validate() const;
};

}  // namespace nlsdtn
