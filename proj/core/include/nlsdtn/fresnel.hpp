#pragma once

#include "nlsdtn/numbers.hpp"

namespace nlsdtn {

/// Fresnel integrals C(z) = int_0^z cos(pi s^2/2) ds and
/// S(z) = int_0^z sin(pi s^2/2) ds, extended to z < 0 by oddness.
/// Absolute error below 1e-12 on the whole real line.
double fresnel_c(double z);
double fresnel_s(double z);

/// Both at once (cheaper when both are needed, which is the common case).
struct FresnelPair {
  double c;
  double s;
};
FresnelPair fresnel(double z);

namespace detail {
// The three evaluation branches, exposed for the branch-agreement tests.
FresnelPair fresnel_series(double z);            // z <= ~2.5
FresnelPair fresnel_continued_fraction(double z);  // 2 <= z <= ~8
FresnelPair fresnel_asymptotic(double z);        // z >= ~6
}  // namespace detail

}  // namespace nlsdtn
