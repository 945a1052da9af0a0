#include "nlsdtn/fresnel.hpp"

#include <cmath>

namespace nlsdtn {

namespace detail {

FresnelPair fresnel_series(double z) {
  // C: sum (-1)^k (pi/2)^{2k} z^{4k+1} / ((2k)! (4k+1))
  // S: sum (-1)^k (pi/2)^{2k+1} z^{4k+3} / ((2k+1)! (4k+3))
  const double z2 = z * z;
  const double x = pi / 2.0 * z2;
  const double x2 = x * x;
  double c = 0.0, s = 0.0;
  double termc = z;                    // (-1)^k (pi/2)^{2k} z^{4k+1} / (2k)!
  double terms = (pi / 2.0) * z2 * z;  // (-1)^k (pi/2)^{2k+1} z^{4k+3} / (2k+1)!
  for (int k = 0; k < 80; ++k) {
    c += termc / (4 * k + 1);
    s += terms / (4 * k + 3);
    termc *= -x2 / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
    terms *= -x2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
    if (std::abs(termc) < 1e-18 && std::abs(terms) < 1e-18) break;
  }
  return {c, s};
}

FresnelPair fresnel_continued_fraction(double z) {
  // C(z) + i S(z) = (1+i)/2 * (1 - e^{i pi z^2/2} cf(u)/sqrt(pi)),
  // u = (sqrt(pi)/2)(1-i) z,  cf(u) = sqrt(pi) e^{u^2} erfc(u)
  //                                 = 1/(u + (1/2)/(u + 1/(u + (3/2)/(u + ...))))
  const Complex u = 0.5 * std::sqrt(pi) * Complex(1.0, -1.0) * z;
  // modified Lentz for the S-fraction
  const double tiny = 1e-300;
  Complex f = tiny, C = f, D = 0.0;
  for (int n = 0; n < 200; ++n) {
    const Complex a = (n == 0) ? Complex(1.0) : Complex(0.5 * n);
    const Complex b = u;
    D = b + a * D;
    if (std::abs(D) < tiny) D = tiny;
    C = b + a / C;
    if (std::abs(C) < tiny) C = tiny;
    D = 1.0 / D;
    const Complex delta = C * D;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  const Complex phase(std::cos(pi / 2.0 * z * z), std::sin(pi / 2.0 * z * z));
  const Complex w = 0.5 * Complex(1.0, 1.0) * (1.0 - phase * f / std::sqrt(pi));
  return {w.real(), w.imag()};
}

FresnelPair fresnel_asymptotic(double z) {
  // C = 1/2 + f sin(th) - g cos(th),  S = 1/2 - f cos(th) - g sin(th),
  // th = pi z^2 / 2, with the auxiliary series
  // f ~ (1/pi z) sum (-1)^m (4m-1)!! x^{2m}, g ~ (1/pi z) x sum (-1)^m (4m+1)!! x^{2m},
  // x = 1/(pi z^2).
  const double x = 1.0 / (pi * z * z);
  const double x2 = x * x;
  double f = 0.0, g = 0.0;
  double cf = 1.0, cg = 1.0;  // (4m-1)!!, (4m+1)!!
  double p = 1.0;             // x^{2m}
  double sign = 1.0;
  double prev_f = 1e300;
  for (int m = 0; m < 30; ++m) {
    const double tf = sign * cf * p;
    const double tg = sign * cg * p;
    if (std::abs(tf) > prev_f) break;  // asymptotic series turned
    f += tf;
    g += tg;
    prev_f = std::abs(tf);
    sign = -sign;
    cf *= (4.0 * m + 1.0) * (4.0 * m + 3.0);
    cg *= (4.0 * m + 3.0) * (4.0 * m + 5.0);
    p *= x2;
    if (cf * p < 1e-18) break;
  }
  f /= pi * z;
  g *= x / (pi * z);
  const double th = pi / 2.0 * z * z;
  const double sn = std::sin(th), cs = std::cos(th);
  return {0.5 + f * sn - g * cs, 0.5 - f * cs - g * sn};
}

}  // namespace detail

FresnelPair fresnel(double z) {
  if (z == 0.0) return {0.0, 0.0};
  const double a = std::abs(z);
  FresnelPair r;
  if (a <= 2.5) r = detail::fresnel_series(a);
  else if (a < 6.0) r = detail::fresnel_continued_fraction(a);
  else r = detail::fresnel_asymptotic(a);
  if (z < 0.0) {
    r.c = -r.c;
    r.s = -r.s;
  }
  return r;
}

double fresnel_c(double z) { return fresnel(z).c; }
double fresnel_s(double z) { return fresnel(z).s; }

}  // namespace nlsdtn
