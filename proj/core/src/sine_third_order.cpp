#include "nlsdtn/sine_third_order.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "nlsdtn/fresnel.hpp"
#include "nlsdtn/special.hpp"

namespace nlsdtn {

namespace {

// c = (sqrt(pi)/2) e^{-i pi/4}
const Complex c_const = 0.5 * std::sqrt(pi) * Complex(std::sqrt(0.5), -std::sqrt(0.5));

double psi(double u) {
  return std::cos(u) * hc_exact(u) + std::sin(u) * hs_exact(u);
}

double h_trig(HTrig which, double s) {
  switch (which) {
    case HTrig::hc_cos: return hc_exact(s) * std::cos(s);
    case HTrig::hs_cos: return hs_exact(s) * std::cos(s);
    case HTrig::hs_sin: return hs_exact(s) * std::sin(s);
    default: return hc_exact(s) * std::sin(s);
  }
}

}  // namespace

double I_ssc_closed(double t) {
  if (t <= 0.0) return 0.0;
  const auto [c1, s1] = fresnel(std::sqrt(2.0 * t / pi));
  const auto [c3, s3] = fresnel(std::sqrt(6.0 * t / pi));
  const double st = std::sin(t), ct = std::cos(t);
  const double s3t = std::sin(3.0 * t), c3t = std::cos(3.0 * t);
  return 0.125 * (std::sqrt(6.0 * pi) * (s3 * c3t - c3 * s3t) +
                  sqrt_2pi * c1 * (3.0 * st + s3t - 2.0 * t * ct) +
                  2.0 * st * (sqrt_2pi * s1 * (t + std::sin(2.0 * t)) +
                              2.0 * std::sqrt(t) * ct));
}

Complex T1_closed(double t) {
  if (t <= 0.0) return 0.0;
  const auto [c1, s1] = fresnel(std::sqrt(2.0 * t / pi));
  const auto [c3, s3] = fresnel(std::sqrt(6.0 * t / pi));
  const double st = std::sin(t), ct = std::cos(t);
  const double rt3 = std::sqrt(3.0);
  return iu * c_const / (3.0 * sqrt_2pi) *
         (-9.0 * c1 * st + rt3 * c3 * std::sin(3.0 * t) + 9.0 * s1 * ct -
          rt3 * s3 * std::cos(3.0 * t));
}

struct SineThirdOrder::Tables {
  double t_max;
  std::array<quad::CumulativeIntegral, 4> int_hH;   // I(h Htrig)
  std::array<quad::CumulativeIntegral, 4> int_hAH;  // I[h A(Htrig)]
  quad::CumulativeIntegral psi_cos, psi_sin;        // int psi(u) cos u, sin u
  std::array<quad::CumulativeIntegral, 4> int_I;    // I_1..I_4
};

SineThirdOrder::SineThirdOrder(double t_max) : tb_(std::make_unique<Tables>()) {
  if (t_max <= 0.0)
    throw std::invalid_argument("SineThirdOrder: t_max must be positive");
  tb_->t_max = t_max;

  for (int k = 0; k < 4; ++k) {
    const HTrig w = static_cast<HTrig>(k);
    tb_->int_hH[k] = quad::CumulativeIntegral(
        [w](double s) { return h_exact(s) * h_trig(w, s); }, t_max, 4.0);
    tb_->int_hAH[k] = quad::CumulativeIntegral(
        [this, w](double s) { return h_exact(s) * abel_H(w, s); }, t_max, 4.0);
  }
  tb_->psi_cos = quad::CumulativeIntegral(
      [](double u) { return psi(u) * std::cos(u); }, t_max, 3.0);
  tb_->psi_sin = quad::CumulativeIntegral(
      [](double u) { return psi(u) * std::sin(u); }, t_max, 3.0);

  // inner integrands of I_1..I_4 (I_4 shares the inner integral of I_1)
  auto inner1 = [](double u) {
    const double c = std::cos(u), s = std::sin(u);
    return hc_exact(u) * c * c + (hs_exact(u) + hc_exact(u)) * c * s +
           hs_exact(u) * s * s;
  };
  auto inner2 = [](double u) {
    const double c = std::cos(u), s = std::sin(u);
    return hc_exact(u) * c * c + (hs_exact(u) - hc_exact(u)) * c * s -
           hs_exact(u) * s * s;
  };
  auto inner3 = [](double u) {
    const double c = std::cos(u), s = std::sin(u);
    return -hc_exact(u) * c * c + (hc_exact(u) - hs_exact(u)) * c * s +
           hs_exact(u) * s * s;
  };
  quad::CumulativeIntegral K1(inner1, t_max, 3.0);
  quad::CumulativeIntegral K2(inner2, t_max, 3.0);
  quad::CumulativeIntegral K3(inner3, t_max, 3.0);
  // I_j(t) = int_0^t trig(u) K(u) / sqrt(u) du; K ~ u^2 tames the kernel
  auto outer = [](quad::CumulativeIntegral K, bool use_cos) {
    return [K = std::move(K), use_cos](double u) {
      if (u <= 0.0) return 0.0;
      const double tr = use_cos ? std::cos(u) : std::sin(u);
      return tr * K(u) / std::sqrt(u);
    };
  };
  tb_->int_I[0] = quad::CumulativeIntegral(outer(K1, true), t_max, 3.0);
  tb_->int_I[1] = quad::CumulativeIntegral(outer(K2, true), t_max, 3.0);
  tb_->int_I[2] = quad::CumulativeIntegral(outer(K3, false), t_max, 3.0);
  tb_->int_I[3] = quad::CumulativeIntegral(outer(K1, false), t_max, 3.0);
}

SineThirdOrder::~SineThirdOrder() = default;
SineThirdOrder::SineThirdOrder(SineThirdOrder&&) noexcept = default;
SineThirdOrder& SineThirdOrder::operator=(SineThirdOrder&&) noexcept = default;

double SineThirdOrder::t_max() const { return tb_->t_max; }

double SineThirdOrder::abel_H(HTrig which, double t) const {
  if (t <= 0.0) return 0.0;
  return quad::abel_oscillatory([which](double s) { return h_trig(which, s); },
                                t, 3.0);
}

double SineThirdOrder::int_hH(HTrig which, double t) const {
  return tb_->int_hH[static_cast<int>(which)](t);
}

double SineThirdOrder::int_hAH(HTrig which, double t) const {
  return tb_->int_hAH[static_cast<int>(which)](t);
}

double SineThirdOrder::int_I(int idx, double t) const {
  if (idx < 1 || idx > 4)
    throw std::invalid_argument("SineThirdOrder::int_I: index must be 1..4");
  return tb_->int_I[idx - 1](t);
}

double SineThirdOrder::I_ssc(double t) const { return I_ssc_closed(t); }

double SineThirdOrder::I_shh(double t) const {
  if (t <= 0.0) return 0.0;
  const double ct = std::cos(t), st = std::sin(t);
  const double Hc = hc_exact(t), Hs = hs_exact(t);
  double v = 0.0;
  v += 2.0 * quad::abel_oscillatory(
                 [](double s) { return hs_exact(s) * h_exact(s); }, t, 3.0);
  v += 2.0 * ct * int_hAH(HTrig::hc_cos, t) + 2.0 * st * int_hAH(HTrig::hs_cos, t);
  v += 2.0 * ct * int_hAH(HTrig::hs_sin, t) - 2.0 * st * int_hAH(HTrig::hc_sin, t);
  v -= 2.0 * quad::abel_oscillatory(
                 [this](double s) { return std::cos(s) * int_hH(HTrig::hc_cos, s); },
                 t, 3.0);
  v -= 2.0 * quad::abel_oscillatory(
                 [this](double s) { return std::sin(s) * int_hH(HTrig::hs_cos, s); },
                 t, 3.0);
  v -= 2.0 * quad::abel_oscillatory(
                 [this](double s) { return std::cos(s) * int_hH(HTrig::hs_sin, s); },
                 t, 3.0);
  v += 2.0 * quad::abel_oscillatory(
                 [this](double s) { return std::sin(s) * int_hH(HTrig::hc_sin, s); },
                 t, 3.0);
  v -= 2.0 * Hc * abel_H(HTrig::hc_cos, t) + 2.0 * Hc * abel_H(HTrig::hs_sin, t);
  v += 2.0 * quad::abel_oscillatory(
                 [](double s) {
                   const double x = hc_exact(s);
                   return x * x * std::cos(s);
                 },
                 t, 5.0);
  v -= 2.0 * Hs * abel_H(HTrig::hs_cos, t) - 2.0 * Hs * abel_H(HTrig::hc_sin, t);
  v += 2.0 * quad::abel_oscillatory(
                 [](double s) {
                   const double x = hs_exact(s);
                   return x * x * std::cos(s);
                 },
                 t, 5.0);
  return v;
}

double SineThirdOrder::I_hsh(double t) const {
  if (t <= 0.0) return 0.0;
  const double st = std::sin(t);
  const double Hc = hc_exact(t), Hs = hs_exact(t);
  double v = 0.0;
  v += 4.0 * quad::abel_oscillatory(
                 [](double s) { return h_exact(s) * hs_exact(s); }, t, 3.0);
  v -= 2.0 * pi * Hs * st;
  v -= 3.0 * quad::abel_oscillatory(
                 [](double s) {
                   const double x = hc_exact(s);
                   return x * x * std::cos(s);
                 },
                 t, 5.0);
  v -= 6.0 * quad::abel_oscillatory(
                 [](double s) { return hc_exact(s) * hs_exact(s) * std::sin(s); },
                 t, 5.0);
  v += 3.0 * quad::abel_oscillatory(
                 [](double s) {
                   const double x = hs_exact(s);
                   return x * x * std::cos(s);
                 },
                 t, 5.0);
  v += 2.0 * quad::abel_oscillatory(
                 [this](double s) { return std::cos(s) * int_hH(HTrig::hc_cos, s); },
                 t, 3.0);
  v += 2.0 * quad::abel_oscillatory(
                 [this](double s) { return std::sin(s) * int_hH(HTrig::hs_cos, s); },
                 t, 3.0);
  v -= 2.0 * quad::abel_oscillatory(
                 [this](double s) { return std::cos(s) * int_hH(HTrig::hs_sin, s); },
                 t, 3.0);
  v += 2.0 * quad::abel_oscillatory(
                 [this](double s) { return std::sin(s) * int_hH(HTrig::hc_sin, s); },
                 t, 3.0);
  v += 2.0 * Hc * abel_H(HTrig::hc_cos, t) + 2.0 * Hc * abel_H(HTrig::hs_sin, t);
  v += 2.0 * Hs * abel_H(HTrig::hc_sin, t) - 2.0 * Hs * abel_H(HTrig::hs_cos, t);
  return v;
}

double SineThirdOrder::hhs_tail(double t) const {
  if (t <= 0.0) return 0.0;
  if (t <= 30.0) {
    // direct double integral; inner in w = sqrt(t - t' + t'')
    auto inner = [&](double tp) {
      const double a = t - tp;
      const double w0 = std::sqrt(a), w1 = std::sqrt(a + tp);
      return 2.0 * quad::composite_integrate(
                       [a](double w) { return psi(w * w - a); }, w0, w1, 0.2, 12);
    };
    return 2.0 * quad::composite_sqrt_origin(
                     [&](double tp) { return h_exact(tp) * inner(tp); }, 0.0, t,
                     0.25, 12);
  }
  // Large t: split h(r + u) into sqrt(pi/2)(sin + cos)(r+u) plus the exactly
  // known remainder h_err; the sinusoid separates through the psi tables.
  auto lam_sin = [&](double r) {
    const double fc = tb_->psi_cos(t - r), fs = tb_->psi_sin(t - r);
    const double sr = std::sin(r), cr = std::cos(r);
    return sqrt_pi_over_2 * ((sr + cr) * fc + (cr - sr) * fs);
  };
  const double q_sin = quad::abel_oscillatory(lam_sin, t, 4.0);

  // correction: int_0^t psi(u) V(u) du, V(u) = int_u^t h_err(w)/sqrt(t+u-w) dw
  auto V = [&](double u) {
    const double p0 = std::sqrt(u), p1 = std::sqrt(t);
    return 2.0 * quad::composite_integrate(
                     [&](double p) { return h_minus_leading(t + u - p * p); },
                     p0, p1, 0.35, 12);
  };
  // V is slowly varying; sample on a coarse grid and interpolate
  const int nv = static_cast<int>(std::ceil(t / 0.5)) + 1;
  std::vector<double> vg(nv + 1), vv(nv + 1);
  for (int k = 0; k <= nv; ++k) {
    vg[k] = t * k / nv;
    vv[k] = V(vg[k]);
  }
  auto v_interp = [&](double u) {
    const double x = u / t * nv;
    int k = std::min(nv - 1, std::max(0, static_cast<int>(x)));
    // local cubic through k-1..k+2 where available
    int s0 = std::min(std::max(k - 1, 0), nv - 3);
    double r = 0.0;
    for (int i = 0; i < 4; ++i) {
      double li = 1.0;
      for (int j = 0; j < 4; ++j) {
        if (i == j) continue;
        li *= (u - vg[s0 + j]) / (vg[s0 + i] - vg[s0 + j]);
      }
      r += li * vv[s0 + i];
    }
    return r;
  };
  const double q_corr = quad::composite_sqrt_origin(
      [&](double u) { return psi(u) * v_interp(u); }, 0.0, t, pi / 8.0, 12);
  return 2.0 * (q_sin + q_corr);
}

double SineThirdOrder::I_hhs(double t) const {
  if (t <= 0.0) return 0.0;
  const double ct = std::cos(t), st = std::sin(t);
  double v = 0.0;
  v += 2.0 * quad::abel_oscillatory(
                 [](double s) { return h_exact(s) * hs_exact(s); }, t, 3.0);
  v += 2.0 * quad::abel_oscillatory(
                 [](double s) {
                   const double x = hc_exact(s);
                   return x * x * std::cos(s);
                 },
                 t, 5.0);
  v -= 2.0 * quad::abel_oscillatory(
                 [this](double s) { return std::cos(s) * int_hH(HTrig::hc_cos, s); },
                 t, 3.0);
  v -= 2.0 * quad::abel_oscillatory(
                 [this](double s) { return std::sin(s) * int_hH(HTrig::hs_cos, s); },
                 t, 3.0);
  v += 2.0 * quad::abel_oscillatory(
                 [](double s) {
                   const double x = hs_exact(s);
                   return x * x * std::cos(s);
                 },
                 t, 5.0);
  v -= 2.0 * quad::abel_oscillatory(
                 [this](double s) { return std::cos(s) * int_hH(HTrig::hs_sin, s); },
                 t, 3.0);
  v += 2.0 * quad::abel_oscillatory(
                 [this](double s) { return std::sin(s) * int_hH(HTrig::hc_sin, s); },
                 t, 3.0);
  const auto [cf, sf] = fresnel(std::sqrt(2.0 * t / pi));
  v += 2.0 * sqrt_2pi * cf *
       (-ct * int_hH(HTrig::hc_cos, t) + st * int_hH(HTrig::hs_cos, t) -
        ct * int_hH(HTrig::hs_sin, t) - st * int_hH(HTrig::hc_sin, t));
  v += 2.0 * sqrt_2pi * sf *
       (-ct * int_hH(HTrig::hs_cos, t) - st * int_hH(HTrig::hc_cos, t) +
        ct * int_hH(HTrig::hc_sin, t) - st * int_hH(HTrig::hs_sin, t));
  v += hhs_tail(t);
  return v;
}

Complex SineThirdOrder::T(int k, double t) const {
  switch (k) {
    case 1:
      return T1_closed(t);
    case 2: {
      if (t <= 0.0) return 0.0;
      // -(2c/(pi i)) [ W(t) h(t) - A(cos * W)(t) ],  W = t/2 - sin(2t)/4
      const double W = 0.5 * t - 0.25 * std::sin(2.0 * t);
      const double a = quad::abel_oscillatory(
          [](double s) {
            return std::cos(s) * (0.5 * s - 0.25 * std::sin(2.0 * s));
          },
          t, 3.0);
      return -2.0 * c_const / (pi * iu) * (W * h_exact(t) - a);
    }
    case 3:
      return -std::sqrt(2.0 / pi) * hs_exact(t) * std::sin(t);
    case 4:
      return -c_const / (pi * iu) * I_ssc(t);
    case 5:
      return c_const / (pi * pi) * I_shh(t);
    case 6:
      return c_const * iu / (pi * pi) * I_hsh(t);
    case 7:
      return c_const / (pi * pi) * I_hhs(t);
    default:
      throw std::invalid_argument("SineThirdOrder::T: k must be 1..7");
  }
}

Complex SineThirdOrder::g13(double t) const {
  Complex acc = 0.0;
  for (int k = 1; k <= 7; ++k) acc += T(k, t);
  return acc;
}

}  // namespace nlsdtn
