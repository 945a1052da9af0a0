#include <cstdio>
#include <cmath>
#include <chrono>
#include "nlsdtn/perturbation.hpp"
#include "nlsdtn/sine_third_order.hpp"
using namespace nlsdtn;
using clk = std::chrono::steady_clock;
int main() {
  // hhs_tail branch continuity around t = 30
  {
    SineThirdOrder sto(40.0);
    for (double t : {28.0, 29.9}) {
      // call both branches by proxy: small-t path is t<=30; mimic large-t by t just over
      double a = sto.hhs_tail(t);
      double b = sto.hhs_tail(t + 0.2);  // 30.1 crosses branch at second point
      std::printf("hhs_tail(%.1f)=%.9f  hhs_tail(%.1f)=%.9f\n", t, a, t+0.2, b);
    }
    // direct continuity: evaluate just below and above the switch
    double lo = sto.hhs_tail(29.999), hi = sto.hhs_tail(30.001);
    std::printf("switch: lo=%.10f hi=%.10f diff=%.2e\n", lo, hi, hi-lo);
  }
  // expand n=3 vs g13 on [0,8], Richardson over N=600/1200
  auto t0 = clk::now();
  std::vector<std::function<Complex(double)>> orders = {
      [](double t){ return Complex(std::sin(t)); }};
  TriangularGrid gA(8.0, 600), gB(8.0, 1200);
  auto sA = expand(orders, 3, gA, 1);
  auto sB = expand(orders, 3, gB, 1);
  auto t1 = clk::now();
  std::printf("expand time %.1fs\n", std::chrono::duration<double>(t1-t0).count());
  SineThirdOrder sto(8.5);
  double m_raw = 0, m_rich = 0, m2 = 0;
  for (int i = 0; i <= 600; i += 6) {
    double t = gA.t(i);
    Complex coarse = sA.order(3).g1[i];
    Complex fine = sB.order(3).g1[2*i];
    Complex rich = (4.0*fine - coarse)/3.0;
    Complex exact = sto.g13(t);
    m_raw = std::max(m_raw, std::abs(fine - exact));
    m_rich = std::max(m_rich, std::abs(rich - exact));
    m2 = std::max(m2, std::abs(sB.order(2).g1[2*i]));
  }
  auto t2 = clk::now();
  std::printf("g13 eval time %.1fs\n", std::chrono::duration<double>(t2-t1).count());
  std::printf("max|g1^3_N1200 - g13| = %.3e   Richardson: %.3e   max|g1^2| = %.3e\n",
              m_raw, m_rich, m2);
  return 0;
}
