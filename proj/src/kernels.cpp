#include "gagliardo/kernels.hpp"

#include <array>
#include <cmath>

namespace gagliardo {

namespace {

// 32-point Gauss-Legendre nodes/weights on (-1, 1), positive half; the
// negative half mirrors. Abscissas x, weights w.
constexpr int kGaussHalf = 16;
constexpr std::array<double, kGaussHalf> kGaussX = {
    0.0483076656877383162, 0.1444719615827964934, 0.2392873622521370745,
    0.3318686022821276498, 0.4213512761306353454, 0.5068999089322293900,
    0.5877157572407623290, 0.6630442669302152010, 0.7321821187402896804,
    0.7944837959679424070, 0.8493676137325699701, 0.8963211557660521240,
    0.9349060759377396892, 0.9647622555875064308, 0.9856115115452683354,
    0.9972638618494815635};
constexpr std::array<double, kGaussHalf> kGaussW = {
    0.0965400885147278006, 0.0956387200792748594, 0.0938443990808045654,
    0.0911738786957638847, 0.0876520930044038111, 0.0833119242269467552,
    0.0781938957870703065, 0.0723457941088485062, 0.0658222227763618468,
    0.0586840934785355471, 0.0509980592623761762, 0.0428358980222266807,
    0.0342738629130214331, 0.0253920653092620595, 0.0162743947309056706,
    0.0070186100094700966};

template <typename F>
double gauss32(F f, double a, double b) {
  const double mid = 0.5 * (a + b), rad = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < kGaussHalf; ++i) {
    acc += kGaussW[i] * (f(mid + rad * kGaussX[i]) + f(mid - rad * kGaussX[i]));
  }
  return acc * rad;
}

}  // namespace

double periodized_power_kernel(double t, double sp) {
  if (!(t > 0.0 && t < kTwoPi))
    throw std::invalid_argument("periodized_power_kernel: t must lie in (0, 2 pi)");
  // Direct terms |m| <= M0, then an Euler-Maclaurin tail over the pair
  // f(m) = (t + 2 pi m)^{-(1+sp)} + (2 pi (m+1) - t)^{-(1+sp)}.
  constexpr int kDirect = 64;
  double acc = 0.0;
  for (int m = kDirect; m >= 1; --m) {
    acc += std::pow(t + kTwoPi * m, -1.0 - sp) + std::pow(kTwoPi * m - t, -1.0 - sp);
  }
  acc += std::pow(t, -1.0 - sp) + std::pow(kTwoPi - t, -1.0 - sp);
  const double m1 = kDirect + 1;
  const double a = t + kTwoPi * m1, b = kTwoPi * (m1 + 1) - t;
  const double integral = (std::pow(a, -sp) + std::pow(b, -sp)) / (kTwoPi * sp);
  const double f1 = std::pow(a, -1.0 - sp) + std::pow(b, -1.0 - sp);
  const double fp1 = -kTwoPi * (1.0 + sp) * (std::pow(a, -2.0 - sp) + std::pow(b, -2.0 - sp));
  return acc + integral + 0.5 * f1 - fp1 / 12.0;
}

double kernel_value(KernelForm form, double t, double sp) {
  switch (form) {
    case KernelForm::chord:
    case KernelForm::periodized_sin:
      // |e^{i xi} - e^{i sigma}| = 2 |sin(t/2)|, so the two written forms are
      // one and the same function of t.
      return std::pow(2.0 * std::abs(std::sin(0.5 * t)), -1.0 - sp);
    case KernelForm::periodized_power:
      return periodized_power_kernel(t, sp);
  }
  throw std::logic_error("kernel_value: unknown form");
}

RVector quadrature_weights(int m_nodes, double s, double p, KernelForm form) {
  const double sp = s * p;
  const int M = m_nodes;
  const double h = kTwoPi / M;
  RVector w(M);
  for (int d = 1; d < M - 1; ++d) {
    w[d] = h * kernel_value(form, (d + 0.5) * h, sp);
  }
  // Edge closure: model the integrand on (0, h) as F(t_0) (t/t_0)^p.
  const double t0 = 0.5 * h;
  const double local = std::pow(h, p - sp) / (p - sp);
  const double remainder = gauss32(
      [&](double t) {
        return (kernel_value(form, t, sp) - std::pow(t, -1.0 - sp)) * std::pow(t, p);
      },
      0.0, h);
  w[0] = w[M - 1] = std::pow(t0, -p) * (local + remainder);
  return w;
}

}  // namespace gagliardo
