#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace gagliardo {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

/// Seminorm parameters (s, p) with 0 < s < 1 and 1 < p < infinity, both strict.
struct SeminormParams {
  double s;
  double p;

  SeminormParams(double s_, double p_) : s(s_), p(p_) {
    if (!(s > 0.0 && s < 1.0))
      throw std::invalid_argument("SeminormParams: s must lie strictly in (0,1)");
    if (!(p > 1.0) || !std::isfinite(p))
      throw std::invalid_argument("SeminormParams: p must lie strictly in (1,inf)");
  }
};

/// Radius in [0, 1). Kernel-evaluation paths cap the effective value at 1 - 1e-9.
struct Radius {
  double r;

  Radius(double r_) : r(r_) {  // NOLINT: implicit by design, radii appear everywhere
    if (!(r >= 0.0 && r < 1.0))
      throw std::invalid_argument("Radius: r must lie in [0,1)");
  }
  operator double() const { return r; }
  /// Value guarded away from 1 for kernel formulas that blow up at the boundary.
  double capped() const { return r < 1.0 - 1e-9 ? r : 1.0 - 1e-9; }
};

enum class KernelForm {
  chord,             ///< |e^{i xi} - e^{i sigma}|^{-(1+sp)}
  periodized_sin,    ///< 2^{-(1+sp)} |sin((xi-sigma)/2)|^{-(1+sp)}; identical to chord
  periodized_power,  ///< sum_m |xi - sigma + 2 pi m|^{-(1+sp)}; wrapped line kernel
};

/// Tensor quadrature configuration for the Gagliardo double integral.
///
/// With `offset` enabled the xi axis is shifted half a cell against the sigma
/// axis, so realized angle differences are (d + 1/2) h and never hit the
/// diagonal. With `offset` disabled both axes share the sample phase and the
/// diagonal row is dropped (biased; kept for comparison only).
///
/// The default kernel is the wrapped power kernel: it is the form under which
/// the p = 2 Fourier multiplier is exactly eta_s |k|^{2s}. The chord and
/// periodized_sin forms are the same function of the angle difference and give
/// identical values; their p = 2 multiplier deviates from |k|^{2s} at low
/// modes except at sp = 1.
struct QuadratureConfig {
  int nodes = 1024;
  KernelForm kernel = KernelForm::periodized_power;
  bool offset = true;

  void validate() const {
    if (nodes < 16 || !is_power_of_two(nodes))
      throw std::invalid_argument("QuadratureConfig: nodes must be a power of two >= 16");
  }
};

/// N complex samples on the uniform angular grid theta_j = -pi + 2 pi j / N.
class GridFunction {
 public:
  explicit GridFunction(CVector values) : values_(std::move(values)) {
    const auto n = static_cast<int>(values_.size());
    if (n < 4 || !is_power_of_two(n))
      throw std::invalid_argument("GridFunction: size must be a power of two >= 4");
    if (!values_.allFinite())
      throw std::invalid_argument("GridFunction: values must be finite");
  }

  static GridFunction zeros(int n) { return GridFunction(CVector::Zero(n)); }

  int size() const { return static_cast<int>(values_.size()); }
  const CVector& values() const { return values_; }
  double angle(int j) const { return -kPi + kTwoPi * j / size(); }

 private:
  CVector values_;
};

/// Truncated Fourier series c_k, k = -K..K, stored as a dense vector of
/// length 2K+1 with index i <-> mode i - K.
class FourierCoeffs {
 public:
  explicit FourierCoeffs(CVector coeffs) : coeffs_(std::move(coeffs)) {
    const auto n = coeffs_.size();
    if (n < 1 || n % 2 == 0)
      throw std::invalid_argument("FourierCoeffs: need an odd number of coefficients");
    if (!coeffs_.allFinite())
      throw std::invalid_argument("FourierCoeffs: coefficients must be finite");
  }

  static FourierCoeffs zeros(int bandwidth) {
    return FourierCoeffs(CVector::Zero(2 * bandwidth + 1));
  }

  int bandwidth() const { return (static_cast<int>(coeffs_.size()) - 1) / 2; }
  const CVector& raw() const { return coeffs_; }

  Complex coeff(int k) const {
    check_mode(k);
    return coeffs_[k + bandwidth()];
  }
  void set_coeff(int k, Complex v) {
    check_mode(k);
    coeffs_[k + bandwidth()] = v;
  }

  /// True when every strictly negative mode vanishes (within tol).
  bool analytic_type(double tol = 0.0) const {
    const int K = bandwidth();
    for (int k = -K; k < 0; ++k)
      if (std::abs(coeffs_[k + K]) > tol) return false;
    return true;
  }

 private:
  void check_mode(int k) const {
    if (std::abs(k) > bandwidth())
      throw std::out_of_range("FourierCoeffs: mode outside bandwidth");
  }
  CVector coeffs_;
};

}  // namespace gagliardo
