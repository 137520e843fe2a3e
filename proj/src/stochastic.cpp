#include "gagliardo/stochastic.hpp"

#include <cmath>

#include "gagliardo/circle.hpp"
#include "gagliardo/kernels.hpp"
#include "gagliardo/summation.hpp"

namespace gagliardo {

double exit_angle_sample(Complex z, RngStream& rng) {
  if (std::abs(z) >= 1.0)
    throw std::invalid_argument("exit_angle_sample: start point must lie inside the disc");
  const double t = rng.uniform(-kPi, kPi);
  const Complex w(std::cos(t), std::sin(t));
  const Complex x = (w + z) / (1.0 + std::conj(z) * w);
  return std::arg(x);
}

McEstimate value_mc(const FourierCoeffs& phi, Complex z, long n_samples, RngStream& rng) {
  if (n_samples < 2) throw std::invalid_argument("value_mc: need at least 2 samples");
  // Welford in fixed sample order; deterministic for a given stream.
  Complex mean = 0.0;
  double m2 = 0.0;
  for (long i = 0; i < n_samples; ++i) {
    const double theta = exit_angle_sample(z, rng);
    const Complex x = eval_at_angle(phi, theta);
    const Complex delta = x - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += (std::conj(delta) * (x - mean)).real();
  }
  McEstimate est;
  est.mean = mean;
  est.stderr_ = std::sqrt(m2 / static_cast<double>(n_samples - 1) / static_cast<double>(n_samples));
  est.n = n_samples;
  return est;
}

Complex harmonic_extension_at(const FourierCoeffs& phi, Complex z) {
  const double r = std::abs(z);
  const double alpha = std::arg(z);
  const int K = phi.bandwidth();
  Complex acc = phi.coeff(0);
  for (int k = 1; k <= K; ++k) {
    const double rk = std::pow(r, k);
    const Complex eik(std::cos(k * alpha), std::sin(k * alpha));
    acc += rk * (phi.coeff(k) * eik + phi.coeff(-k) * std::conj(eik));
  }
  return acc;
}

SeminormProfile criterion_profile_mc(const FourierCoeffs& phi, const SeminormParams& params,
                                     const std::vector<double>& r_schedule, int grid_size,
                                     long n_per_point, RngStream& rng,
                                     const QuadratureConfig& quad) {
  SeminormProfile profile{params, ProfileMethod::quadrature, {}};
  const RVector weights = quadrature_weights(quad.nodes, params.s, params.p, quad.kernel);
  double wsum = 0.0;
  for (int d = 0; d < quad.nodes; ++d) wsum += weights[d];

  for (std::size_t ri = 0; ri < r_schedule.size(); ++ri) {
    const double r = r_schedule[ri];
    CVector estimates(grid_size);
    KahanSum noise_p;
    // Per-task derived streams: results do not depend on evaluation order.
    for (int j = 0; j < grid_size; ++j) {
      RngStream task = rng.derive(ri * static_cast<std::uint64_t>(grid_size) + j);
      const double theta = -kPi + kTwoPi * j / grid_size;
      const Complex z = r * Complex(std::cos(theta), std::sin(theta));
      const McEstimate est = value_mc(phi, z, n_per_point, task);
      estimates[j] = est.mean;
      noise_p.add(std::pow(3.0 * est.stderr_, params.p));
    }
    ProfileEntry e;
    e.r = r;
    e.value = gagliardo_quadrature(GridFunction(estimates), params, quad);
    // [noise] <= 2 (sum_d W_d)^{1/p} ((2pi/M) sum_j |e_j|^p)^{1/p} with
    // |e_j| <= 3 sigma_j; here the grid carries the sigma_j.
    e.uncertainty =
        2.0 * std::pow(wsum, 1.0 / params.p) *
        std::pow(kTwoPi / grid_size * noise_p.value(), 1.0 / params.p);
    e.resolved = e.uncertainty <= e.value;
    profile.entries.push_back(e);
  }
  return profile;
}

}  // namespace gagliardo
