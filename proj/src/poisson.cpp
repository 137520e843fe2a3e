#include "gagliardo/poisson.hpp"

#include <cmath>

#include "gagliardo/circle.hpp"

namespace gagliardo {

double poisson_kernel(Radius r, double theta) {
  const double rc = r.capped();
  return (1.0 - rc * rc) / (1.0 - 2.0 * rc * std::cos(theta) + rc * rc);
}

FourierCoeffs poisson_extend(const FourierCoeffs& coeffs, Radius r) {
  const int K = coeffs.bandwidth();
  FourierCoeffs out = FourierCoeffs::zeros(K);
  out.set_coeff(0, coeffs.coeff(0));
  double rk = 1.0;
  for (int k = 1; k <= K; ++k) {
    rk *= r;
    out.set_coeff(k, rk * coeffs.coeff(k));
    out.set_coeff(-k, rk * coeffs.coeff(-k));
  }
  return out;
}

double semigroup_residual(const FourierCoeffs& coeffs, Radius r1, Radius r2) {
  const FourierCoeffs two_step = poisson_extend(poisson_extend(coeffs, r1), r2);
  const FourierCoeffs one_step = poisson_extend(coeffs, Radius(r1 * r2));
  return (two_step.raw() - one_step.raw()).cwiseAbs().maxCoeff();
}

double contraction_gap(const FourierCoeffs& coeffs, Radius r, const SeminormParams& params,
                       const QuadratureConfig& quad) {
  const FourierCoeffs extended = poisson_extend(coeffs, r);
  if (params.p == 2.0) {
    const double eta = eta_constant(params.s).eta;
    return gagliardo_spectral(coeffs, params.s, eta) -
           gagliardo_spectral(extended, params.s, eta);
  }
  return gagliardo_quadrature(coeffs, params, quad) -
         gagliardo_quadrature(extended, params, quad);
}

std::vector<double> default_r_schedule(int j_max) {
  std::vector<double> rs;
  rs.reserve(j_max);
  for (int j = 1; j <= j_max; ++j) rs.push_back(1.0 - std::ldexp(1.0, -j));
  return rs;
}

std::vector<std::pair<double, double>> continuity_profile(const FourierCoeffs& coeffs,
                                                          const SeminormParams& params,
                                                          const std::vector<double>& r_schedule,
                                                          const QuadratureConfig& quad) {
  std::vector<std::pair<double, double>> out;
  out.reserve(r_schedule.size());
  const int K = coeffs.bandwidth();
  for (double r : r_schedule) {
    FourierCoeffs diff = FourierCoeffs::zeros(K);
    double rk = 1.0;
    for (int k = 1; k <= K; ++k) {
      rk *= r;
      diff.set_coeff(k, (1.0 - rk) * coeffs.coeff(k));
      diff.set_coeff(-k, (1.0 - rk) * coeffs.coeff(-k));
    }
    double norm;
    if (params.p == 2.0) {
      // Parseval for the L^2 part, spectral for the seminorm.
      double l2sq = 0.0;
      for (int k = -K; k <= K; ++k) l2sq += std::norm(diff.coeff(k));
      norm = std::sqrt(kTwoPi * l2sq) + gagliardo_spectral(diff, params.s);
    } else {
      const GridFunction grid = synthesize(diff, quad.nodes);
      norm = lp_norm(grid, params.p, /*normalized=*/false) +
             gagliardo_quadrature(diff, params, quad);
    }
    out.emplace_back(r, norm);
  }
  return out;
}

}  // namespace gagliardo
