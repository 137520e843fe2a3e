#pragma once

#include <cstdint>
#include <vector>

#include "gagliardo/seminorm.hpp"
#include "gagliardo/types.hpp"

namespace gagliardo {

struct SearchConfig {
  int bandwidth = 16;
  int restarts = 20;
  int max_iterations = 400;
  std::uint64_t seed = 0;
  QuadratureConfig quad{256, KernelForm::periodized_power, true};
};

struct PoincareEstimate {
  SeminormParams params;
  double kappa_lower = 0.0;        ///< certified lower bound on kappa(s, p)
  FourierCoeffs certificate;       ///< coefficients achieving the ratio
  int restarts = 0;
  int iterations = 0;
  std::vector<double> best_ratio_history;  ///< best ratio after each restart
};

/// Exact p = 2 Poincare constant: the spectral ratio is maximized by the
/// |k| = 1 modes, giving kappa = sqrt(2 pi / eta_s). (The (2 pi) factor does
/// not cancel against the calibrated eta; see poincare_ratio for the check.)
double kappa_exact_p2(double s);

/// ||xi - mean||_{L^p (unnormalized)} / [xi]_{W^{s,p}}; spectral seminorm for
/// p = 2, quadrature otherwise. Scale- and constant-invariant.
double poincare_ratio(const FourierCoeffs& coeffs, const SeminormParams& params,
                      const QuadratureConfig& quad);

/// Multi-restart Nelder-Mead maximization of the ratio over real-valued
/// trigonometric polynomials of bandwidth <= config.bandwidth. The result is
/// a certified lower bound on kappa(s, p); it never falls below the best
/// single-mode seed.
PoincareEstimate kappa_search(const SeminormParams& params, const SearchConfig& config);

/// kappa * [xi] - ||xi - mean||_p; nonnegative (up to 1e-9) when kappa is a
/// valid Poincare constant for (s, p).
double poincare_residual(const GridFunction& grid, const SeminormParams& params, double kappa,
                         const QuadratureConfig& quad);

}  // namespace gagliardo
