#pragma once

#include <utility>
#include <vector>

#include "gagliardo/seminorm.hpp"
#include "gagliardo/types.hpp"

namespace gagliardo {

/// P_r(theta) = (1 - r^2) / (1 - 2 r cos theta + r^2), r capped at 1 - 1e-9.
double poisson_kernel(Radius r, double theta);

/// Exact Fourier multiplier of the Poisson mean: c_k -> r^{|k|} c_k.
/// c_0 is preserved (total mass one).
FourierCoeffs poisson_extend(const FourierCoeffs& coeffs, Radius r);

/// Max coefficient deviation between extend(extend(f, r1), r2) and
/// extend(f, r1 r2). The multipliers compose exactly, so this is roundoff.
double semigroup_residual(const FourierCoeffs& coeffs, Radius r1, Radius r2);

/// [f] - [P_r f], computed spectrally for p = 2 and by quadrature otherwise.
/// Nonnegative up to numerics for every f, r.
double contraction_gap(const FourierCoeffs& coeffs, Radius r, const SeminormParams& params,
                       const QuadratureConfig& quad);

/// The geometric boundary approach r_j = 1 - 2^{-j}, j = 1..j_max.
std::vector<double> default_r_schedule(int j_max = 12);

/// Per-r values of ||P_r f - f||_{W^{s,p}}.
std::vector<std::pair<double, double>> continuity_profile(const FourierCoeffs& coeffs,
                                                          const SeminormParams& params,
                                                          const std::vector<double>& r_schedule,
                                                          const QuadratureConfig& quad);

}  // namespace gagliardo
