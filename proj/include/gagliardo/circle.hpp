#pragma once

#include "gagliardo/types.hpp"

namespace gagliardo {

/// Evaluate the trigonometric polynomial at the N standard grid angles
/// theta_j = -pi + 2 pi j / N. Requires N >= 2K + 2 (no aliasing).
GridFunction synthesize(const FourierCoeffs& coeffs, int n_samples);

/// Evaluate at the shifted node family theta_j = -pi + phase + 2 pi j / M.
/// Exact for any bandwidth K <= (M-2)/2.
CVector synthesize_values(const FourierCoeffs& coeffs, int m_nodes, double phase);

/// Discrete Fourier coefficients c_k = (1/N) sum_j v_j e^{-ik theta_j},
/// k = -K..K. Requires 2K + 1 <= N. Exact inverse of synthesize on
/// bandlimited data.
FourierCoeffs analyze(const GridFunction& grid, int bandwidth);

/// (1/N) sum_j v_j, the discrete mean over the circle.
Complex circle_mean(const GridFunction& grid);

/// Direct evaluation of sum_k c_k e^{ik theta} at a single angle.
Complex eval_at_angle(const FourierCoeffs& coeffs, double theta);

}  // namespace gagliardo
