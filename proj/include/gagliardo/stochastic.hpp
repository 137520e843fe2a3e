#pragma once

#include "gagliardo/analytic.hpp"
#include "gagliardo/rng.hpp"
#include "gagliardo/types.hpp"

namespace gagliardo {

struct McEstimate {
  Complex mean = 0.0;
  double stderr_ = 0.0;  ///< sample standard deviation / sqrt(n)
  long n = 0;
};

/// Exit angle of Brownian motion from the disc started at z, sampled exactly:
/// arg((W + z) / (1 + conj(z) W)) with W uniform on the circle. The output
/// law has density P_{|z|}(theta - arg z) / 2 pi.
double exit_angle_sample(Complex z, RngStream& rng);

/// Monte Carlo estimate of the value function V(z) = E^z[phi(exit angle)],
/// i.e. the harmonic extension of phi at z.
McEstimate value_mc(const FourierCoeffs& phi, Complex z, long n_samples, RngStream& rng);

/// Exact harmonic extension of phi at z via the r^{|k|} multiplier (the
/// truth oracle for value_mc).
Complex harmonic_extension_at(const FourierCoeffs& phi, Complex z);

/// Per-r Gagliardo seminorm of the Monte Carlo estimate of V on the circle of
/// radius r, with a propagated noise bound in each entry's `uncertainty`
/// field (3-sigma per grid point through the quadrature triangle inequality).
/// Entries whose bound exceeds the signal are flagged unresolved.
SeminormProfile criterion_profile_mc(const FourierCoeffs& phi, const SeminormParams& params,
                                     const std::vector<double>& r_schedule, int grid_size,
                                     long n_per_point, RngStream& rng,
                                     const QuadratureConfig& quad = {});

}  // namespace gagliardo
