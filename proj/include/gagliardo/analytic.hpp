#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gagliardo/poisson.hpp"
#include "gagliardo/seminorm.hpp"
#include "gagliardo/types.hpp"

namespace gagliardo {

/// Declared behaviour of the Taylor coefficients beyond the stored range.
/// `exact` means a_k = 0 for k > max_degree; `power_bound` means
/// |a_k| <= constant * k^{-exponent} for all k > max_degree.
struct TailPolicy {
  enum class Kind { exact, power_bound };
  Kind kind = Kind::exact;
  double constant = 0.0;
  double exponent = 0.0;

  static TailPolicy exact() { return {}; }
  static TailPolicy power(double constant, double exponent) {
    if (!(constant >= 0.0) || !(exponent > 0.0))
      throw std::invalid_argument("TailPolicy: need constant >= 0 and exponent > 0");
    return {Kind::power_bound, constant, exponent};
  }
};

/// Analytic function on the disc given by Taylor coefficients a_0..a_K plus a
/// tail policy describing the truncation.
struct TaylorFunction {
  CVector coeffs;  ///< a_k, k = 0..max_degree
  TailPolicy tail;

  TaylorFunction(CVector c, TailPolicy t = TailPolicy::exact())
      : coeffs(std::move(c)), tail(t) {
    if (coeffs.size() < 1) throw std::invalid_argument("TaylorFunction: need a_0");
    if (!coeffs.allFinite()) throw std::invalid_argument("TaylorFunction: coefficients must be finite");
  }

  int max_degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Complex a(int k) const { return coeffs[k]; }
};

enum class ProfileMethod { spectral, quadrature };

struct ProfileEntry {
  double r = 0.0;
  double value = 0.0;
  double uncertainty = 0.0;  ///< tail/truncation bound, or propagated noise for MC profiles
  bool resolved = true;      ///< false when the entry could not be computed to tolerance
};

struct SeminormProfile {
  SeminormParams params;
  ProfileMethod method = ProfileMethod::spectral;
  std::vector<ProfileEntry> entries;
};

enum class Membership { finite, divergent, inconclusive };

struct MembershipVerdict {
  Membership classification = Membership::inconclusive;
  double sup_estimate = 0.0;      ///< meaningful when finite
  double growth_exponent = 0.0;   ///< meaningful when divergent
  struct Diagnostics {
    double block_slope = 0.0;    ///< dyadic-block log2 slope (p = 2 path)
    double profile_slope = 0.0;  ///< fitted log-value slope vs log(1/(1-r))
    double cauchy_gap = 0.0;     ///< last relative profile increment
    std::string rule;            ///< which decision rule fired
  } diagnostics;
};

struct MembershipScan {
  std::vector<std::pair<double, MembershipVerdict>> entries;
  double threshold = -1.0;  ///< midpoint between last finite and first divergent s; -1 if none
};

struct NormEquivalenceReport {
  double disc_norm = 0.0;        ///< |u(0)| + sup_r [u_r]
  double trace_norm = 0.0;       ///< ||u*||_{L^p} + [u*]
  double kappa = 0.0;
  double growth_constant = 0.0;  ///< C = kappa + (2 pi)^{1/p}
  double lower_margin = 0.0;     ///< trace_norm - disc_norm            (>= 0 required)
  double upper_margin = 0.0;     ///< (1 + C) disc_norm - trace_norm    (>= 0 required)
  bool holds = false;
};

/// Fourier coefficients of the slice u_r: c_k = a_k r^k, analytic type.
/// K beyond the stored degree needs a tail policy (the truncated modes are
/// zero and the induced error is bounded by the policy).
FourierCoeffs radial_slice(const TaylorFunction& u, Radius r, int bandwidth);

/// Upper bound on the seminorm contribution of the truncated tail at radius r
/// (p = 2 spectral accounting; 0 for exact tails).
double slice_tail_bound(const TaylorFunction& u, double r, double s);

/// r -> [u_r]_{W^{s,p}} on the given schedule.
SeminormProfile seminorm_profile(const TaylorFunction& u, const SeminormParams& params,
                                 const std::vector<double>& r_schedule, ProfileMethod method,
                                 const QuadratureConfig& quad = {});

/// Classify sup_{0<r<1} [u_r] as finite / divergent / inconclusive and
/// estimate the sup (or the growth exponent).
MembershipVerdict sup_seminorm(const TaylorFunction& u, const SeminormParams& params,
                               double tol = 0.02, const QuadratureConfig& quad = {});

/// |u(0)| + sup_r [u_r]. Throws for functions whose sup diverges.
double disc_norm(const TaylorFunction& u, const SeminormParams& params);

/// sup over r of the normalized L^p means of the slices.
double hardy_norm(const TaylorFunction& u, double p, double tol = 1e-9);

/// Boundary trace coefficients c_k = a_k, k = 0..K. Requires Hardy-finite
/// coefficients (square-summable including the declared tail).
FourierCoeffs trace(const TaylorFunction& u, int bandwidth);

/// r -> [u_r - u*]_{W^{s,p}} over the stored coefficient range.
std::vector<std::pair<double, double>> trace_convergence(const TaylorFunction& u,
                                                         const SeminormParams& params,
                                                         const std::vector<double>& r_schedule,
                                                         const QuadratureConfig& quad = {});

/// Membership verdict for each s in the grid, plus a threshold estimate.
MembershipScan membership_scan(const TaylorFunction& u, const std::vector<double>& s_grid,
                               double p, const QuadratureConfig& quad = {});

/// Checks ||u|| <= ||u*|| <= (1 + C) ||u|| with C = kappa + (2 pi)^{1/p}.
NormEquivalenceReport norm_equivalence_check(const TaylorFunction& u,
                                             const SeminormParams& params, double kappa,
                                             const QuadratureConfig& quad = {});

}  // namespace gagliardo
