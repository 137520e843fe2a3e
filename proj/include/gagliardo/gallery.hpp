#pragma once

#include <map>
#include <string>
#include <vector>

#include "gagliardo/analytic.hpp"

namespace gagliardo {

enum class ExpectedRegime { finite, divergent, finite_sufficient_only, unknown };

struct GalleryParamSpec {
  std::string name;
  std::string range;
  double default_value;
};

struct GalleryInfo {
  std::string id;
  std::string description;
  std::vector<GalleryParamSpec> params;
};

/// The built-in generators:
///   monomial(n)            a_n = 1                       finite for all s
///   power_series(s0, eps)  a_k = k^{-s0-1/2-eps}          finite at s = s0 (p = 2)
///   log_singularity        a_k = 1/k                      sharp threshold s = 1/2 (p = 2)
///   holder_alpha(alpha)    binomial series of (1-z)^alpha finite for s < alpha (all p)
///   log_beta(s0, beta)     a_k = k^{-s0-1/2} (log k)^{-beta}, k >= 2
std::vector<GalleryInfo> gallery_list();

TaylorFunction gallery_make(const std::string& id, const std::map<std::string, double>& params,
                            int max_degree = 4096);

/// What the classification ought to be at (s, p), when known.
ExpectedRegime expected_regime(const std::string& id,
                               const std::map<std::string, double>& params, double s, double p);

/// Human-readable summary of the regime rule for an entry.
std::string regime_note(const std::string& id);

}  // namespace gagliardo
