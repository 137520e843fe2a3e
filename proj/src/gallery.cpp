#include "gagliardo/gallery.hpp"

#include <cmath>

namespace gagliardo {

namespace {

double get_param(const std::map<std::string, double>& params, const std::string& name) {
  auto it = params.find(name);
  if (it == params.end())
    throw std::invalid_argument("gallery: missing parameter '" + name + "'");
  return it->second;
}

TaylorFunction make_monomial(int n, int k_max) {
  if (n < 1) throw std::invalid_argument("gallery monomial: need n >= 1");
  CVector a = CVector::Zero(std::max(n, k_max) + 1);
  a[n] = 1.0;
  return TaylorFunction(std::move(a), TailPolicy::exact());
}

TaylorFunction make_power_series(double s0, double eps, int k_max) {
  if (!(s0 > 0.0 && s0 < 1.0) || !(eps > 0.0))
    throw std::invalid_argument("gallery power_series: need 0 < s0 < 1 and eps > 0");
  const double q = s0 + 0.5 + eps;
  CVector a = CVector::Zero(k_max + 1);
  for (int k = 1; k <= k_max; ++k) a[k] = std::pow(static_cast<double>(k), -q);
  return TaylorFunction(std::move(a), TailPolicy::power(1.0, q));
}

TaylorFunction make_log_singularity(int k_max) {
  CVector a = CVector::Zero(k_max + 1);
  for (int k = 1; k <= k_max; ++k) a[k] = 1.0 / k;
  return TaylorFunction(std::move(a), TailPolicy::power(1.0, 1.0));
}

TaylorFunction make_holder_alpha(double alpha, int k_max) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("gallery holder_alpha: need 0 < alpha < 1");
  // Binomial series of (1 - z)^alpha: a_k = binom(alpha, k) (-1)^k.
  CVector a = CVector::Zero(k_max + 1);
  a[0] = 1.0;
  double binom = 1.0;
  for (int k = 1; k <= k_max; ++k) {
    binom *= (alpha - (k - 1)) / k;
    a[k] = binom * ((k % 2 == 0) ? 1.0 : -1.0);
  }
  // |a_k| ~ k^{-1-alpha} / |Gamma(-alpha)|, decreasing after the first terms;
  // the last stored coefficient calibrates a safe constant.
  const double c = std::abs(a[k_max].real()) * std::pow(static_cast<double>(k_max), 1.0 + alpha) *
                   1.05;
  return TaylorFunction(std::move(a), TailPolicy::power(c, 1.0 + alpha));
}

TaylorFunction make_log_beta(double s0, double beta, int k_max) {
  if (!(s0 > 0.0 && s0 < 1.0) || !(beta > 0.5 && beta < 1.0))
    throw std::invalid_argument("gallery log_beta: need 0 < s0 < 1 and 1/2 < beta < 1");
  CVector a = CVector::Zero(k_max + 1);
  for (int k = 2; k <= k_max; ++k)
    a[k] = std::pow(static_cast<double>(k), -s0 - 0.5) * std::pow(std::log(static_cast<double>(k)), -beta);
  // (log k)^{-beta} <= (log k_max)^{-beta} for k > k_max.
  const double c = std::pow(std::log(static_cast<double>(k_max)), -beta);
  return TaylorFunction(std::move(a), TailPolicy::power(c, s0 + 0.5));
}

}  // namespace

std::vector<GalleryInfo> gallery_list() {
  return {
      {"monomial", "single mode z^n", {{"n", "integer >= 1", 1.0}}},
      {"power_series",
       "a_k = k^{-s0-1/2-eps}; seminorm-summable at s = s0 with margin eps (p = 2)",
       {{"s0", "(0,1)", 0.5}, {"eps", "> 0", 0.1}}},
      {"log_singularity", "a_k = 1/k, the series of log(1/(1-z)); threshold s = 1/2 (p = 2)", {}},
      {"holder_alpha",
       "binomial series of (1-z)^alpha, a Holder-alpha boundary function",
       {{"alpha", "(0,1)", 0.5}}},
      {"log_beta",
       "a_k = k^{-s0-1/2} (log k)^{-beta}, k >= 2; finite at s = s0 when beta > 1/2 (p = 2)",
       {{"s0", "(0,1)", 0.3}, {"beta", "(1/2,1)", 0.75}}},
  };
}

TaylorFunction gallery_make(const std::string& id, const std::map<std::string, double>& params,
                            int max_degree) {
  if (max_degree < 4) throw std::invalid_argument("gallery: max_degree too small");
  if (id == "monomial") {
    const double n = get_param(params, "n");
    if (n != std::floor(n)) throw std::invalid_argument("gallery monomial: n must be integral");
    return make_monomial(static_cast<int>(n), max_degree);
  }
  if (id == "power_series")
    return make_power_series(get_param(params, "s0"), get_param(params, "eps"), max_degree);
  if (id == "log_singularity") return make_log_singularity(max_degree);
  if (id == "holder_alpha") return make_holder_alpha(get_param(params, "alpha"), max_degree);
  if (id == "log_beta")
    return make_log_beta(get_param(params, "s0"), get_param(params, "beta"), max_degree);
  throw std::invalid_argument("gallery: unknown id '" + id + "'");
}

ExpectedRegime expected_regime(const std::string& id,
                               const std::map<std::string, double>& params, double s, double p) {
  if (id == "monomial") return ExpectedRegime::finite;
  if (id == "holder_alpha") {
    // The Holder bound gives finiteness for s < alpha at every p; nothing is
    // claimed at or above alpha.
    return s < get_param(params, "alpha") ? ExpectedRegime::finite_sufficient_only
                                          : ExpectedRegime::unknown;
  }
  if (p != 2.0) return ExpectedRegime::unknown;
  if (id == "power_series") {
    const double margin = get_param(params, "s0") + get_param(params, "eps");
    if (s < margin) return ExpectedRegime::finite;
    if (s > margin) return ExpectedRegime::divergent;
    return ExpectedRegime::unknown;
  }
  if (id == "log_singularity") {
    return s < 0.5 ? ExpectedRegime::finite : ExpectedRegime::divergent;
  }
  if (id == "log_beta") {
    const double s0 = get_param(params, "s0");
    if (s <= s0) return ExpectedRegime::finite;  // sum k^{-1} (log k)^{-2 beta}, 2 beta > 1
    return ExpectedRegime::divergent;
  }
  throw std::invalid_argument("gallery: unknown id '" + id + "'");
}

std::string regime_note(const std::string& id) {
  if (id == "monomial") return "finite for every 0 < s < 1 and 1 < p < inf";
  if (id == "power_series") return "p = 2: finite for s < s0 + eps, divergent above";
  if (id == "log_singularity") return "p = 2: finite iff s < 1/2; the threshold is sharp";
  if (id == "holder_alpha") return "finite for s < alpha (every p); unknown at or above alpha";
  if (id == "log_beta") return "p = 2: finite iff s <= s0 (beta > 1/2)";
  throw std::invalid_argument("gallery: unknown id '" + id + "'");
}

}  // namespace gagliardo
