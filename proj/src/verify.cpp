#include "gagliardo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gagliardo/analytic.hpp"
#include "gagliardo/circle.hpp"
#include "gagliardo/gallery.hpp"
#include "gagliardo/poincare.hpp"
#include "gagliardo/poisson.hpp"
#include "gagliardo/report.hpp"
#include "gagliardo/rng.hpp"
#include "gagliardo/stats.hpp"
#include "gagliardo/stochastic.hpp"
#include "gagliardo/version.hpp"

namespace gagliardo {

namespace {

std::string fmt(double v) { return JsonWriter::format_number(v); }

FourierCoeffs random_poly(int bandwidth, RngStream& rng) {
  FourierCoeffs c = FourierCoeffs::zeros(bandwidth);
  for (int k = -bandwidth; k <= bandwidth; ++k)
    c.set_coeff(k, Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)));
  return c;
}

FourierCoeffs random_real_poly(int bandwidth, RngStream& rng) {
  FourierCoeffs c = FourierCoeffs::zeros(bandwidth);
  for (int k = 1; k <= bandwidth; ++k) {
    const Complex ck(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    c.set_coeff(k, ck);
    c.set_coeff(-k, std::conj(ck));
  }
  return c;
}

struct Context {
  VerifyOptions options;
  EtaCache eta_cache;  ///< local cache, perturbed when the fixture asks for it

  explicit Context(const VerifyOptions& opt) : options(opt) {
    eta_cache.set_perturbation(opt.eta_perturb);
  }
  double eta(double s) { return eta_cache.get(s).eta; }
};

// --- criterion 1: spectral/quadrature agreement --------------------------
CriterionResult criterion_1(Context& ctx) {
  CriterionResult res{1, "spectral/quadrature agreement", "seminorm", true, ""};
  QuadratureConfig quad;
  quad.nodes = 2048;
  RngStream rng(ctx.options.seed, 100);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const FourierCoeffs c = random_poly(8, rng);
    for (double s : {0.25, 0.5, 0.75}) {
      const double spectral = gagliardo_spectral(c, s, ctx.eta(s));
      const double quadrature = gagliardo_quadrature(c, SeminormParams(s, 2.0), quad);
      worst = std::max(worst, std::abs(quadrature / spectral - 1.0));
    }
  }
  res.passed = worst < 5e-3;
  res.detail = "max relative disagreement " + fmt(worst) + " (150 cases, tol 5e-3)";
  return res;
}

// --- criterion 2: multiplier scaling --------------------------------------
CriterionResult criterion_2(Context&) {
  CriterionResult res{2, "quadrature multiplier scaling", "seminorm", true, ""};
  QuadratureConfig quad;
  quad.nodes = 2048;
  double worst = 0.0;
  for (double s : {0.25, 0.5, 0.75}) {
    FourierCoeffs mode1 = FourierCoeffs::zeros(1);
    mode1.set_coeff(1, 1.0);
    const double q1 = gagliardo_quadrature(mode1, SeminormParams(s, 2.0), quad);
    for (int k = 2; k <= 8; ++k) {
      FourierCoeffs mode = FourierCoeffs::zeros(k);
      mode.set_coeff(k, 1.0);
      const double qk = gagliardo_quadrature(mode, SeminormParams(s, 2.0), quad);
      const double ratio = (qk * qk) / (q1 * q1);
      worst = std::max(worst, std::abs(ratio / std::pow(static_cast<double>(k), 2.0 * s) - 1.0));
    }
  }
  res.passed = worst < 5e-3;
  res.detail = "max |ratio/k^{2s} - 1| = " + fmt(worst) + " for k <= 8 (tol 5e-3)";
  return res;
}

// --- criterion 3: Poisson contraction -------------------------------------
CriterionResult criterion_3(Context& ctx) {
  CriterionResult res{3, "Poisson contraction", "poisson", true, ""};
  QuadratureConfig quad;
  quad.nodes = 1024;
  RngStream rng(ctx.options.seed, 300);
  double worst = 1e300;
  int cases = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const FourierCoeffs c = random_poly(8, rng);
    for (double p : {2.0, 3.0}) {
      for (double r : {0.5, 0.9, 0.99}) {
        const double gap = contraction_gap(c, Radius(r), SeminormParams(0.5, p), quad);
        worst = std::min(worst, gap);
        ++cases;
      }
    }
  }
  res.passed = worst >= -1e-9;
  res.detail = "min gap " + fmt(worst) + " over " + std::to_string(cases) + " cases";
  return res;
}

// --- criterion 4: semigroup exactness --------------------------------------
CriterionResult criterion_4(Context& ctx) {
  CriterionResult res{4, "Poisson semigroup exactness", "poisson", true, ""};
  RngStream rng(ctx.options.seed, 400);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const FourierCoeffs c = random_poly(16, rng);
    const double r1 = rng.uniform(0.0, 1.0);
    const double r2 = rng.uniform(0.0, 1.0);
    worst = std::max(worst, semigroup_residual(c, Radius(r1), Radius(r2)));
  }
  res.passed = worst <= 1e-12;
  res.detail = "max residual " + fmt(worst) + " over 100 triples";
  return res;
}

// --- criterion 5: profile monotonicity -------------------------------------
CriterionResult criterion_5(Context&) {
  CriterionResult res{5, "seminorm profile monotonicity", "analytic", true, ""};
  QuadratureConfig quad;
  quad.nodes = 2048;
  const auto schedule = default_r_schedule(10);
  const std::vector<std::pair<std::string, std::map<std::string, double>>> entries = {
      {"monomial", {{"n", 3.0}}},
      {"power_series", {{"s0", 0.5}, {"eps", 0.1}}},
      {"log_singularity", {}},
      {"holder_alpha", {{"alpha", 0.5}}},
      {"log_beta", {{"s0", 0.3}, {"beta", 0.75}}},
  };
  double worst = 1e300;
  std::string worst_at;
  for (const auto& [id, params] : entries) {
    const TaylorFunction u = gallery_make(id, params);
    for (double s : {0.25, 0.5, 0.75}) {
      for (double p : {2.0, 3.0}) {
        const auto method = p == 2.0 ? ProfileMethod::spectral : ProfileMethod::quadrature;
        const auto profile = seminorm_profile(u, SeminormParams(s, p), schedule, method, quad);
        for (std::size_t i = 1; i < profile.entries.size(); ++i) {
          const double inc = profile.entries[i].value - profile.entries[i - 1].value;
          if (inc < worst) {
            worst = inc;
            worst_at = id + " s=" + fmt(s) + " p=" + fmt(p);
          }
        }
      }
    }
  }
  res.passed = worst >= -1e-9;
  res.detail = "min increment " + fmt(worst) + " (at " + worst_at + ")";
  return res;
}

// --- criterion 6: monomial law ---------------------------------------------
CriterionResult criterion_6(Context&) {
  CriterionResult res{6, "monomial sup-seminorm law", "analytic", true, ""};
  double worst = 0.0;
  for (double s : {0.25, 0.5, 0.75}) {
    const TaylorFunction u4 = gallery_make("monomial", {{"n", 4.0}}, 8);
    const TaylorFunction u2 = gallery_make("monomial", {{"n", 2.0}}, 8);
    const auto v4 = sup_seminorm(u4, SeminormParams(s, 2.0));
    const auto v2 = sup_seminorm(u2, SeminormParams(s, 2.0));
    if (v4.classification != Membership::finite || v2.classification != Membership::finite) {
      res.passed = false;
      res.detail = "monomial classified non-finite";
      return res;
    }
    const double ratio = v4.sup_estimate / v2.sup_estimate;
    worst = std::max(worst, std::abs(ratio / std::pow(2.0, s) - 1.0));
  }
  res.passed = worst < 1e-3;
  res.detail = "max |ratio/2^s - 1| = " + fmt(worst);
  return res;
}

// --- criterion 7: sharp threshold ------------------------------------------
CriterionResult criterion_7(Context&) {
  CriterionResult res{7, "sharp threshold for the log singularity", "analytic", true, ""};
  const TaylorFunction u = gallery_make("log_singularity", {});
  const std::vector<double> s_grid = {0.30, 0.40, 0.45, 0.50, 0.60};
  const auto scan = membership_scan(u, s_grid, 2.0);
  const std::vector<Membership> expected = {Membership::finite, Membership::finite,
                                            Membership::finite, Membership::divergent,
                                            Membership::divergent};
  std::string got;
  bool classes_ok = true;
  for (std::size_t i = 0; i < scan.entries.size(); ++i) {
    const auto cls = scan.entries[i].second.classification;
    got += (cls == Membership::finite ? "finite" : cls == Membership::divergent ? "divergent"
                                                                                : "inconclusive");
    got += i + 1 < scan.entries.size() ? "/" : "";
    classes_ok = classes_ok && cls == expected[i];
  }
  const bool threshold_ok = scan.threshold >= 0.44 && scan.threshold <= 0.51;
  res.passed = classes_ok && threshold_ok;
  res.detail = got + ", threshold " + fmt(scan.threshold);
  return res;
}

// --- criterion 8: power-series membership ----------------------------------
CriterionResult criterion_8(Context&) {
  CriterionResult res{8, "power-series sup-seminorm value", "analytic", true, ""};
  const double s = 0.5;
  const TaylorFunction u = gallery_make("power_series", {{"s0", 0.5}, {"eps", 0.1}});
  const auto verdict = sup_seminorm(u, SeminormParams(s, 2.0));
  if (verdict.classification != Membership::finite) {
    res.passed = false;
    res.detail = "classified non-finite";
    return res;
  }
  // Independent oracle: partial sum of k^{-1.2} over the stored range plus an
  // integral tail bound.
  double partial = 0.0;
  for (int k = u.max_degree(); k >= 1; --k) partial += std::pow(static_cast<double>(k), -1.2);
  const double tail = std::pow(static_cast<double>(u.max_degree()), -0.2) / 0.2;
  const double oracle = eta_constant(s).eta * (partial + tail);
  const double got = verdict.sup_estimate * verdict.sup_estimate;
  const double err = std::abs(got / oracle - 1.0);
  res.passed = err < 1e-2;
  res.detail = "sup^2 = " + fmt(got) + ", oracle " + fmt(oracle) + ", rel err " + fmt(err);
  return res;
}

// --- criterion 9: Holder regime --------------------------------------------
CriterionResult criterion_9(Context&) {
  CriterionResult res{9, "Holder-alpha finite regime", "analytic", true, ""};
  const TaylorFunction u = gallery_make("holder_alpha", {{"alpha", 0.5}});
  QuadratureConfig quad;
  quad.nodes = 1024;
  std::string detail;
  bool ok = true;
  for (double s : {0.2, 0.3, 0.4}) {
    for (double p : {2.0, 3.0}) {
      const auto v = sup_seminorm(u, SeminormParams(s, p), 0.02, quad);
      const bool fin = v.classification == Membership::finite;
      ok = ok && fin;
      detail += "s=" + fmt(s) + ",p=" + fmt(p) + ":" + (fin ? "finite" : "NOT-finite") + " ";
    }
  }
  res.passed = ok;
  res.detail = detail;
  return res;
}

// --- criterion 10: trace convergence ----------------------------------------
CriterionResult criterion_10(Context&) {
  CriterionResult res{10, "trace convergence rate and closed form", "analytic", true, ""};
  const SeminormParams params(0.5, 2.0);
  std::string detail;
  bool ok = true;
  for (const auto& [id, gparams] :
       std::vector<std::pair<std::string, std::map<std::string, double>>>{
           {"monomial", {{"n", 3.0}}}, {"power_series", {{"s0", 0.5}, {"eps", 0.1}}}}) {
    const TaylorFunction u = gallery_make(id, gparams);
    std::vector<double> rs = {0.5, 1.0 - std::ldexp(1.0, -10)};
    const auto conv = trace_convergence(u, params, rs);
    // Independent closed-form check: eta sum k^{2s} |a_k|^2 (1 - r^k)^2.
    const double eta = eta_constant(params.s).eta;
    double closed_form_err = 0.0;
    for (const auto& [r, value] : conv) {
      double acc = 0.0;
      for (int k = u.max_degree(); k >= 1; --k) {
        const double d = 1.0 - std::pow(r, k);
        acc += std::pow(static_cast<double>(k), 2.0 * params.s) * std::norm(u.a(k)) * d * d;
      }
      closed_form_err = std::max(closed_form_err, std::abs(value / std::sqrt(eta * acc) - 1.0));
    }
    const double decay_ratio = conv[1].second / conv[0].second;
    const bool entry_ok = decay_ratio < 1e-2 && closed_form_err < 5e-3;
    ok = ok && entry_ok;
    detail += id + ": decay ratio " + fmt(decay_ratio) + ", closed-form err " +
              fmt(closed_form_err) + (entry_ok ? " (ok) " : " (FAIL) ");
  }
  res.passed = ok;
  res.detail = detail;
  return res;
}

// --- criterion 11: Poincare exactness at p = 2 -------------------------------
CriterionResult criterion_11(Context& ctx) {
  CriterionResult res{11, "Poincare constant exactness (p = 2)", "poincare", true, ""};
  QuadratureConfig quad;
  quad.nodes = 256;
  RngStream rng(ctx.options.seed, 1100);
  bool ok = true;
  std::string detail;
  for (double s : {0.25, 0.5, 0.75}) {
    const double exact = kappa_exact_p2(s);
    SearchConfig cfg;
    cfg.seed = ctx.options.seed;
    const auto est = kappa_search(SeminormParams(s, 2.0), cfg);
    const double search_err = std::abs(est.kappa_lower / exact - 1.0);
    double excess = -1e300;
    for (int i = 0; i < 1000; ++i) {
      const FourierCoeffs c = random_real_poly(16, rng);
      excess = std::max(excess, poincare_ratio(c, SeminormParams(s, 2.0), quad) - exact);
    }
    const bool s_ok = search_err < 1e-2 && excess <= 1e-9;
    ok = ok && s_ok;
    detail += "s=" + fmt(s) + ": search err " + fmt(search_err) + ", sweep excess " +
              fmt(excess) + " ";
  }
  res.passed = ok;
  res.detail = detail;
  return res;
}

// --- criterion 12: norm equivalence ------------------------------------------
CriterionResult criterion_12(Context&) {
  CriterionResult res{12, "trace-norm equivalence", "poincare", true, ""};
  const SeminormParams params(0.5, 2.0);
  const double kappa = kappa_exact_p2(params.s);
  bool ok = true;
  std::string detail;
  std::vector<std::pair<std::string, std::map<std::string, double>>> cases;
  for (int n = 1; n <= 4; ++n)
    cases.push_back({"monomial", {{"n", static_cast<double>(n)}}});
  cases.push_back({"power_series", {{"s0", 0.5}, {"eps", 0.1}}});
  for (const auto& [id, gparams] : cases) {
    const TaylorFunction u = gallery_make(id, gparams);
    const auto rep = norm_equivalence_check(u, params, kappa);
    ok = ok && rep.holds;
    detail += id + (id == "monomial" ? fmt(gparams.at("n")) : "") +
              (rep.holds ? ":ok " : ":FAIL ");
  }
  res.passed = ok;
  res.detail = detail + "(C = " + fmt(kappa + std::sqrt(kTwoPi)) + ")";
  return res;
}

// --- criterion 13: harmonic-measure sampling ----------------------------------
CriterionResult criterion_13(Context& ctx) {
  CriterionResult res{13, "harmonic measure exit-angle law", "stochastic", true, ""};
  constexpr int kBins = 64;
  constexpr long kSamples = 100000;
  const std::vector<Complex> zs = {{0.0, 0.0}, {0.3, 0.0}, {0.5, 0.2}, {0.9, 0.0}};
  bool ok = true;
  std::string detail;
  for (std::size_t zi = 0; zi < zs.size(); ++zi) {
    const Complex z = zs[zi];
    RngStream rng = RngStream(ctx.options.seed, 1300).derive(zi);
    std::vector<long> counts(kBins, 0);
    for (long i = 0; i < kSamples; ++i) {
      const double theta = exit_angle_sample(z, rng);
      int bin = static_cast<int>((theta + kPi) / (kTwoPi / kBins));
      bin = std::clamp(bin, 0, kBins - 1);
      ++counts[bin];
    }
    // Expected bin masses by Gauss integration of the Poisson density.
    const double r = std::abs(z), alpha = std::arg(z);
    double stat = 0.0;
    for (int b = 0; b < kBins; ++b) {
      const double lo = -kPi + kTwoPi * b / kBins;
      const double hi = lo + kTwoPi / kBins;
      double mass = 0.0;
      constexpr int kSub = 16;
      for (int q = 0; q < kSub; ++q) {
        const double t = lo + (q + 0.5) * (hi - lo) / kSub;
        mass += poisson_kernel(Radius(r), t - alpha) / kTwoPi * (hi - lo) / kSub;
      }
      const double expected = kSamples * mass;
      stat += (counts[b] - expected) * (counts[b] - expected) / expected;
    }
    const double pvalue = chi_square_pvalue(stat, kBins - 1);
    ok = ok && pvalue > 0.001;
    detail += "z=(" + fmt(z.real()) + "," + fmt(z.imag()) + "): chi2 " + fmt(stat) + " p " +
              fmt(pvalue) + " ";
  }
  res.passed = ok;
  res.detail = detail;
  return res;
}

// --- criterion 14: MC value function -------------------------------------------
CriterionResult criterion_14(Context& ctx) {
  CriterionResult res{14, "Monte Carlo value function", "stochastic", true, ""};
  FourierCoeffs cosine = FourierCoeffs::zeros(1);
  cosine.set_coeff(1, 0.5);
  cosine.set_coeff(-1, 0.5);
  const Complex z(0.5, 0.0);
  const Complex truth = harmonic_extension_at(cosine, z);  // = 0.5
  int covered = 0;
  constexpr int kReps = 50;
  for (int rep = 0; rep < kReps; ++rep) {
    RngStream rng = RngStream(ctx.options.seed, 1400).derive(rep);
    const McEstimate est = value_mc(cosine, z, 10000, rng);
    if (std::abs(est.mean - truth) <= 2.0 * est.stderr_) ++covered;
  }
  RngStream rng0 = RngStream(ctx.options.seed, 1400).derive(999);
  const McEstimate center = value_mc(cosine, Complex(0.0, 0.0), 10000, rng0);
  const bool center_ok = std::abs(center.mean) <= 3.0 * center.stderr_;
  res.passed = covered >= 45 && center_ok;
  res.detail = "coverage " + std::to_string(covered) + "/50, |V(0)| = " +
               fmt(std::abs(center.mean)) + " vs 3*stderr " + fmt(3.0 * center.stderr_);
  return res;
}

using CriterionFn = CriterionResult (*)(Context&);

struct CriterionSpec {
  int id;
  const char* module_tag;
  CriterionFn fn;
};

const CriterionSpec kCriteria[] = {
    {1, "seminorm", criterion_1},   {2, "seminorm", criterion_2},
    {3, "poisson", criterion_3},    {4, "poisson", criterion_4},
    {5, "analytic", criterion_5},   {6, "analytic", criterion_6},
    {7, "analytic", criterion_7},   {8, "analytic", criterion_8},
    {9, "analytic", criterion_9},   {10, "analytic", criterion_10},
    {11, "poincare", criterion_11}, {12, "poincare", criterion_12},
    {13, "stochastic", criterion_13}, {14, "stochastic", criterion_14},
};

bool selected(const CriterionSpec& spec, const std::string& only) {
  if (only.empty()) return true;
  if (only == std::to_string(spec.id)) return true;
  return only == spec.module_tag;
}

std::string results_payload(const std::vector<CriterionResult>& results) {
  JsonWriter w;
  w.begin_array();
  for (const auto& r : results) {
    w.begin_object();
    w.key("id").value(r.id);
    w.key("name").value(r.name);
    w.key("module").value(r.module_tag);
    w.key("passed").value(r.passed);
    w.key("detail").value(r.detail);
    w.end_object();
  }
  w.end_array();
  return w.str();
}

std::vector<CriterionResult> run_criteria(const VerifyOptions& options) {
  Context ctx(options);
  std::vector<CriterionResult> results;
  for (const auto& spec : kCriteria) {
    if (!selected(spec, options.only)) continue;
    try {
      CriterionResult r = spec.fn(ctx);
      r.module_tag = spec.module_tag;
      results.push_back(std::move(r));
    } catch (const std::exception& e) {
      results.push_back({spec.id, "criterion raised", spec.module_tag, false, e.what()});
    }
  }
  return results;
}

}  // namespace

VerifyOutcome run_verify(const VerifyOptions& options) {
  VerifyOutcome outcome;
  outcome.results = run_criteria(options);

  const bool want_15 = options.only.empty() || options.only == "15" ||
                       options.only == "determinism";
  if (want_15) {
    const std::string first = results_payload(outcome.results);
    const std::string second = results_payload(run_criteria(options));
    CriterionResult det{15, "determinism of the verification report", "determinism",
                        first == second,
                        first == second ? "two runs byte-identical"
                                        : "reports differ between runs"};
    outcome.results.push_back(det);
  }

  outcome.all_passed = true;
  for (const auto& r : outcome.results) outcome.all_passed = outcome.all_passed && r.passed;

  JsonWriter w;
  w.begin_object();
  w.key("config").begin_object();
  w.key("command").value("verify");
  w.key("seed").value(static_cast<long long>(options.seed));
  w.key("only").value(options.only);
  w.key("eta_perturb").value(options.eta_perturb);
  w.end_object();
  w.key("version").value(kVersion);
  w.key("eta_cache").begin_array();
  for (const auto& e : default_eta_cache().snapshot()) {
    w.begin_object();
    w.key("s").value(e.s);
    w.key("eta").value(e.eta);
    w.key("drift").value(e.drift);
    w.key("resolution").value(e.resolution);
    w.end_object();
  }
  w.end_array();
  w.key("results");
  w.str();  // no-op; keep writer in key state
  // splice the already built results payload
  // (same formatting rules, so determinism is preserved)
  JsonWriter results_writer;
  w.key("");  // placeholder, replaced below
  (void)results_writer;
  w.end_object();
  // Rebuild cleanly: assembling via string splice keeps one code path for the
  // payload used by both the report and the determinism check.
  std::string payload = results_payload(outcome.results);
  JsonWriter full;
  full.begin_object();
  full.key("config").begin_object();
  full.key("command").value("verify");
  full.key("seed").value(static_cast<long long>(options.seed));
  full.key("only").value(options.only);
  full.key("eta_perturb").value(options.eta_perturb);
  full.end_object();
  full.key("version").value(kVersion);
  full.key("eta_cache").begin_array();
  for (const auto& e : default_eta_cache().snapshot()) {
    full.begin_object();
    full.key("s").value(e.s);
    full.key("eta").value(e.eta);
    full.key("drift").value(e.drift);
    full.key("resolution").value(e.resolution);
    full.end_object();
  }
  full.end_array();
  std::string head = full.str();
  head += ",\"results\":" + payload + ",\"all_passed\":";
  head += outcome.all_passed ? "true" : "false";
  head += "}";
  outcome.report_json = head;
  return outcome;
}

}  // namespace gagliardo
