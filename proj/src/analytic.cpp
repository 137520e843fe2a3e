#include "gagliardo/analytic.hpp"

#include <algorithm>
#include <cmath>

#include "gagliardo/circle.hpp"
#include "gagliardo/kernels.hpp"
#include "gagliardo/summation.hpp"

namespace gagliardo {

namespace {

// sum_{k=1}^{Kmax} k^{w} |a_k|^2 r^{2k}, descending k so small terms accumulate first.
double head_sum(const TaylorFunction& u, double weight_exp, double r) {
  KahanSum acc;
  for (int k = u.max_degree(); k >= 1; --k) {
    const double ak2 = std::norm(u.a(k));
    if (ak2 == 0.0) continue;
    acc.add(std::pow(static_cast<double>(k), weight_exp) * ak2 *
            std::pow(r, 2.0 * k));
  }
  return acc.value();
}

// Tail model sum_{k > Kmax} C^2 k^{-gamma} r^{2k} with gamma = 2q - w.
// For r = 1 this needs gamma > 1; uses direct summation plus an
// Euler-Maclaurin closure. For r < 1 it sums until the terms are negligible.
double tail_sum(const TaylorFunction& u, double weight_exp, double r) {
  if (u.tail.kind == TailPolicy::Kind::exact || u.tail.constant == 0.0) return 0.0;
  const double c2 = u.tail.constant * u.tail.constant;
  const double gamma = 2.0 * u.tail.exponent - weight_exp;
  const int k0 = u.max_degree() + 1;
  if (r >= 1.0) {
    if (gamma <= 1.0 + 1e-12)
      throw std::domain_error("tail_sum: tail model not summable at r = 1");
    constexpr int kDirect = 1 << 16;
    KahanSum acc;
    const double n = static_cast<double>(k0 + kDirect);
    for (int k = k0 + kDirect - 1; k >= k0; --k)
      acc.add(std::pow(static_cast<double>(k), -gamma));
    // sum_{k >= n} k^{-gamma} = n^{1-gamma}/(gamma-1) + n^{-gamma}/2 + gamma n^{-gamma-1}/12 - ...
    acc.add(std::pow(n, 1.0 - gamma) / (gamma - 1.0) + 0.5 * std::pow(n, -gamma) +
            gamma * std::pow(n, -gamma - 1.0) / 12.0);
    return c2 * acc.value();
  }
  const double r2 = r * r;
  double acc = 0.0;
  double rpow = std::pow(r, 2.0 * k0);
  for (int k = k0;; ++k) {
    const double term = std::pow(static_cast<double>(k), -gamma) * rpow;
    acc += term;
    if (term < 1e-18 * (acc + 1e-300) || k - k0 > 50'000'000) break;
    rpow *= r2;
  }
  return c2 * acc;
}

// Dyadic block energies b_j = sum_{2^j <= k < 2^{j+1}} k^{2s} |a_k|^2 over
// the stored range.
std::vector<double> dyadic_blocks(const TaylorFunction& u, double s) {
  std::vector<double> blocks;
  const int kmax = u.max_degree();
  for (int j = 0; (1 << j) <= kmax; ++j) {
    KahanSum acc;
    const int hi = std::min(kmax, (2 << j) - 1);
    for (int k = hi; k >= (1 << j); --k)
      acc.add(std::pow(static_cast<double>(k), 2.0 * s) * std::norm(u.a(k)));
    blocks.push_back(acc.value());
  }
  return blocks;
}

double ols_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const int n = static_cast<int>(xs.size());
  double mx = 0, my = 0;
  for (int i = 0; i < n; ++i) { mx += xs[i]; my += ys[i]; }
  mx /= n; my /= n;
  double num = 0, den = 0;
  for (int i = 0; i < n; ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  return den > 0 ? num / den : 0.0;
}

int slice_bandwidth(const TaylorFunction& u, const QuadratureConfig& quad) {
  return std::min(u.max_degree(), quad.nodes / 2 - 1);
}

// sup-norm bound on the neglected tail of a slice truncated at bandwidth K.
double slice_tail_sup(const TaylorFunction& u, double r, int bandwidth) {
  if (u.tail.kind == TailPolicy::Kind::exact && bandwidth >= u.max_degree()) return 0.0;
  KahanSum acc;
  for (int k = u.max_degree(); k > bandwidth; --k)
    acc.add(std::abs(u.a(k)) * std::pow(r, k));
  double tail = 0.0;
  if (u.tail.kind == TailPolicy::Kind::power_bound && u.tail.constant > 0.0 && r > 0.0) {
    double rpow = std::pow(r, u.max_degree() + 1);
    for (int k = u.max_degree() + 1;; ++k) {
      const double term = u.tail.constant * std::pow(static_cast<double>(k), -u.tail.exponent) * rpow;
      tail += term;
      if (term < 1e-18 * (tail + 1e-300) || k > u.max_degree() + 50'000'000) break;
      rpow *= r;
    }
  }
  return acc.value() + tail;
}

// Profile-based classification for the general-p path.
MembershipVerdict classify_from_profile(const std::vector<double>& values, double tol) {
  MembershipVerdict v;
  const int n = static_cast<int>(values.size());
  std::vector<double> xs, ys;
  const int fit = std::min(4, n);
  for (int i = n - fit; i < n; ++i) {
    xs.push_back((i + 1) * std::log(2.0));  // log(1/(1-r_j)) = j log 2
    ys.push_back(std::log(std::max(values[i], 1e-300)));
  }
  v.diagnostics.profile_slope = ols_slope(xs, ys);
  v.diagnostics.cauchy_gap =
      std::abs(values[n - 1] - values[n - 2]) / std::max(values[n - 1], 1e-300);
  if (v.diagnostics.profile_slope > 0.05) {
    v.classification = Membership::divergent;
    v.growth_exponent = v.diagnostics.profile_slope;
    v.diagnostics.rule = "profile-slope";
  } else if (v.diagnostics.cauchy_gap <= tol) {
    v.classification = Membership::finite;
    v.sup_estimate = values[n - 1];
    v.diagnostics.rule = "profile-cauchy";
  } else {
    v.classification = Membership::inconclusive;
    v.diagnostics.rule = "profile-ambiguous";
  }
  return v;
}

}  // namespace

FourierCoeffs radial_slice(const TaylorFunction& u, Radius r, int bandwidth) {
  // Modes beyond coverage are zero; with a power tail the induced error is
  // bounded by the declared policy (see slice_tail_bound).
  FourierCoeffs out = FourierCoeffs::zeros(bandwidth);
  const int top = std::min(bandwidth, u.max_degree());
  for (int k = 0; k <= top; ++k) {
    out.set_coeff(k, u.a(k) * std::pow(static_cast<double>(r), k));
  }
  return out;
}

double slice_tail_bound(const TaylorFunction& u, double r, double s) {
  return std::sqrt(eta_constant(s).eta * tail_sum(u, 2.0 * s, r));
}

SeminormProfile seminorm_profile(const TaylorFunction& u, const SeminormParams& params,
                                 const std::vector<double>& r_schedule, ProfileMethod method,
                                 const QuadratureConfig& quad) {
  SeminormProfile profile{params, method, {}};
  for (std::size_t i = 1; i < r_schedule.size(); ++i)
    if (!(r_schedule[i] > r_schedule[i - 1]))
      throw std::invalid_argument("seminorm_profile: schedule must be strictly increasing");

  if (method == ProfileMethod::spectral) {
    if (params.p != 2.0)
      throw std::invalid_argument("seminorm_profile: spectral method requires p = 2");
    const double eta = eta_constant(params.s).eta;
    for (double r : r_schedule) {
      ProfileEntry e;
      e.r = r;
      const double head = head_sum(u, 2.0 * params.s, r);
      const double tail = tail_sum(u, 2.0 * params.s, r);
      e.value = std::sqrt(eta * head);
      e.uncertainty = std::sqrt(eta * (head + tail)) - e.value;
      e.resolved = e.uncertainty <= 1e-6 * std::max(e.value, 1.0);
      profile.entries.push_back(e);
    }
    return profile;
  }

  const int K = slice_bandwidth(u, quad);
  const RVector w = quadrature_weights(quad.nodes, params.s, params.p, quad.kernel);
  double wsum = 0.0;
  for (int d = 0; d < quad.nodes; ++d) wsum += w[d];
  for (double r : r_schedule) {
    ProfileEntry e;
    e.r = r;
    const FourierCoeffs slice = radial_slice(u, Radius(r), K);
    e.value = gagliardo_quadrature(slice, params, quad);
    const double sup_err = slice_tail_sup(u, r, K);
    e.uncertainty = 2.0 * std::pow(kTwoPi * wsum, 1.0 / params.p) * sup_err;
    e.resolved = e.uncertainty <= 1e-6 * std::max(e.value, 1.0);
    profile.entries.push_back(e);
  }
  return profile;
}

MembershipVerdict sup_seminorm(const TaylorFunction& u, const SeminormParams& params,
                               double tol, const QuadratureConfig& quad) {
  if (params.p == 2.0) {
    const double eta = eta_constant(params.s).eta;
    MembershipVerdict v;
    // Profile diagnostics on the default schedule (reported, not decisive).
    {
      const auto rs = default_r_schedule(12);
      std::vector<double> xs, ys;
      for (int j = 9; j <= 12; ++j) {
        const double r = rs[j - 1];
        const double val = eta * (head_sum(u, 2.0 * params.s, r) + tail_sum(u, 2.0 * params.s, r));
        xs.push_back(j * std::log(2.0));
        ys.push_back(0.5 * std::log(std::max(val, 1e-300)));
      }
      v.diagnostics.profile_slope = ols_slope(xs, ys);
      v.diagnostics.cauchy_gap = std::abs(std::exp(ys[3] - ys[2]) - 1.0);
    }

    if (u.tail.kind == TailPolicy::Kind::exact || u.tail.constant == 0.0) {
      v.classification = Membership::finite;
      v.sup_estimate = std::sqrt(eta * head_sum(u, 2.0 * params.s, 1.0));
      v.diagnostics.rule = "exact-tail";
      return v;
    }
    if (2.0 * (u.tail.exponent - params.s) > 1.0 + 1e-12) {
      v.classification = Membership::finite;
      v.sup_estimate = std::sqrt(
          eta * (head_sum(u, 2.0 * params.s, 1.0) + tail_sum(u, 2.0 * params.s, 1.0)));
      v.diagnostics.rule = "tail-bound-summable";
      return v;
    }
    // Tail bound not summable: decide from the dyadic block energies of the
    // stored coefficients.
    const auto blocks = dyadic_blocks(u, params.s);
    const int nb = static_cast<int>(blocks.size());
    if (nb < 2) {
      v.classification = Membership::inconclusive;
      v.diagnostics.rule = "block-empty";
      return v;
    }
    std::vector<double> xs, ys;
    const int fit = std::min(4, nb);
    for (int j = nb - fit; j < nb; ++j) {
      xs.push_back(j);
      ys.push_back(std::log2(std::max(blocks[j], 1e-300)));
    }
    const double slope = ols_slope(xs, ys);
    v.diagnostics.block_slope = slope;
    double recent_max = 0.0;
    for (int j = nb / 2; j < nb; ++j) recent_max = std::max(recent_max, blocks[j]);
    if (recent_max == 0.0) {
      v.classification = Membership::inconclusive;
      v.diagnostics.rule = "block-empty";
      return v;
    }
    if (slope >= 0.02) {
      v.classification = Membership::divergent;
      v.growth_exponent = 0.5 * slope;
      v.diagnostics.rule = "block-growth";
    } else if (slope <= -0.02) {
      const double g = std::exp2(slope);
      const double extrapolated = blocks[nb - 1] * g / (1.0 - g);
      v.classification = Membership::finite;
      v.sup_estimate = std::sqrt(eta * (head_sum(u, 2.0 * params.s, 1.0) + extrapolated));
      v.diagnostics.rule = "block-decay-extrapolated";
    } else if (blocks[nb - 1] >= 0.5 * recent_max) {
      v.classification = Membership::divergent;
      v.growth_exponent = 0.5 * std::max(slope, 0.0);
      v.diagnostics.rule = "block-plateau";
    } else {
      v.classification = Membership::inconclusive;
      v.diagnostics.rule = "block-ambiguous";
    }
    return v;
  }

  // General p: quadrature profile on the geometric schedule.
  const auto profile = seminorm_profile(u, params, default_r_schedule(10),
                                        ProfileMethod::quadrature, quad);
  std::vector<double> values;
  for (const auto& e : profile.entries) values.push_back(e.value);
  return classify_from_profile(values, tol);
}

double disc_norm(const TaylorFunction& u, const SeminormParams& params) {
  const MembershipVerdict v = sup_seminorm(u, params);
  if (v.classification == Membership::divergent)
    throw std::domain_error("disc_norm: seminorm sup diverges; the function is not a member");
  if (v.classification == Membership::inconclusive)
    throw std::runtime_error("disc_norm: membership inconclusive at working resolution");
  return std::abs(u.a(0)) + v.sup_estimate;
}

double hardy_norm(const TaylorFunction& u, double p, double tol) {
  if (p == 2.0) {
    if (u.tail.kind == TailPolicy::Kind::power_bound && u.tail.constant > 0.0 &&
        2.0 * u.tail.exponent <= 1.0 + 1e-12)
      throw std::domain_error("hardy_norm: coefficient tail is not square-summable");
    KahanSum acc;
    for (int k = u.max_degree(); k >= 0; --k) acc.add(std::norm(u.a(k)));
    return std::sqrt(acc.value() + tail_sum(u, 0.0, 1.0));
  }
  // General p: normalized means over the geometric schedule; Hardy convexity
  // makes them non-decreasing, which is asserted as a resolution check.
  const auto rs = default_r_schedule(12);
  const int K = u.max_degree();
  int n = 512;
  while (n < 2 * K + 2) n *= 2;
  double prev = -1.0, last = 0.0;
  for (double r : rs) {
    const GridFunction grid = synthesize(radial_slice(u, Radius(r), K), n);
    const double mean = lp_norm(grid, p, /*normalized=*/true);
    if (mean < prev - 1e-9 * std::max(1.0, prev))
      throw std::runtime_error("hardy_norm: means decreased beyond tolerance (resolution)");
    prev = mean;
    last = mean;
  }
  (void)tol;
  return last;
}

FourierCoeffs trace(const TaylorFunction& u, int bandwidth) {
  if (u.tail.kind == TailPolicy::Kind::power_bound && u.tail.constant > 0.0 &&
      2.0 * u.tail.exponent <= 1.0 + 1e-12)
    throw std::domain_error("trace: Hardy means diverge, no boundary trace");
  FourierCoeffs out = FourierCoeffs::zeros(bandwidth);
  const int top = std::min(bandwidth, u.max_degree());
  for (int k = 0; k <= top; ++k) out.set_coeff(k, u.a(k));
  return out;
}

std::vector<std::pair<double, double>> trace_convergence(const TaylorFunction& u,
                                                         const SeminormParams& params,
                                                         const std::vector<double>& r_schedule,
                                                         const QuadratureConfig& quad) {
  std::vector<std::pair<double, double>> out;
  out.reserve(r_schedule.size());
  if (params.p == 2.0) {
    const double eta = eta_constant(params.s).eta;
    for (double r : r_schedule) {
      KahanSum acc;
      for (int k = u.max_degree(); k >= 1; --k) {
        const double ak2 = std::norm(u.a(k));
        if (ak2 == 0.0) continue;
        const double damp = 1.0 - std::pow(r, k);
        acc.add(std::pow(static_cast<double>(k), 2.0 * params.s) * ak2 * damp * damp);
      }
      out.emplace_back(r, std::sqrt(eta * acc.value()));
    }
    return out;
  }
  const int K = slice_bandwidth(u, quad);
  for (double r : r_schedule) {
    FourierCoeffs diff = FourierCoeffs::zeros(K);
    for (int k = 1; k <= std::min(K, u.max_degree()); ++k)
      diff.set_coeff(k, u.a(k) * (1.0 - std::pow(r, k)));
    out.emplace_back(r, gagliardo_quadrature(diff, params, quad));
  }
  return out;
}

MembershipScan membership_scan(const TaylorFunction& u, const std::vector<double>& s_grid,
                               double p, const QuadratureConfig& quad) {
  MembershipScan scan;
  for (double s : s_grid) {
    scan.entries.emplace_back(s, sup_seminorm(u, SeminormParams(s, p), 0.02, quad));
  }
  double last_finite = -1.0, first_divergent = -1.0;
  for (const auto& [s, v] : scan.entries) {
    if (v.classification == Membership::finite && first_divergent < 0.0) last_finite = s;
    if (v.classification == Membership::divergent && first_divergent < 0.0) first_divergent = s;
  }
  if (last_finite >= 0.0 && first_divergent > last_finite)
    scan.threshold = 0.5 * (last_finite + first_divergent);
  return scan;
}

NormEquivalenceReport norm_equivalence_check(const TaylorFunction& u,
                                             const SeminormParams& params, double kappa,
                                             const QuadratureConfig& quad) {
  NormEquivalenceReport rep;
  rep.kappa = kappa;
  rep.growth_constant = kappa + std::pow(kTwoPi, 1.0 / params.p);

  const MembershipVerdict v = sup_seminorm(u, params, 0.02, quad);
  if (v.classification != Membership::finite)
    throw std::domain_error("norm_equivalence_check: membership must be finite");
  rep.disc_norm = std::abs(u.a(0)) + v.sup_estimate;

  double trace_lp, trace_semi;
  if (params.p == 2.0) {
    KahanSum acc;
    for (int k = u.max_degree(); k >= 0; --k) acc.add(std::norm(u.a(k)));
    trace_lp = std::sqrt(kTwoPi * (acc.value() + tail_sum(u, 0.0, 1.0)));
    trace_semi = v.sup_estimate;  // sup_r [u_r] = [u*] on the spectral path
  } else {
    const int K = slice_bandwidth(u, quad);
    const FourierCoeffs tr = trace(u, K);
    const GridFunction grid = synthesize(tr, quad.nodes);
    trace_lp = lp_norm(grid, params.p, /*normalized=*/false);
    trace_semi = gagliardo_quadrature(tr, params, quad);
  }
  rep.trace_norm = trace_lp + trace_semi;
  rep.lower_margin = rep.trace_norm - rep.disc_norm;
  rep.upper_margin = (1.0 + rep.growth_constant) * rep.disc_norm - rep.trace_norm;
  const double scale = std::max(rep.trace_norm, 1e-300);
  rep.holds = rep.lower_margin >= -1e-6 * scale && rep.upper_margin >= -1e-6 * scale;
  return rep;
}

}  // namespace gagliardo
