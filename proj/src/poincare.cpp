#include "gagliardo/poincare.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gagliardo/circle.hpp"
#include "gagliardo/rng.hpp"
#include "gagliardo/summation.hpp"

namespace gagliardo {

namespace {

// Real trigonometric polynomial from the search vector: c_k = x[2k-2] + i x[2k-1],
// c_{-k} = conj(c_k), c_0 = 0.
FourierCoeffs coeffs_from_vector(const std::vector<double>& x) {
  const int bandwidth = static_cast<int>(x.size()) / 2;
  FourierCoeffs c = FourierCoeffs::zeros(bandwidth);
  for (int k = 1; k <= bandwidth; ++k) {
    const Complex ck(x[2 * k - 2], x[2 * k - 1]);
    c.set_coeff(k, ck);
    c.set_coeff(-k, std::conj(ck));
  }
  return c;
}

void normalize(std::vector<double>& x) {
  double n2 = 0.0;
  for (double v : x) n2 += v * v;
  if (n2 == 0.0) {
    x[0] = 1.0;
    return;
  }
  const double inv = 1.0 / std::sqrt(n2);
  for (double& v : x) v *= inv;
}

struct RatioObjective {
  SeminormParams params;
  QuadratureConfig quad;
  double eta = 0.0;  // set for p = 2

  double operator()(const std::vector<double>& x) const {
    std::vector<double> y = x;
    normalize(y);
    const FourierCoeffs c = coeffs_from_vector(y);
    return poincare_ratio(c, params, quad);
  }
};

}  // namespace

double kappa_exact_p2(double s) {
  return std::sqrt(kTwoPi / eta_constant(s).eta);
}

double poincare_ratio(const FourierCoeffs& coeffs, const SeminormParams& params,
                      const QuadratureConfig& quad) {
  const int K = coeffs.bandwidth();
  FourierCoeffs osc = coeffs;
  osc.set_coeff(0, 0.0);  // both sides kill the constant mode
  bool all_zero = true;
  for (int k = -K; k <= K && all_zero; ++k)
    if (std::norm(osc.coeff(k)) > 0.0) all_zero = false;
  if (all_zero) throw std::invalid_argument("poincare_ratio: coefficients are all constant");

  if (params.p == 2.0) {
    KahanSum l2, semi;
    for (int k = K; k >= 1; --k) {
      const double m2 = std::norm(osc.coeff(k)) + std::norm(osc.coeff(-k));
      l2.add(m2);
      semi.add(std::pow(static_cast<double>(k), 2.0 * params.s) * m2);
    }
    const double num = std::sqrt(kTwoPi * l2.value());
    const double den = std::sqrt(eta_constant(params.s).eta * semi.value());
    if (den == 0.0) throw std::runtime_error("poincare_ratio: zero seminorm for nonconstant input");
    return num / den;
  }
  const GridFunction grid = synthesize(osc, quad.nodes);
  const double num = lp_norm(grid, params.p, /*normalized=*/false);
  const double den = gagliardo_quadrature(osc, params, quad);
  if (den == 0.0) throw std::runtime_error("poincare_ratio: zero seminorm for nonconstant input");
  return num / den;
}

PoincareEstimate kappa_search(const SeminormParams& params, const SearchConfig& config) {
  if (config.bandwidth < 1) throw std::invalid_argument("kappa_search: bandwidth must be >= 1");
  const int dim = 2 * config.bandwidth;
  RatioObjective objective{params, config.quad};

  std::vector<double> best_x;
  double best_f = -1.0;
  int total_iterations = 0;
  std::vector<double> history;
  RngStream rng(config.seed, 0x706F696EULL);

  for (int restart = 0; restart < config.restarts; ++restart) {
    std::vector<double> x0(dim, 0.0);
    if (restart < config.bandwidth) {
      x0[2 * restart] = 1.0;  // pure mode k = restart + 1
    } else {
      RngStream sub = rng.derive(restart);
      for (double& v : x0) v = sub.uniform(-1.0, 1.0);
    }
    normalize(x0);

    // Nelder-Mead (maximization) on the scale-normalized ratio.
    const int n = dim;
    std::vector<std::vector<double>> simplex(n + 1, x0);
    for (int i = 0; i < n; ++i) simplex[i + 1][i] += 0.1;
    std::vector<double> f(n + 1);
    for (int i = 0; i <= n; ++i) f[i] = objective(simplex[i]);

    for (int it = 0; it < config.max_iterations; ++it) {
      ++total_iterations;
      std::vector<int> order(n + 1);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) { return f[a] > f[b]; });
      const int best = order[0], worst = order[n], second_worst = order[n - 1];
      if (f[best] - f[worst] < 1e-12 * (std::abs(f[best]) + 1e-12)) break;

      std::vector<double> centroid(n, 0.0);
      for (int i = 0; i <= n; ++i)
        if (i != worst)
          for (int d = 0; d < n; ++d) centroid[d] += simplex[i][d] / n;

      auto blend = [&](double t) {
        std::vector<double> y(n);
        for (int d = 0; d < n; ++d) y[d] = centroid[d] + t * (centroid[d] - simplex[worst][d]);
        return y;
      };

      const std::vector<double> reflected = blend(1.0);
      const double fr = objective(reflected);
      if (fr > f[best]) {
        const std::vector<double> expanded = blend(2.0);
        const double fe = objective(expanded);
        if (fe > fr) {
          simplex[worst] = expanded;
          f[worst] = fe;
        } else {
          simplex[worst] = reflected;
          f[worst] = fr;
        }
      } else if (fr > f[second_worst]) {
        simplex[worst] = reflected;
        f[worst] = fr;
      } else {
        const std::vector<double> contracted = blend(-0.5);
        const double fc = objective(contracted);
        if (fc > f[worst]) {
          simplex[worst] = contracted;
          f[worst] = fc;
        } else {
          for (int i = 0; i <= n; ++i) {
            if (i == best) continue;
            for (int d = 0; d < n; ++d)
              simplex[i][d] = simplex[best][d] + 0.5 * (simplex[i][d] - simplex[best][d]);
            f[i] = objective(simplex[i]);
          }
        }
      }
    }

    for (int i = 0; i <= n; ++i) {
      if (f[i] > best_f) {
        best_f = f[i];
        best_x = simplex[i];
      }
    }
    history.push_back(best_f);
  }

  normalize(best_x);
  PoincareEstimate est{params, best_f, coeffs_from_vector(best_x), config.restarts,
                       total_iterations, std::move(history)};
  // Certificates must round-trip.
  const double recheck = poincare_ratio(est.certificate, params, config.quad);
  if (std::abs(recheck - est.kappa_lower) > 1e-8 * std::max(1.0, est.kappa_lower))
    throw std::runtime_error("kappa_search: certificate failed to reproduce its ratio");
  return est;
}

double poincare_residual(const GridFunction& grid, const SeminormParams& params, double kappa,
                         const QuadratureConfig& quad) {
  const Complex mean = circle_mean(grid);
  CVector centered = grid.values().array() - mean;
  const double osc = lp_norm(GridFunction(std::move(centered)), params.p, /*normalized=*/false);
  double semi;
  if (params.p == 2.0) {
    semi = gagliardo_spectral(analyze(grid, grid.size() / 2 - 1), params.s);
  } else {
    semi = gagliardo_quadrature(grid, params, quad);
  }
  return kappa * semi - osc;
}

}  // namespace gagliardo
