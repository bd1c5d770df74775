#include "triphoton/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace triphoton::criteria {

using moments::ModeMoments;
using moments::Quadrature;
using moments::QuadratureSpec;

CombinationWeights CombinationWeights::from_beta(double beta, const std::array<double, kNumModes>& thetas) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw std::invalid_argument("beta must be positive");
  const double r2 = std::numbers::sqrt2;
  CombinationWeights w;
  w.h = {1.0, 1.0 / (beta * r2), 1.0 / (beta * r2)};
  w.g = {1.0, -beta / r2, -beta / r2};
  w.thetas = thetas;
  w.beta = beta;
  return w;
}

CombinationWeights CombinationWeights::bipartite_12(const std::array<double, kNumModes>& thetas) {
  CombinationWeights w;
  w.h = {1.0, 1.0, 0.0};
  w.g = {1.0, -1.0, 0.0};
  w.thetas = thetas;
  return w;
}

CombinationWeights CombinationWeights::double_seed_preset(const std::array<double, kNumModes>& thetas) {
  const double s = 1.0 / std::numbers::sqrt2;
  CombinationWeights w;
  w.h = {1.0, s, s};
  w.g = {1.0, -s, -s};
  w.thetas = thetas;
  return w;
}

CombinationWeights CombinationWeights::uniform(double value) {
  CombinationWeights w;
  w.h.fill(value);
  w.g.fill(value);
  return w;
}

double CombinationWeights::commutator_sum() const noexcept {
  return h[0] * g[0] + h[1] * g[1] + h[2] * g[2];
}

void CombinationWeights::validate() const {
  auto all_zero = [](const std::array<double, kNumModes>& x) {
    return std::all_of(x.begin(), x.end(), [](double v) { return v == 0.0; });
  };
  if (all_zero(h)) throw std::invalid_argument("weights h are all zero");
  if (all_zero(g)) throw std::invalid_argument("weights g are all zero");
  for (std::size_t k = 0; k < kNumModes; ++k) {
    if (!std::isfinite(h[k]) || !std::isfinite(g[k]) || !std::isfinite(thetas[k])) {
      throw std::invalid_argument("weights and phases must be finite");
    }
  }
}

Thresholds thresholds(const CombinationWeights& w) {
  std::array<double, kNumModes> hg{};
  for (std::size_t k = 0; k < kNumModes; ++k) hg[k] = w.h[k] * w.g[k];
  Thresholds t;
  for (std::size_t k = 0; k < kNumModes; ++k) {
    const std::size_t l = (k + 1) % kNumModes, m = (k + 2) % kNumModes;
    t.f_p_per_split[k] = 2.0 * (std::abs(hg[k]) + std::abs(hg[l] + hg[m]));
  }
  t.f_p = *std::min_element(t.f_p_per_split.begin(), t.f_p_per_split.end());
  t.f_s = 2.0 * (std::abs(hg[0]) + std::abs(hg[1]) + std::abs(hg[2]));
  return t;
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::genuine_tripartite:
      return "genuine-tripartite";
    case Verdict::partially_separable_region:
      return "partially-separable-region";
    case Verdict::no_violation:
      return "no-violation";
  }
  return "no-violation";
}

Verdict classify(double s, const Thresholds& t) noexcept {
  if (s < t.f_p) return Verdict::genuine_tripartite;
  if (s < t.f_s) return Verdict::partially_separable_region;
  return Verdict::no_violation;
}

double CriterionReport::breakdown_sum() const noexcept {
  double sum = cross_terms_q + cross_terms_p;
  for (double t : variance_terms) sum += t;
  return sum;
}

namespace {

struct Breakdown {
  std::array<double, 2 * kNumModes> variance_terms{};
  double cross_q = 0.0;
  double cross_p = 0.0;
};

Breakdown breakdown(const ModeMoments& mm, const CombinationWeights& w) {
  Breakdown b;
  for (std::size_t k = 0; k < kNumModes; ++k) {
    const QuadratureSpec qk{mode_from_slot(k), w.thetas[k]};
    b.variance_terms[k] = w.h[k] * w.h[k] * mm.quadrature_variance(qk, Quadrature::Q);
    b.variance_terms[kNumModes + k] = w.g[k] * w.g[k] * mm.quadrature_variance(qk, Quadrature::P);
    for (std::size_t m = 0; m < kNumModes; ++m) {
      if (m == k) continue;
      const QuadratureSpec qm{mode_from_slot(m), w.thetas[m]};
      b.cross_q += w.h[k] * w.h[m] * mm.quadrature_covariance(qk, Quadrature::Q, qm, Quadrature::Q);
      b.cross_p += w.g[k] * w.g[m] * mm.quadrature_covariance(qk, Quadrature::P, qm, Quadrature::P);
    }
  }
  return b;
}

algebra::OperatorPolynomial combination(std::span<const EvolvedMode, kNumModes> modes,
                                        const std::array<double, kNumModes>& weights,
                                        const std::array<double, kNumModes>& thetas, Quadrature kind) {
  algebra::OperatorPolynomial out;
  for (std::size_t k = 0; k < kNumModes; ++k) {
    if (weights[k] == 0.0) continue;
    out += moments::quadrature_poly(modes[k], thetas[k], kind) * std::complex<double>(weights[k]);
  }
  return out;
}

void require_finite(const CriterionReport& r) {
  if (!std::isfinite(r.var_u) || !std::isfinite(r.var_v)) {
    throw std::overflow_error("variance evaluation overflowed (non-finite S)");
  }
}

}  // namespace

double fast_S(const ModeMoments& mm, const CombinationWeights& w) {
  const Breakdown b = breakdown(mm, w);
  double s = b.cross_q + b.cross_p;
  for (double t : b.variance_terms) s += t;
  return s;
}

CriterionReport compute_S(const CombinationWeights& w, const SeedState& seed, const EvolutionParams& params) {
  const auto modes = evolution::evolve_all(params);
  return compute_S(w, seed, modes);
}

CriterionReport report_from_moments(const ModeMoments& mm, const CombinationWeights& w) {
  w.validate();
  CriterionReport r;
  const Thresholds t = thresholds(w);
  r.f_p_per_split = t.f_p_per_split;
  r.f_p = t.f_p;
  r.f_s = t.f_s;
  r.commutator_sum = w.commutator_sum();
  for (std::size_t k = 0; k < kNumModes; ++k) r.gamma_sq += w.h[k] * w.h[k] + w.g[k] * w.g[k];

  const Breakdown b = breakdown(mm, w);
  r.variance_terms = b.variance_terms;
  r.cross_terms_q = b.cross_q;
  r.cross_terms_p = b.cross_p;
  r.var_u = b.cross_q;
  r.var_v = b.cross_p;
  for (std::size_t k = 0; k < kNumModes; ++k) {
    r.var_u += b.variance_terms[k];
    r.var_v += b.variance_terms[kNumModes + k];
  }
  r.S = r.var_u + r.var_v;
  require_finite(r);
  r.verdict = classify(r.S, t);
  r.below_bipartite_band = r.S < kBipartiteBand;
  if (std::abs(r.commutator_sum) > 1e-12) {
    r.warnings.emplace_back("u and v do not commute (sum h_k g_k = " + std::to_string(r.commutator_sum) +
                            ")");
  }
  return r;
}

CriterionReport compute_S(const CombinationWeights& w, const SeedState& seed,
                          std::span<const EvolvedMode, kNumModes> modes) {
  w.validate();
  const EvolutionParams& params = modes[0].params;
  CriterionReport r = report_from_moments(ModeMoments(modes, seed), w);
  const double var_u_breakdown = r.var_u, var_v_breakdown = r.var_v;

  // Squares reach twice the per-mode exponent of a single evolved operator.
  const int cap = std::max(algebra::kDefaultDegreeCap, 2 * (params.order + 1));
  const auto u = combination(modes, w.h, w.thetas, Quadrature::Q);
  const auto v = combination(modes, w.g, w.thetas, Quadrature::P);
  r.var_u = moments::variance_by_product(u, seed, cap);
  r.var_v = moments::variance_by_product(v, seed, cap);
  r.S = r.var_u + r.var_v;
  require_finite(r);

  auto check = [](const char* what, double direct, double split) {
    const double mismatch = std::abs(direct - split);
    if (mismatch > kRouteAgreement * std::max(std::abs(direct), std::numeric_limits<double>::min())) {
      throw std::logic_error(std::string(what) + ": direct and per-quadrature evaluations disagree by " +
                             std::to_string(mismatch));
    }
  };
  check("var_u", r.var_u, var_u_breakdown);
  check("var_v", r.var_v, var_v_breakdown);
  check("S", r.S, r.breakdown_sum());

  r.verdict = classify(r.S, Thresholds{r.f_p_per_split, r.f_p, r.f_s});
  r.below_bipartite_band = r.S < kBipartiteBand;
  if (evolution::exceeds_validity_proxy(params, seed)) {
    r.warnings.emplace_back("|xi| max|alpha| = " + std::to_string(evolution::validity_proxy(params, seed)) +
                            " is outside the expansion validity range");
  }
  return r;
}

FluorescenceClosedForm fluorescence_closed_form(const CombinationWeights& w, double mean_photons) {
  if (!(mean_photons >= 0.0)) throw std::invalid_argument("mean photon number must be non-negative");
  double gamma_sq = 0.0, mismatch = 0.0;
  for (std::size_t k = 0; k < kNumModes; ++k) {
    gamma_sq += w.h[k] * w.h[k] + w.g[k] * w.g[k];
    const double d = std::abs(w.h[k]) - std::abs(w.g[k]);
    mismatch += d * d;
  }
  return {(1.0 + 2.0 * mean_photons) * gamma_sq, 2.0 * gamma_sq * mean_photons + mismatch};
}

GainReport gain_and_variances(const SeedState& seed, const EvolutionParams& params,
                              std::span<const double> theta_grid) {
  const auto modes = evolution::evolve_all(params);
  return gain_and_variances(seed, modes, theta_grid);
}

GainReport gain_and_variances(const SeedState& seed, std::span<const EvolvedMode, kNumModes> modes,
                              std::span<const double> theta_grid) {
  if (seed.is_vacuum()) throw std::invalid_argument("gain is undefined without a seeded mode");
  const ModeMoments mm(modes, seed);
  GainReport g;
  g.thetas.assign(theta_grid.begin(), theta_grid.end());
  for (Mode k : kAllModes) {
    const std::size_t s = slot(k);
    g.n_in[s] = seed.photons(k);
    g.n_out[s] = mm.photon_number(k);
    g.gain[s] = g.n_in[s] > 0.0 ? g.n_out[s] / g.n_in[s] : std::numeric_limits<double>::quiet_NaN();
    for (double theta : theta_grid) {
      g.var_p[s].push_back(mm.quadrature_variance({k, theta}, Quadrature::P));
      g.var_q[s].push_back(mm.quadrature_variance({k, theta}, Quadrature::Q));
    }
  }
  return g;
}

BetaOptimum optimize_beta(const SeedState& seed, const EvolutionParams& params,
                          const std::array<double, kNumModes>& thetas, std::pair<double, double> beta_range) {
  auto [lo, hi] = beta_range;
  if (!(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("beta range must satisfy 0 < lo < hi");
  const auto modes = evolution::evolve_all(params);
  const ModeMoments mm(modes, seed);
  auto s_of = [&](double beta) { return fast_S(mm, CombinationWeights::from_beta(beta, thetas)); };

  constexpr int kBracketPoints = 41;
  std::vector<double> betas(kBracketPoints), values(kBracketPoints);
  for (int i = 0; i < kBracketPoints; ++i) {
    betas[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (kBracketPoints - 1));
    values[i] = s_of(betas[i]);
  }
  const auto best = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
  BetaOptimum out{betas[best], values[best]};
  if (best == 0 || best + 1 == betas.size()) return out;

  // Golden-section search on [beta_{i-1}, beta_{i+1}].
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = betas[best - 1], b = betas[best + 1];
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = s_of(c), fd = s_of(d);
  while (b - a > 1e-10 * (std::abs(a) + std::abs(b))) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = s_of(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = s_of(d);
    }
  }
  const double beta = 0.5 * (a + b);
  const double s = s_of(beta);
  if (s < out.S) out = {beta, s};
  return out;
}

std::vector<ThetaScanRow> scan_thetas(const SeedState& seed, const EvolutionParams& params,
                                      const CombinationWeights& w, std::span<const double> theta1_grid,
                                      int inner_points) {
  if (inner_points < 8) throw std::invalid_argument("theta scan needs at least 8 points per axis");
  if (theta1_grid.empty()) throw std::invalid_argument("theta1 grid is empty");
  const auto modes = evolution::evolve_all(params);
  const ModeMoments mm(modes, seed);
  const double step = 2.0 * std::numbers::pi / inner_points;
  const auto n = static_cast<std::size_t>(inner_points);

  std::vector<ThetaScanRow> rows;
  rows.reserve(theta1_grid.size());
  for (double theta1 : theta1_grid) {
    CombinationWeights trial = w;
    auto s_at = [&](double t2, double t3) {
      trial.thetas = {theta1, t2, t3};
      return fast_S(mm, trial);
    };
    std::vector<double> grid(n * n);
    std::size_t best = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        grid[i * n + j] = s_at(static_cast<double>(i) * step, static_cast<double>(j) * step);
        if (grid[i * n + j] < grid[best]) best = i * n + j;
      }
    }
    const std::size_t bi = best / n, bj = best % n;
    auto at = [&](std::size_t i, std::size_t j) { return grid[(i % n) * n + (j % n)]; };
    auto parabolic = [](double fm, double f0, double fp) {
      const double curvature = fm - 2.0 * f0 + fp;
      if (curvature <= 0.0) return 0.0;
      return std::clamp(0.5 * (fm - fp) / curvature, -1.0, 1.0);
    };
    const double f0 = grid[best];
    const double d2 = parabolic(at(bi + n - 1, bj), f0, at(bi + 1, bj));
    const double d3 = parabolic(at(bi, bj + n - 1), f0, at(bi, bj + 1));
    double t2 = static_cast<double>(bi) * step, t3 = static_cast<double>(bj) * step;
    double s_best = f0;
    const double t2r = t2 + d2 * step, t3r = t3 + d3 * step;
    if (const double s_ref = s_at(t2r, t3r); s_ref < s_best) {
      s_best = s_ref;
      t2 = t2r;
      t3 = t3r;
    }
    rows.push_back({theta1, moments::wrap_phase(t2), moments::wrap_phase(t3), s_best});
  }
  return rows;
}

}  // namespace triphoton::criteria
