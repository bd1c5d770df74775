#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "triphoton/evolution.hpp"
#include "triphoton/moments.hpp"
#include "triphoton/seed_state.hpp"

namespace triphoton::criteria {

using evolution::EvolutionParams;
using evolution::EvolvedMode;

/// Fixed entanglement band used for bipartite twin-beam curves.
inline constexpr double kBipartiteBand = 2.0;
/// Relative agreement demanded between the two routes to S.
inline constexpr double kRouteAgreement = 1e-10;

/// Detector weights and local-oscillator phases defining
///   u = sum_k h_k Q_k(theta_k),   v = sum_k g_k P_k(theta_k).
struct CombinationWeights {
  std::array<double, kNumModes> h{};
  std::array<double, kNumModes> g{};
  std::array<double, kNumModes> thetas{};
  std::optional<double> beta;

  /// u = Q1 + (Q2 + Q3)/(beta sqrt 2), v = P1 - beta (P2 + P3)/sqrt 2.
  static CombinationWeights from_beta(double beta, const std::array<double, kNumModes>& thetas = {});
  /// u = Q1 + Q2, v = P1 - P2.
  static CombinationWeights bipartite_12(const std::array<double, kNumModes>& thetas = {});
  /// h1 = g1 = 1, h2 = h3 = 1/sqrt 2, g2 = g3 = -1/sqrt 2.
  static CombinationWeights double_seed_preset(const std::array<double, kNumModes>& thetas = {});
  static CombinationWeights uniform(double value = 1.0);

  /// sum_k h_k g_k; [u, v] = 2i * commutator_sum() on the input modes.
  double commutator_sum() const noexcept;
  /// Throws std::invalid_argument if all h or all g vanish.
  void validate() const;
};

struct Thresholds {
  /// 2(|h_k g_k| + |h_l g_l + h_m g_m|) with mode k isolated.
  std::array<double, kNumModes> f_p_per_split{};
  double f_p = 0.0;  // strictest (smallest) split bound
  double f_s = 0.0;  // 2 sum_k |h_k g_k|
};

Thresholds thresholds(const CombinationWeights& w);

enum class Verdict { genuine_tripartite, partially_separable_region, no_violation };

std::string_view to_string(Verdict v) noexcept;
Verdict classify(double s, const Thresholds& t) noexcept;

struct CriterionReport {
  double S = 0.0;
  double var_u = 0.0;
  double var_v = 0.0;
  /// h_k^2 <dQ_k^2> for k = 1..3 followed by g_k^2 <dP_k^2> for k = 1..3.
  std::array<double, 2 * kNumModes> variance_terms{};
  double cross_terms_q = 0.0;
  double cross_terms_p = 0.0;
  std::array<double, kNumModes> f_p_per_split{};
  double f_p = 0.0;
  double f_s = 0.0;
  double gamma_sq = 0.0;
  double commutator_sum = 0.0;
  Verdict verdict = Verdict::no_violation;
  bool below_bipartite_band = false;
  std::vector<std::string> warnings;

  double breakdown_sum() const noexcept;
};

/// Evaluates S both from the full squares of u and v and from the
/// per-quadrature breakdown, and throws std::logic_error if they disagree
/// by more than kRouteAgreement relative.
CriterionReport compute_S(const CombinationWeights& w, const SeedState& seed, const EvolutionParams& params);
CriterionReport compute_S(const CombinationWeights& w, const SeedState& seed,
                          std::span<const EvolvedMode, kNumModes> modes);

/// S from precomputed second moments only. Used by scans.
double fast_S(const moments::ModeMoments& mm, const CombinationWeights& w);

/// Full report from precomputed second moments, without the independent
/// direct evaluation that compute_S performs. var_u and var_v are the
/// quadratic-form sums of the breakdown.
CriterionReport report_from_moments(const moments::ModeMoments& mm, const CombinationWeights& w);

struct FluorescenceClosedForm {
  double S = 0.0;
  double S_minus_fs = 0.0;
};

/// Unseeded generation with equal photon number n in every mode:
///   S = (1 + 2n) sum_k (h_k^2 + g_k^2),
///   S - f_s = 2 Gamma^2 n + sum_k (|h_k| - |g_k|)^2.
FluorescenceClosedForm fluorescence_closed_form(const CombinationWeights& w, double mean_photons);

struct GainReport {
  std::array<double, kNumModes> n_in{};
  std::array<double, kNumModes> n_out{};
  /// n_out / n_in; NaN for an unseeded mode.
  std::array<double, kNumModes> gain{};
  std::vector<double> thetas;
  std::array<std::vector<double>, kNumModes> var_p;
  std::array<std::vector<double>, kNumModes> var_q;
};

/// Throws std::invalid_argument when no mode is seeded.
GainReport gain_and_variances(const SeedState& seed, const EvolutionParams& params,
                              std::span<const double> theta_grid);
GainReport gain_and_variances(const SeedState& seed, std::span<const EvolvedMode, kNumModes> modes,
                              std::span<const double> theta_grid);

struct BetaOptimum {
  double beta = 1.0;
  double S = 0.0;
};

/// Minimizes S over beta for the beta-parameterized combination: a
/// log-spaced bracket scan followed by golden-section refinement.
BetaOptimum optimize_beta(const SeedState& seed, const EvolutionParams& params,
                          const std::array<double, kNumModes>& thetas,
                          std::pair<double, double> beta_range = {0.1, 10.0});

struct ThetaScanRow {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta3 = 0.0;
  double S = 0.0;
};

/// For each theta1, the (theta2, theta3) minimizing S on an inner grid of
/// `inner_points` per axis, refined by one parabolic step per axis.
std::vector<ThetaScanRow> scan_thetas(const SeedState& seed, const EvolutionParams& params,
                                      const CombinationWeights& w, std::span<const double> theta1_grid,
                                      int inner_points = 64);

}  // namespace triphoton::criteria
