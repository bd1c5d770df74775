#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "triphoton/criteria.hpp"
#include "triphoton/csv.hpp"
#include "triphoton/evolution.hpp"
#include "triphoton/grid.hpp"
#include "triphoton/seed_state.hpp"

namespace triphoton::sweep {

using criteria::CombinationWeights;
using evolution::EvolutionParams;

/// Engine version string embedded in run manifests.
std::string_view engine_version() noexcept;

enum class Scenario { fluorescence, single_seed, double_seed, full_seed, pair_variant };

inline constexpr std::array<Scenario, 5> kAllScenarios{Scenario::fluorescence, Scenario::single_seed,
                                                       Scenario::double_seed, Scenario::full_seed,
                                                       Scenario::pair_variant};

std::string_view to_string(Scenario s) noexcept;
/// Throws ConfigError for an unknown name.
Scenario parse_scenario(std::string_view name);

/// Default weights, phases and seed phase of a scenario.
struct Preset {
  Scenario scenario = Scenario::full_seed;
  CombinationWeights weights;
  double phi = 0.0;
};

Preset preset(Scenario s);
/// Seed for `s` with n_in photons in every seeded mode (ignored for
/// fluorescence).
SeedState make_seed(Scenario s, double n_in, double phi);
/// Human-readable preset table, one headline per scenario.
std::string list_presets();

/// Largest accepted mean seed photon number.
inline constexpr double kMaxInputPhotons = 1e12;

struct RunConfig {
  Scenario scenario = Scenario::full_seed;
  double xi = evolution::kReferenceXi;
  int order = evolution::kDefaultOrder;
  int max_order = evolution::kDefaultMaxOrder;
  /// Single operating point for gain-map and theta-scan.
  double n_in = 4e10;
  std::vector<double> nin_grid = logspace(1e8, 1e11, 40);
  std::optional<double> phi;
  std::vector<double> phi_grid = linspace(0.0, 6.283185307179586, 360);
  std::vector<double> theta1_grid = linspace(0.0, 6.283185307179586, 37);
  std::optional<double> beta;
  std::array<std::optional<double>, 3> thetas;
  /// h1, h2, h3, g1, g2, g3.
  std::optional<std::array<double, 6>> weights;
  int jobs = 1;

  /// Throws ConfigError.
  void validate() const;
  EvolutionParams evolution() const;
  double resolved_phi() const;
  CombinationWeights resolved_weights() const;
};

nlohmann::json to_json(const RunConfig& cfg);

/// S along nin_grid with both evaluation routes cross-checked. The
/// fluorescence scenario has no seed and yields one row with n_in = 0.
std::vector<SweepRow> run_sweep(const RunConfig& cfg);
/// Gains and variances over phi_grid at n_in.
std::vector<SweepRow> run_gain_map(const RunConfig& cfg);
/// For each theta1 in theta1_grid, S minimized over theta2 and theta3.
std::vector<SweepRow> run_theta_scan(const RunConfig& cfg);
/// beta minimizing S at each point of nin_grid.
std::vector<SweepRow> run_beta_opt(const RunConfig& cfg);

struct OracleComparison {
  std::string name;
  double engine = 0.0;
  double oracle = 0.0;
  double rel_diff = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Engine against the independent references: squeezing solution,
/// classical mean field and truncated Fock evolution.
std::vector<OracleComparison> oracle_check(const RunConfig& cfg);
nlohmann::json to_json(const std::vector<OracleComparison>& rows);

/// Run manifest: resolved configuration, engine version, Omega table
/// checksum and a generation timestamp (the only wall-clock field).
nlohmann::json manifest(const RunConfig& cfg, std::string_view command, std::string_view timestamp);

}  // namespace triphoton::sweep
