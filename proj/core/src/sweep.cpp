#include "triphoton/sweep.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>
#include <type_traits>

#include "triphoton/moments.hpp"
#include "triphoton/oracles.hpp"

#ifndef TRIPHOTON_VERSION
#define TRIPHOTON_VERSION "0.0.0"
#endif

namespace triphoton::sweep {

using criteria::CriterionReport;
using moments::ModeMoments;
using moments::Quadrature;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// Evaluates f(0..n-1) on up to `jobs` threads; results keep index order.
/// The first exception thrown by any task is rethrown after all workers stop.
template <class F>
auto parallel_map(std::size_t n, int jobs, F f) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<std::optional<R>> slots(n);
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) slots[i].emplace(f(i));
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          slots[i].emplace(f(i));
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next.store(n);
        }
      }
    };
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (error) std::rethrow_exception(error);
  }
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

double max_truncation_diagnostic(const SeedState& seed, const EvolutionParams& params) {
  if (params.order < 1) return kNaN;
  double worst = 0.0;
  for (Mode k : kAllModes) worst = std::max(worst, evolution::truncation_diagnostic(k, seed, params));
  return worst;
}

SweepRow start_row(const RunConfig& cfg, double n_in, double phi, const CombinationWeights& w) {
  SweepRow r;
  r.scenario = std::string(to_string(cfg.scenario));
  r.order = cfg.order;
  r.xi = cfg.xi;
  r.n_in = n_in;
  r.phi = phi;
  r.beta = w.beta.value_or(kNaN);
  r.theta = w.thetas;
  return r;
}

void fill_report(SweepRow& row, const CriterionReport& rep) {
  row.S = rep.S;
  row.var_u = rep.var_u;
  row.var_v = rep.var_v;
  row.f_p = rep.f_p;
  row.f_s = rep.f_s;
  row.verdict = std::string(criteria::to_string(rep.verdict));
}

void fill_modes(SweepRow& row, const ModeMoments& mm, const SeedState& seed, const CombinationWeights& w) {
  for (std::size_t k = 0; k < kNumModes; ++k) {
    const Mode m = mode_from_slot(k);
    const double n_in = seed.photons(m);
    row.gain[k] = n_in > 0.0 ? mm.photon_number(m) / n_in : kNaN;
    const moments::QuadratureSpec q{m, w.thetas[k]};
    row.var_p[k] = mm.quadrature_variance(q, Quadrature::P);
    row.var_q[k] = mm.quadrature_variance(q, Quadrature::Q);
  }
}

std::string fmt(double v) { return format_double(v); }

}  // namespace

std::string_view engine_version() noexcept { return TRIPHOTON_VERSION; }

std::string_view to_string(Scenario s) noexcept {
  switch (s) {
    case Scenario::fluorescence:
      return "fluorescence";
    case Scenario::single_seed:
      return "single-seed";
    case Scenario::double_seed:
      return "double-seed";
    case Scenario::full_seed:
      return "full-seed";
    case Scenario::pair_variant:
      return "pair-variant";
  }
  return "full-seed";
}

Scenario parse_scenario(std::string_view name) {
  for (Scenario s : kAllScenarios) {
    if (to_string(s) == name) return s;
  }
  throw ConfigError("unknown scenario '" + std::string(name) +
                    "' (expected fluorescence, single-seed, double-seed, full-seed or pair-variant)");
}

Preset preset(Scenario s) {
  Preset p;
  p.scenario = s;
  switch (s) {
    case Scenario::fluorescence:
      p.weights = CombinationWeights::uniform(1.0);
      p.phi = kPi / 2;
      break;
    case Scenario::single_seed:
      // The pair (1, 2) squeezes along theta = 0 once mode 3 carries phase 3pi/2.
      p.weights = CombinationWeights::bipartite_12();
      p.phi = 3 * kPi / 2;
      break;
    case Scenario::double_seed:
      p.weights = CombinationWeights::double_seed_preset();
      p.phi = 3 * kPi / 2;
      break;
    case Scenario::full_seed:
      p.weights = CombinationWeights::from_beta(std::numbers::sqrt2, {0.0, kPi, kPi});
      p.phi = kPi / 2;
      break;
    case Scenario::pair_variant:
      p.weights = CombinationWeights::bipartite_12({0.0, kPi, kPi});
      p.phi = kPi / 2;
      break;
  }
  return p;
}

SeedState make_seed(Scenario s, double n_in, double phi) {
  switch (s) {
    case Scenario::fluorescence:
      return SeedState::vacuum();
    case Scenario::single_seed:
      return SeedState::single_seed(Mode::three, n_in, phi);
    case Scenario::double_seed:
      return SeedState::double_seed(n_in, phi);
    case Scenario::full_seed:
    case Scenario::pair_variant:
      return SeedState::full_seed(n_in, phi);
  }
  return SeedState::vacuum();
}

std::string list_presets() {
  return "fluorescence: weights h=g=(1,1,1) default\n"
         "  no seed, theta=[0,0,0]\n"
         "single-seed: u=Q1+Q2, v=P1-P2, mode 3 seeded, theta=[0,0,0], phi=3pi/2\n"
         "double-seed: h1=g1=1, h2=h3=1/sqrt2, g2=g3=-1/sqrt2, modes 2 and 3 seeded, theta=[0,0,0], "
         "phi=3pi/2\n"
         "full-seed: beta=1.41421356, theta=[0,pi,pi], phi=pi/2\n"
         "  u=Q1+(Q2+Q3)/(beta sqrt2), v=P1-beta(P2+P3)/sqrt2, all modes seeded\n"
         "pair-variant: u=Q1+Q2, v=P1-P2 on full seed, theta=[0,pi,pi], phi=pi/2\n";
}

void RunConfig::validate() const {
  if (!std::isfinite(xi)) throw ConfigError("--xi must be finite");
  if (max_order < 1) throw ConfigError("maximum order must be at least 1");
  if (order < 0 || order > max_order) {
    throw ConfigError("--order " + std::to_string(order) + " outside [0, " + std::to_string(max_order) +
                      "] (raise TRIPHOTON_MAX_ORDER to allow more)");
  }
  auto check_photons = [](double n, const char* what) {
    if (!std::isfinite(n) || n < 0.0) throw ConfigError(std::string(what) + " must be non-negative");
    if (n > kMaxInputPhotons) {
      throw ConfigError(std::string(what) + " = " + fmt(n) + " exceeds the validity cap " +
                        fmt(kMaxInputPhotons));
    }
  };
  check_photons(n_in, "--nin");
  if (nin_grid.empty()) throw ConfigError("--nin-grid is empty");
  for (double n : nin_grid) check_photons(n, "--nin-grid value");
  if (phi_grid.empty()) throw ConfigError("--phi-grid is empty");
  if (theta1_grid.empty()) throw ConfigError("--theta1-grid is empty");
  for (const auto* grid : {&phi_grid, &theta1_grid}) {
    for (double v : *grid) {
      if (!std::isfinite(v)) throw ConfigError("phase grids must be finite");
    }
  }
  if (phi && !std::isfinite(*phi)) throw ConfigError("--phi must be finite");
  if (beta && !(*beta > 0.0 && std::isfinite(*beta))) throw ConfigError("--beta must be positive");
  if (beta && weights) throw ConfigError("--beta and --weights are mutually exclusive");
  if (jobs < 1) throw ConfigError("--jobs must be at least 1");
  try {
    resolved_weights().validate();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("--weights: ") + e.what());
  }
}

EvolutionParams RunConfig::evolution() const {
  EvolutionParams p;
  p.xi = {xi, 0.0};
  p.order = order;
  p.max_order = max_order;
  return p;
}

double RunConfig::resolved_phi() const { return phi.value_or(preset(scenario).phi); }

CombinationWeights RunConfig::resolved_weights() const {
  CombinationWeights w = preset(scenario).weights;
  for (std::size_t k = 0; k < kNumModes; ++k) {
    if (thetas[k]) w.thetas[k] = *thetas[k];
  }
  if (weights) {
    const auto& x = *weights;
    w.h = {x[0], x[1], x[2]};
    w.g = {x[3], x[4], x[5]};
    w.beta.reset();
  } else if (beta) {
    w = CombinationWeights::from_beta(*beta, w.thetas);
  }
  return w;
}

nlohmann::json to_json(const RunConfig& cfg) {
  const CombinationWeights w = cfg.resolved_weights();
  nlohmann::json j;
  j["scenario"] = to_string(cfg.scenario);
  j["xi"] = cfg.xi;
  j["order"] = cfg.order;
  j["max_order"] = cfg.max_order;
  j["n_in"] = cfg.n_in;
  j["nin_grid"] = cfg.nin_grid;
  j["phi"] = cfg.resolved_phi();
  j["phi_grid"] = cfg.phi_grid;
  j["theta1_grid"] = cfg.theta1_grid;
  j["h"] = w.h;
  j["g"] = w.g;
  j["thetas"] = w.thetas;
  j["beta"] = w.beta ? nlohmann::json(*w.beta) : nlohmann::json(nullptr);
  j["jobs"] = cfg.jobs;
  return j;
}

std::vector<SweepRow> run_sweep(const RunConfig& cfg) {
  cfg.validate();
  const EvolutionParams params = cfg.evolution();
  const auto modes = evolution::evolve_all(params);
  const CombinationWeights w = cfg.resolved_weights();
  const double phi = cfg.resolved_phi();
  const std::vector<double> grid =
      cfg.scenario == Scenario::fluorescence ? std::vector<double>{0.0} : cfg.nin_grid;

  return parallel_map(grid.size(), cfg.jobs, [&](std::size_t i) {
    const SeedState seed = make_seed(cfg.scenario, grid[i], phi);
    SweepRow row = start_row(cfg, grid[i], phi, w);
    fill_report(row, criteria::compute_S(w, seed, modes));
    fill_modes(row, ModeMoments(modes, seed), seed, w);
    row.truncation_diagnostic = max_truncation_diagnostic(seed, params);
    return row;
  });
}

std::vector<SweepRow> run_gain_map(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.scenario == Scenario::fluorescence) throw ConfigError("gain-map needs a seeded scenario");
  const EvolutionParams params = cfg.evolution();
  const auto modes = evolution::evolve_all(params);
  const CombinationWeights w = cfg.resolved_weights();

  return parallel_map(cfg.phi_grid.size(), cfg.jobs, [&](std::size_t i) {
    const double phi = cfg.phi_grid[i];
    const SeedState seed = make_seed(cfg.scenario, cfg.n_in, phi);
    const ModeMoments mm(modes, seed);
    SweepRow row = start_row(cfg, cfg.n_in, phi, w);
    fill_report(row, criteria::report_from_moments(mm, w));
    fill_modes(row, mm, seed, w);
    row.truncation_diagnostic = max_truncation_diagnostic(seed, params);
    return row;
  });
}

std::vector<SweepRow> run_theta_scan(const RunConfig& cfg) {
  cfg.validate();
  const EvolutionParams params = cfg.evolution();
  const auto modes = evolution::evolve_all(params);
  const CombinationWeights base = cfg.resolved_weights();
  const double phi = cfg.resolved_phi();
  const SeedState seed = make_seed(cfg.scenario, cfg.n_in, phi);
  const ModeMoments mm(modes, seed);
  const double diagnostic = max_truncation_diagnostic(seed, params);

  return parallel_map(cfg.theta1_grid.size(), cfg.jobs, [&](std::size_t i) {
    const double t1 = cfg.theta1_grid[i];
    const auto best = criteria::scan_thetas(seed, params, base, std::span<const double>(&t1, 1));
    CombinationWeights w = base;
    w.thetas = {best.front().theta1, best.front().theta2, best.front().theta3};
    SweepRow row = start_row(cfg, seed.is_vacuum() ? 0.0 : cfg.n_in, phi, w);
    fill_report(row, criteria::report_from_moments(mm, w));
    fill_modes(row, mm, seed, w);
    row.truncation_diagnostic = diagnostic;
    return row;
  });
}

std::vector<SweepRow> run_beta_opt(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.weights) throw ConfigError("beta-opt searches the beta family; --weights does not apply");
  const EvolutionParams params = cfg.evolution();
  const auto modes = evolution::evolve_all(params);
  const std::array<double, kNumModes> thetas = cfg.resolved_weights().thetas;
  const double phi = cfg.resolved_phi();
  const std::vector<double> grid =
      cfg.scenario == Scenario::fluorescence ? std::vector<double>{0.0} : cfg.nin_grid;

  return parallel_map(grid.size(), cfg.jobs, [&](std::size_t i) {
    const SeedState seed = make_seed(cfg.scenario, grid[i], phi);
    const criteria::BetaOptimum best = criteria::optimize_beta(seed, params, thetas);
    const CombinationWeights w = CombinationWeights::from_beta(best.beta, thetas);
    const ModeMoments mm(modes, seed);
    SweepRow row = start_row(cfg, grid[i], phi, w);
    fill_report(row, criteria::report_from_moments(mm, w));
    fill_modes(row, mm, seed, w);
    row.truncation_diagnostic = max_truncation_diagnostic(seed, params);
    return row;
  });
}

std::vector<OracleComparison> oracle_check(const RunConfig& cfg) {
  cfg.validate();
  const EvolutionParams params = cfg.evolution();
  const auto modes = evolution::evolve_all(params);
  std::vector<OracleComparison> out;
  auto add = [&out](std::string name, double engine, double oracle, double tol) {
    OracleComparison c;
    c.name = std::move(name);
    c.engine = engine;
    c.oracle = oracle;
    c.rel_diff = oracle != 0.0 ? std::abs(engine - oracle) / std::abs(oracle) : std::abs(engine);
    c.tolerance = tol;
    c.pass = c.rel_diff <= tol;
    out.push_back(std::move(c));
  };

  // Squeezing solution for the single-seed pair along the nin grid.
  const Preset single = preset(Scenario::single_seed);
  for (double n : cfg.nin_grid) {
    const SeedState seed = make_seed(Scenario::single_seed, n, single.phi);
    const double engine = criteria::fast_S(ModeMoments(modes, seed), single.weights);
    const double oracle = oracles::spdc_exact_S(oracles::SpdcOracleParams::from_seed(std::abs(cfg.xi), n));
    add("single-seed S vs squeezing solution, n_in=" + fmt(n), engine, oracle, 1e-3);
  }

  // Classical amplification of the fully seeded configuration.
  {
    const double phi = cfg.phi.value_or(preset(Scenario::full_seed).phi);
    const SeedState seed = make_seed(Scenario::full_seed, cfg.n_in, phi);
    const ModeMoments mm(modes, seed);
    const auto field = oracles::classical_meanfield({seed.alphas, 0.0}, cfg.xi);
    for (Mode k : kAllModes) {
      const double n0 = seed.photons(k);
      const double classical = n0 > 0.0 ? std::norm(field.amplitudes[slot(k)]) / n0 : 1.0;
      const double quantum = n0 > 0.0 ? mm.photon_number(k) / n0 : 1.0;
      add("full-seed gain mode " + std::to_string(label(k)) + " vs mean field, n_in=" + fmt(cfg.n_in) +
              ", phi=" + fmt(phi),
          quantum, classical, 0.05);
    }
  }

  // Truncated Fock space at a weak-coupling point.
  {
    const std::array<std::complex<double>, kNumModes> alphas{
        std::complex<double>(0.3, 0.0), std::complex<double>(0.0, 0.3), std::complex<double>(-0.3, 0.0)};
    constexpr double xi = 0.01;
    const SeedState seed = SeedState::coherent(alphas);
    EvolutionParams p = params;
    p.xi = {xi, 0.0};
    const auto weak = evolution::evolve_all(p);
    const ModeMoments mm(weak, seed);
    const oracles::FockMoments fock = oracles::fock_oracle_expectations(alphas, xi, 12);
    for (Mode k : kAllModes) {
      const std::string tag = std::to_string(label(k)) + " (alpha=(0.3,0.3i,-0.3), xi=0.01)";
      add("photon number mode " + tag, mm.photon_number(k), fock.photon_number(k), 1e-4);
      for (Quadrature kind : {Quadrature::P, Quadrature::Q}) {
        const moments::QuadratureSpec q{k, 0.0};
        add(std::string(kind == Quadrature::P ? "var P" : "var Q") + " mode " + tag,
            mm.quadrature_variance(q, kind), fock.quadrature_variance(q, kind), 1e-4);
      }
    }
  }
  return out;
}

nlohmann::json to_json(const std::vector<OracleComparison>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : rows) {
    arr.push_back({{"name", c.name},
                   {"engine", c.engine},
                   {"oracle", c.oracle},
                   {"rel_diff", c.rel_diff},
                   {"tolerance", c.tolerance},
                   {"pass", c.pass}});
  }
  return arr;
}

nlohmann::json manifest(const RunConfig& cfg, std::string_view command, std::string_view timestamp) {
  std::ostringstream checksum;
  checksum << std::hex << evolution::omega_checksum(cfg.max_order);
  nlohmann::json j;
  j["command"] = command;
  j["engine_version"] = engine_version();
  j["csv_schema"] = kCsvSchemaLine;
  j["omega_checksum"] = checksum.str();
  j["config"] = to_json(cfg);
  j["generated_at"] = timestamp;
  return j;
}

}  // namespace triphoton::sweep
