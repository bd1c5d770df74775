// Command-line front end for sweeps over the three-mode down-conversion engine.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "triphoton/sweep.hpp"

namespace {

namespace ts = triphoton::sweep;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitEngine = 3;

struct RawOptions {
  std::string scenario = "full-seed";
  std::string xi;
  int order = triphoton::evolution::kDefaultOrder;
  std::string nin;
  std::string nin_grid;
  std::string phi;
  std::string phi_grid;
  std::string theta1_grid;
  std::string beta;
  std::string theta[3];
  std::string weights;
  std::string out;
  std::string format = "csv";
  int jobs = 1;
};

void add_common_options(CLI::App& cmd, RawOptions& o) {
  cmd.add_option("--scenario", o.scenario,
                 "fluorescence | single-seed | double-seed | full-seed | pair-variant");
  cmd.add_option("--xi", o.xi, "interaction strength kappa t (default 1.75e-6)");
  cmd.add_option("--order", o.order, "expansion order N (default 5)");
  cmd.add_option("--nin", o.nin, "mean seed photons per seeded mode (default 4e10)");
  cmd.add_option("--nin-grid", o.nin_grid, "photon grid, start:stop:count or log:start:stop:count");
  cmd.add_option("--phi", o.phi, "seed phase, e.g. pi/2");
  cmd.add_option("--phi-grid", o.phi_grid, "seed-phase grid (default 0:2pi:360)");
  cmd.add_option("--theta1-grid", o.theta1_grid, "theta1 grid for theta-scan (default 0:2pi:37)");
  cmd.add_option("--beta", o.beta, "beta of u=Q1+(Q2+Q3)/(beta sqrt2), v=P1-beta(P2+P3)/sqrt2");
  cmd.add_option("--theta1", o.theta[0], "local-oscillator phase of mode 1");
  cmd.add_option("--theta2", o.theta[1], "local-oscillator phase of mode 2");
  cmd.add_option("--theta3", o.theta[2], "local-oscillator phase of mode 3");
  cmd.add_option("--weights", o.weights, "explicit weights h1,h2,h3,g1,g2,g3");
  cmd.add_option("--out", o.out, "output file (default: standard output)");
  cmd.add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  cmd.add_option("--jobs", o.jobs, "worker threads");
}

int max_order_from_env() {
  const char* raw = std::getenv("TRIPHOTON_MAX_ORDER");
  if (raw == nullptr || *raw == '\0') return triphoton::evolution::kDefaultMaxOrder;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1 || v > 32) {
    throw ts::ConfigError("TRIPHOTON_MAX_ORDER must be an integer in [1, 32], got '" + std::string(raw) + "'");
  }
  return static_cast<int>(v);
}

ts::RunConfig resolve(const RawOptions& o) {
  ts::RunConfig cfg;
  cfg.scenario = ts::parse_scenario(o.scenario);
  cfg.max_order = max_order_from_env();
  cfg.order = o.order;
  cfg.jobs = o.jobs;
  if (!o.xi.empty()) cfg.xi = ts::parse_value(o.xi);
  if (!o.nin.empty()) cfg.n_in = ts::parse_value(o.nin);
  if (!o.nin_grid.empty()) cfg.nin_grid = ts::parse_grid(o.nin_grid);
  if (!o.phi.empty()) cfg.phi = ts::parse_value(o.phi);
  if (!o.phi_grid.empty()) cfg.phi_grid = ts::parse_grid(o.phi_grid);
  if (!o.theta1_grid.empty()) cfg.theta1_grid = ts::parse_grid(o.theta1_grid);
  if (!o.beta.empty()) cfg.beta = ts::parse_value(o.beta);
  for (std::size_t k = 0; k < 3; ++k) {
    if (!o.theta[k].empty()) cfg.thetas[k] = ts::parse_value(o.theta[k]);
  }
  if (!o.weights.empty()) {
    std::vector<double> w;
    std::size_t begin = 0;
    for (std::size_t i = 0; i <= o.weights.size(); ++i) {
      if (i == o.weights.size() || o.weights[i] == ',') {
        w.push_back(ts::parse_value(std::string_view(o.weights).substr(begin, i - begin)));
        begin = i + 1;
      }
    }
    if (w.size() != 6) throw ts::ConfigError("--weights needs six values h1,h2,h3,g1,g2,g3");
    cfg.weights = std::array<double, 6>{w[0], w[1], w[2], w[3], w[4], w[5]};
  }
  cfg.validate();
  return cfg;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void warn_on_validity(const ts::RunConfig& cfg, const std::vector<double>& photons) {
  const auto params = cfg.evolution();
  double n_max = 0.0;
  for (double n : photons) n_max = std::max(n_max, n);
  const auto seed = ts::make_seed(cfg.scenario, n_max, cfg.resolved_phi());
  if (triphoton::evolution::exceeds_validity_proxy(params, seed)) {
    std::cerr << "warning: |xi| sqrt(n_in) = " << triphoton::evolution::validity_proxy(params, seed)
              << " at n_in = " << n_max << " is outside the range where the expansion is reliable\n";
  }
}

/// Writes to --out (plus a manifest beside it) or to standard output.
template <class Emit>
void emit(const RawOptions& o, const ts::RunConfig& cfg, std::string_view command, Emit&& body) {
  if (o.out.empty()) {
    body(std::cout);
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw ts::ConfigError("cannot open '" + o.out + "' for writing");
  body(file);
  if (!file.flush()) throw ts::ConfigError("failed writing '" + o.out + "'");

  const std::string manifest_path = o.out + ".manifest.json";
  std::ofstream mf(manifest_path, std::ios::binary);
  if (!mf) throw ts::ConfigError("cannot open '" + manifest_path + "' for writing");
  auto m = ts::manifest(cfg, command, utc_timestamp());
  m["output"] = o.out;
  m["format"] = o.format;
  mf << m.dump(2) << '\n';
}

void emit_rows(const RawOptions& o, const ts::RunConfig& cfg, std::string_view command,
               const std::vector<ts::SweepRow>& rows) {
  emit(o, cfg, command, [&](std::ostream& os) {
    if (o.format == "json") {
      ts::write_json(os, rows);
    } else {
      ts::write_csv(os, rows);
    }
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"triphoton: entanglement criteria for three-photon down-conversion"};
  app.require_subcommand(1);

  RawOptions opts;
  auto* sweep = app.add_subcommand("sweep", "S against seed photon number");
  auto* gain = app.add_subcommand("gain-map", "gains and quadrature variances against seed phase");
  auto* theta = app.add_subcommand("theta-scan", "S minimized over theta2, theta3 for each theta1");
  auto* beta = app.add_subcommand("beta-opt", "optimal beta against seed photon number");
  auto* oracle = app.add_subcommand("oracle-check", "engine against independent reference solutions");
  auto* presets = app.add_subcommand("list-presets", "print scenario presets");
  for (CLI::App* cmd : {sweep, gain, theta, beta, oracle}) add_common_options(*cmd, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (presets->parsed()) {
    std::cout << ts::list_presets();
    return kExitOk;
  }

  ts::RunConfig cfg;
  try {
    cfg = resolve(opts);
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (sweep->parsed()) {
      warn_on_validity(cfg, cfg.nin_grid);
      emit_rows(opts, cfg, "sweep", ts::run_sweep(cfg));
    } else if (gain->parsed()) {
      warn_on_validity(cfg, {cfg.n_in});
      emit_rows(opts, cfg, "gain-map", ts::run_gain_map(cfg));
    } else if (theta->parsed()) {
      warn_on_validity(cfg, {cfg.n_in});
      emit_rows(opts, cfg, "theta-scan", ts::run_theta_scan(cfg));
    } else if (beta->parsed()) {
      warn_on_validity(cfg, cfg.nin_grid);
      emit_rows(opts, cfg, "beta-opt", ts::run_beta_opt(cfg));
    } else if (oracle->parsed()) {
      const auto rows = ts::oracle_check(cfg);
      emit(opts, cfg, "oracle-check", [&](std::ostream& os) {
        if (opts.format == "json") {
          os << ts::to_json(rows).dump(2) << '\n';
          return;
        }
        for (const auto& c : rows) {
          os << (c.pass ? "PASS " : "FAIL ") << c.name << ": engine=" << ts::format_double(c.engine)
             << " oracle=" << ts::format_double(c.oracle) << " rel=" << ts::format_double(c.rel_diff)
             << " tol=" << ts::format_double(c.tolerance) << '\n';
        }
      });
    }
  } catch (const ts::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "engine error: " << e.what() << '\n';
    return kExitEngine;
  }
  return kExitOk;
}
