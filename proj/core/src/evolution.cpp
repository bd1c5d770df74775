#include "triphoton/evolution.hpp"

#include <cmath>
#include <deque>
#include <mutex>
#include <string>

#include "triphoton/moments.hpp"

namespace triphoton::evolution {

using algebra::GaussianRational;
using algebra::Monomial;

ExactPolynomial hamiltonian_kernel() {
  ExactPolynomial h;
  h.add_term(Monomial::make({1, 1, 1}, {0, 0, 0}), GaussianRational(1));
  h.add_term(Monomial::make({0, 0, 0}, {1, 1, 1}), GaussianRational(1));
  return h;
}

namespace {

struct OmegaCache {
  std::mutex mutex;
  std::deque<std::array<ExactPolynomial, kNumModes>> levels;
};

OmegaCache& omega_cache() {
  static OmegaCache cache;
  return cache;
}

}  // namespace

const ExactPolynomial& omega(int n, Mode k) {
  if (n < 0) throw OrderError("Omega order must be non-negative");
  auto& cache = omega_cache();
  std::lock_guard lock(cache.mutex);
  if (cache.levels.empty()) {
    cache.levels.push_back({algebra::annihilation(Mode::one), algebra::annihilation(Mode::two),
                            algebra::annihilation(Mode::three)});
  }
  static const ExactPolynomial kernel = hamiltonian_kernel();
  while (static_cast<int>(cache.levels.size()) <= n) {
    const auto& prev = cache.levels.back();
    std::array<ExactPolynomial, kNumModes> next;
    for (std::size_t s = 0; s < kNumModes; ++s) next[s] = algebra::commutator(kernel, prev[s]);
    cache.levels.push_back(std::move(next));
  }
  return cache.levels[static_cast<std::size_t>(n)][slot(k)];
}

std::uint64_t omega_checksum(int max_order) {
  std::uint64_t hash = 14695981039346656037ull;
  for (int n = 0; n <= max_order; ++n) {
    for (Mode k : kAllModes) {
      const std::string text = std::to_string(n) + ":" + std::to_string(label(k)) + "=" +
                               algebra::to_string(omega(n, k)) + ";";
      for (unsigned char ch : text) {
        hash ^= ch;
        hash *= 1099511628211ull;
      }
    }
  }
  return hash;
}

void EvolutionParams::validate() const {
  if (order < 0) throw OrderError("expansion order must be non-negative");
  if (order > max_order) {
    throw OrderError("expansion order " + std::to_string(order) + " exceeds maximum " +
                     std::to_string(max_order));
  }
  if (!std::isfinite(xi.real()) || !std::isfinite(xi.imag())) {
    throw std::invalid_argument("interaction strength must be finite");
  }
}

namespace {

/// (i xi)^n / n! for n = 0..order.
std::vector<std::complex<double>> series_weights(const EvolutionParams& p) {
  std::vector<std::complex<double>> w(static_cast<std::size_t>(p.order) + 1);
  const std::complex<double> step = std::complex<double>(0.0, 1.0) * p.xi;
  w[0] = 1.0;
  for (int n = 1; n <= p.order; ++n) w[n] = w[n - 1] * step / static_cast<double>(n);
  return w;
}

}  // namespace

EvolvedMode evolve_mode(Mode k, const EvolutionParams& params) {
  params.validate();
  const auto w = series_weights(params);
  OperatorPolynomial poly;
  for (int n = 0; n <= params.order; ++n) {
    if (w[n] == std::complex<double>{}) continue;
    poly += algebra::to_numeric(omega(n, k)) * w[n];
  }
  return EvolvedMode{k, std::move(poly), params.order, params};
}

std::array<EvolvedMode, kNumModes> evolve_all(const EvolutionParams& params) {
  return {evolve_mode(Mode::one, params), evolve_mode(Mode::two, params),
          evolve_mode(Mode::three, params)};
}

OperatorPolynomial evolve_mode_adjoint(Mode k, const EvolutionParams& params) {
  params.validate();
  const auto w = series_weights(params);
  OperatorPolynomial poly;
  for (int n = 0; n <= params.order; ++n) {
    if (w[n] == std::complex<double>{}) continue;
    poly += algebra::to_numeric(algebra::adjoint(omega(n, k))) * std::conj(w[n]);
  }
  return poly;
}

double validity_proxy(const EvolutionParams& params, const SeedState& seed) {
  return std::abs(params.xi) * seed.max_amplitude();
}

bool exceeds_validity_proxy(const EvolutionParams& params, const SeedState& seed) {
  return validity_proxy(params, seed) >= kValidityProxyLimit;
}

double truncation_diagnostic(Mode k, const SeedState& seed, const EvolutionParams& params) {
  if (params.order < 1) throw OrderError("truncation diagnostic needs order >= 1");
  const EvolvedMode at_n = evolve_mode(k, params);
  const EvolvedMode at_prev = evolve_mode(k, params.with_order(params.order - 1));

  const double n_now = moments::photon_number(at_n.poly, seed);
  const double n_prev = moments::photon_number(at_prev.poly, seed);
  double change = 0.0;
  if (n_now != 0.0 || n_prev != 0.0) {
    change = std::abs(n_now - n_prev) / std::max(std::abs(n_now), std::abs(n_prev));
  }
  const double deficit = std::abs(moments::commutator_expectation(at_n.poly, seed) - 1.0);
  return std::max(change, deficit);
}

}  // namespace triphoton::evolution
