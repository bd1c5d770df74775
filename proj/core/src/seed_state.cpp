#include "triphoton/seed_state.hpp"

#include <cmath>
#include <stdexcept>

namespace triphoton {

namespace {

std::complex<double> amplitude(double n_in, double phi) {
  if (!(n_in >= 0.0) || !std::isfinite(n_in)) {
    throw std::invalid_argument("seed photon number must be finite and non-negative");
  }
  return std::polar(std::sqrt(n_in), phi);
}

}  // namespace

SeedState SeedState::coherent(const std::array<std::complex<double>, kNumModes>& alphas) {
  for (const auto& a : alphas) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("coherent amplitudes must be finite");
    }
  }
  return SeedState{alphas};
}

SeedState SeedState::single_seed(Mode k, double n_in, double phi) {
  SeedState s;
  s.alphas[slot(k)] = amplitude(n_in, phi);
  return s;
}

SeedState SeedState::double_seed(double n_in, double phi) {
  SeedState s;
  s.alphas[slot(Mode::two)] = amplitude(n_in, phi);
  s.alphas[slot(Mode::three)] = amplitude(n_in, phi);
  return s;
}

SeedState SeedState::full_seed(double n_in, double phi) {
  const auto a = amplitude(n_in, phi);
  return SeedState{{a, a, a}};
}

double SeedState::max_amplitude() const noexcept {
  double best = 0.0;
  for (const auto& a : alphas) best = std::max(best, std::abs(a));
  return best;
}

bool SeedState::is_vacuum() const noexcept {
  for (const auto& a : alphas) {
    if (a != std::complex<double>{}) return false;
  }
  return true;
}

}  // namespace triphoton
