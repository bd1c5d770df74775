#pragma once

#include <array>
#include <complex>

#include "triphoton/mode.hpp"

namespace triphoton {

/// Product of coherent states |alpha_1, alpha_2, alpha_3> injected into the
/// three modes. The mean input photon number of mode k is |alpha_k|^2.
struct SeedState {
  std::array<std::complex<double>, kNumModes> alphas{};

  static SeedState vacuum() { return {}; }
  static SeedState coherent(const std::array<std::complex<double>, kNumModes>& alphas);

  /// Only mode `k` seeded with amplitude sqrt(n_in) e^{i phi}.
  static SeedState single_seed(Mode k, double n_in, double phi);
  /// Modes 2 and 3 seeded identically, mode 1 left in vacuum.
  static SeedState double_seed(double n_in, double phi);
  /// All three modes seeded with identical amplitude and phase.
  static SeedState full_seed(double n_in, double phi);

  std::complex<double> alpha(Mode k) const noexcept { return alphas[slot(k)]; }
  double photons(Mode k) const noexcept { return std::norm(alphas[slot(k)]); }
  double max_amplitude() const noexcept;
  bool is_vacuum() const noexcept;
};

}  // namespace triphoton
