#pragma once

#include <array>
#include <complex>
#include <stdexcept>

#include "triphoton/mode.hpp"
#include "triphoton/moments.hpp"

namespace triphoton::oracles {

/// Effective two-mode squeezer obtained when only mode 3 is seeded: the
/// bright seed turns the cubic coupling into a quadratic one with strength
/// proportional to its amplitude.
struct SpdcOracleParams {
  double r = 0.0;  // squeezing parameter |xi| sqrt(N_in)
  double seed_phase = 0.0;

  static SpdcOracleParams from_seed(double xi_abs, double n_in, double seed_phase = 0.0);
};

/// S = 4 e^{-2r} for u = Q1 + Q2, v = P1 - P2 with the local oscillators
/// aligned to the squeezed quadratures.
double spdc_exact_S(const SpdcOracleParams& p);

/// Seed photon number at which spdc_exact_S reaches `level`.
double spdc_crossing_photons(double xi_abs, double level = 2.0);

/// Classical amplitudes of the three fields at dimensionless time tau.
struct ClassicalField {
  std::array<std::complex<double>, kNumModes> amplitudes{};
  double tau = 0.0;
};

class StepLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MeanFieldOptions {
  int steps = 1000;
  double tolerance = 1e-10;
  int max_steps = 1 << 22;
};

/// Integrates d alpha_k / d tau = -i conj(alpha_l) conj(alpha_m) with fixed-step
/// RK4, halving the step until two successive solutions differ by less than
/// `tolerance` relative to the largest amplitude.
ClassicalField classical_meanfield(const ClassicalField& initial, double tau_final,
                                   const MeanFieldOptions& options = {});

class FockBudgetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FockTruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxFockStates = 8000;
inline constexpr double kMaxEdgePopulation = 1e-10;

/// Raw moments of the input ladder operators on the state evolved by
/// exp(-i xi H~) in a truncated Fock space.
struct FockMoments {
  using Matrix = std::array<std::array<std::complex<double>, kNumModes>, kNumModes>;

  std::array<std::complex<double>, kNumModes> mean{};  // <a_k>
  Matrix aa{};  // <a_k a_m>
  Matrix ad{};  // <a_k a_m^dag>
  Matrix da{};  // <a_k^dag a_m>
  Matrix dd{};  // <a_k^dag a_m^dag>
  double initial_norm = 1.0;
  double final_norm = 1.0;
  double edge_population = 0.0;

  double photon_number(Mode k) const noexcept { return da[slot(k)][slot(k)].real(); }
  double quadrature_mean(const moments::QuadratureSpec& q, moments::Quadrature kind) const noexcept;
  double quadrature_covariance(const moments::QuadratureSpec& x, moments::Quadrature kx,
                               const moments::QuadratureSpec& y, moments::Quadrature ky) const noexcept;
  double quadrature_variance(const moments::QuadratureSpec& q, moments::Quadrature kind) const noexcept {
    return quadrature_covariance(q, kind, q, kind);
  }
};

/// Evolves the coherent state |alpha_1, alpha_2, alpha_3> under
/// exp(-i xi H~) with `cutoff` levels per mode. H~ conserves n1 - n2 and
/// n1 - n3, so it is diagonalized exactly block by block. Throws
/// FockBudgetError when cutoff^3 > kMaxFockStates and FockTruncationError
/// when the top level carries more than kMaxEdgePopulation.
FockMoments fock_oracle_expectations(const std::array<std::complex<double>, kNumModes>& alphas, double xi,
                                     int cutoff);

}  // namespace triphoton::oracles
