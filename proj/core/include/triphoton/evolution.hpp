#pragma once

#include <array>
#include <complex>
#include <cstdint>

#include "triphoton/algebra/polynomial.hpp"
#include "triphoton/mode.hpp"
#include "triphoton/seed_state.hpp"

namespace triphoton::evolution {

using algebra::ExactPolynomial;
using algebra::OperatorPolynomial;

/// Interaction strength |xi| = kappa t representative of current chi(3) media.
inline constexpr double kReferenceXi = 1.75e-6;
inline constexpr int kDefaultOrder = 5;
inline constexpr int kDefaultMaxOrder = 8;
/// |xi| * max_k |alpha_k| at or above which the truncated series is flagged.
inline constexpr double kValidityProxyLimit = 0.7;

class OrderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// H / (hbar kappa) = a1^dag a2^dag a3^dag + a1 a2 a3.
ExactPolynomial hamiltonian_kernel();

/// Omega_0 = a_k, Omega_n = [H~, Omega_{n-1}]. Exact, memoized per process
/// and safe to call from several threads. The returned reference stays
/// valid for the life of the process.
const ExactPolynomial& omega(int n, Mode k);

/// FNV-1a digest of the rendered Omega table up to `max_order`, for run
/// manifests.
std::uint64_t omega_checksum(int max_order);

struct EvolutionParams {
  std::complex<double> xi{kReferenceXi, 0.0};
  int order = kDefaultOrder;
  int max_order = kDefaultMaxOrder;

  /// Throws OrderError unless 0 <= order <= max_order.
  void validate() const;
  EvolutionParams with_order(int n) const {
    EvolutionParams p = *this;
    p.order = n;
    return p;
  }
};

/// Truncated Heisenberg-picture output operator
///   A_k = a_k + sum_{n=1..N} (i xi)^n / n! Omega_n(k).
struct EvolvedMode {
  Mode mode = Mode::one;
  OperatorPolynomial poly;
  int order = 0;
  EvolutionParams params;
};

EvolvedMode evolve_mode(Mode k, const EvolutionParams& params);
std::array<EvolvedMode, kNumModes> evolve_all(const EvolutionParams& params);

/// A_k^dag assembled term by term from adjoint(Omega_n) with conjugated
/// weights, independent of adjoint(evolve_mode(...).poly).
OperatorPolynomial evolve_mode_adjoint(Mode k, const EvolutionParams& params);

/// |xi| * max_k |alpha_k|.
double validity_proxy(const EvolutionParams& params, const SeedState& seed);
bool exceeds_validity_proxy(const EvolutionParams& params, const SeedState& seed);

/// Truncation error proxy for mode k: the maximum of
///   (a) |<A^dag A>_N - <A^dag A>_{N-1}| over the larger of the two (0 when
///       both vanish)
///   (b) |<[A, A^dag]> - 1|, the unitarity deficit of the truncated operator.
double truncation_diagnostic(Mode k, const SeedState& seed, const EvolutionParams& params);

}  // namespace triphoton::evolution
