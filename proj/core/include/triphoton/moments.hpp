#pragma once

#include <array>
#include <complex>
#include <span>
#include <stdexcept>

#include "triphoton/algebra/polynomial.hpp"
#include "triphoton/evolution.hpp"
#include "triphoton/seed_state.hpp"

namespace triphoton::moments {

using algebra::OperatorPolynomial;
using evolution::EvolvedMode;

class NonHermitianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kHermiticityTolerance = 1e-12;
inline constexpr double kImaginaryTolerance = 1e-9;
inline constexpr double kVarianceSlack = 1e-9;

/// <alpha| A |alpha> for normal-ordered A: each term contributes
/// c * prod_k conj(alpha_k)^{m_k} alpha_k^{n_k}.
std::complex<double> coherent_expectation(const OperatorPolynomial& a, const SeedState& seed);

/// Rewrites A(a, a^dag) as a polynomial in the fluctuation operators
/// b_k = a_k - alpha_k, which annihilate the coherent seed. The result is
/// normal ordered in b, so its vacuum expectation is its constant term.
/// Working in this frame avoids subtracting ~N_in-sized means.
OperatorPolynomial displace(const OperatorPolynomial& a, const SeedState& seed);

/// displace() minus its constant term.
OperatorPolynomial fluctuation(const OperatorPolynomial& a, const SeedState& seed);

/// <0| L R |0> for normal-ordered L, R. Only annihilation-only words of L
/// and creation-only words of R with matching exponents survive, each pair
/// contributing prod_k n_k!.
std::complex<double> vacuum_pairing(const OperatorPolynomial& left, const OperatorPolynomial& right);

/// <A^dag A> on the seed.
double photon_number(const OperatorPolynomial& a, const SeedState& seed);
/// <[A, A^dag]> on the seed; exactly 1 for an untruncated ladder operator.
double commutator_expectation(const OperatorPolynomial& a, const SeedState& seed);

enum class Quadrature { P, Q };

/// Local-oscillator setting for one homodyne detector.
struct QuadratureSpec {
  Mode mode = Mode::one;
  double theta = 0.0;  // wrapped to [0, 2 pi)
};

double wrap_phase(double theta) noexcept;

/// Weight x with X = x A + conj(x) A^dag:
///   P(theta) = e^{-i theta} A^dag + e^{i theta} A,  Q(theta) = P(theta + pi/2).
std::complex<double> quadrature_weight(double theta, Quadrature kind) noexcept;

OperatorPolynomial quadrature_poly(const EvolvedMode& mode, double theta, Quadrature kind);

bool is_hermitian(const OperatorPolynomial& x, double rel_tol = kHermiticityTolerance);

struct MeanVariance {
  double mean = 0.0;
  double variance = 0.0;
};

/// Mean and variance of a Hermitian X. Throws NonHermitianError when X is
/// not Hermitian or its mean has an imaginary part above 1e-9.
MeanVariance mean_variance(const OperatorPolynomial& x, const SeedState& seed);

/// (1/2)<XY + YX> - <X><Y> for Hermitian X, Y.
double sym_covariance(const OperatorPolynomial& x, const OperatorPolynomial& y, const SeedState& seed);

/// <X^2> - <X>^2 computed by forming the full normal-ordered square of the
/// fluctuation part and reading off its vacuum term. Independent of the
/// pairing shortcut used by mean_variance.
double variance_by_product(const OperatorPolynomial& x, const SeedState& seed,
                           int cap = algebra::kDefaultDegreeCap);

/// First and second moments of the three evolved ladder operators on one
/// seed. Any quadrature mean or covariance is then a small quadratic form,
/// which is what the phase and weight scans evaluate.
class ModeMoments {
 public:
  ModeMoments(std::span<const EvolvedMode, kNumModes> modes, const SeedState& seed);

  std::complex<double> mean(Mode k) const noexcept { return means_[slot(k)]; }
  /// <A_k^dag A_k>.
  double photon_number(Mode k) const noexcept;
  double quadrature_mean(const QuadratureSpec& q, Quadrature kind) const noexcept;
  /// Symmetrized covariance of two quadratures.
  double quadrature_covariance(const QuadratureSpec& x, Quadrature kx, const QuadratureSpec& y,
                               Quadrature ky) const noexcept;
  double quadrature_variance(const QuadratureSpec& q, Quadrature kind) const noexcept {
    return quadrature_covariance(q, kind, q, kind);
  }

 private:
  using Matrix = std::array<std::array<std::complex<double>, kNumModes>, kNumModes>;
  std::array<std::complex<double>, kNumModes> means_{};
  Matrix aa_{};  // <dA_k dA_m>
  Matrix ad_{};  // <dA_k dA_m^dag>
  Matrix da_{};  // <dA_k^dag dA_m>
  Matrix dd_{};  // <dA_k^dag dA_m^dag>
};

}  // namespace triphoton::moments
