#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "triphoton/mode.hpp"

namespace triphoton::algebra {

/// Largest exponent any single ladder operator may carry unless a caller
/// passes a different cap.
inline constexpr int kDefaultDegreeCap = 16;

class DegreeOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Normal-ordered product of ladder operators of the three modes:
///
///   (a1^dag)^m1 (a2^dag)^m2 (a3^dag)^m3  a1^n1 a2^n2 a3^n3
///
/// All creation operators sit left of all annihilation operators, modes
/// ascending within each block, so the exponent pair is a unique key.
struct Monomial {
  std::array<std::uint8_t, kNumModes> dagger{};
  std::array<std::uint8_t, kNumModes> plain{};

  static Monomial identity() noexcept { return {}; }
  static Monomial creation(Mode m, int power = 1);
  static Monomial annihilation(Mode m, int power = 1);

  /// Validating constructor; throws DegreeOverflow if any exponent exceeds
  /// `cap` and std::invalid_argument for negative exponents.
  static Monomial make(const std::array<int, kNumModes>& dagger_exponents,
                       const std::array<int, kNumModes>& plain_exponents,
                       int cap = kDefaultDegreeCap);

  int degree() const noexcept;
  int max_exponent() const noexcept;
  bool is_identity() const noexcept { return degree() == 0; }

  /// Hermitian conjugate. The conjugate of a normal-ordered word is again
  /// normal-ordered, with the two exponent blocks exchanged.
  Monomial adjoint() const noexcept { return Monomial{plain, dagger}; }

  /// Relabels modes: exponent of mode k moves to mode perm[k].
  Monomial permuted(const std::array<Mode, kNumModes>& perm) const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Graded order: total degree first, then creation exponents, then
  /// annihilation exponents.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;
};

/// Debug rendering, e.g. "ad1^2*a3". The identity renders as "1".
std::string to_string(const Monomial& m);

}  // namespace triphoton::algebra
