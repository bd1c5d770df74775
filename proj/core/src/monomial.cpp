#include "triphoton/algebra/monomial.hpp"

#include <numeric>

namespace triphoton::algebra {

namespace {

std::uint8_t checked_exponent(int value, int cap) {
  if (value < 0) throw std::invalid_argument("negative ladder-operator exponent");
  if (value > cap) {
    throw DegreeOverflow("exponent " + std::to_string(value) + " exceeds degree cap " +
                         std::to_string(cap));
  }
  if (value > 255) throw DegreeOverflow("exponent does not fit monomial storage");
  return static_cast<std::uint8_t>(value);
}

}  // namespace

Monomial Monomial::creation(Mode m, int power) {
  Monomial out;
  out.dagger[slot(m)] = checked_exponent(power, kDefaultDegreeCap);
  return out;
}

Monomial Monomial::annihilation(Mode m, int power) {
  Monomial out;
  out.plain[slot(m)] = checked_exponent(power, kDefaultDegreeCap);
  return out;
}

Monomial Monomial::make(const std::array<int, kNumModes>& dagger_exponents,
                        const std::array<int, kNumModes>& plain_exponents, int cap) {
  Monomial out;
  for (std::size_t k = 0; k < kNumModes; ++k) {
    out.dagger[k] = checked_exponent(dagger_exponents[k], cap);
    out.plain[k] = checked_exponent(plain_exponents[k], cap);
  }
  return out;
}

int Monomial::degree() const noexcept {
  return std::accumulate(dagger.begin(), dagger.end(), 0) +
         std::accumulate(plain.begin(), plain.end(), 0);
}

int Monomial::max_exponent() const noexcept {
  int best = 0;
  for (std::size_t k = 0; k < kNumModes; ++k) {
    best = std::max({best, int{dagger[k]}, int{plain[k]}});
  }
  return best;
}

Monomial Monomial::permuted(const std::array<Mode, kNumModes>& perm) const noexcept {
  Monomial out;
  for (std::size_t k = 0; k < kNumModes; ++k) {
    out.dagger[slot(perm[k])] = dagger[k];
    out.plain[slot(perm[k])] = plain[k];
  }
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = a.dagger <=> b.dagger; c != 0) return c;
  return a.plain <=> b.plain;
}

std::string to_string(const Monomial& m) {
  std::string out;
  auto append = [&out](const char* prefix, std::size_t k, int power) {
    if (power == 0) return;
    if (!out.empty()) out += '*';
    out += prefix;
    out += std::to_string(k + 1);
    if (power > 1) {
      out += '^';
      out += std::to_string(power);
    }
  };
  for (std::size_t k = 0; k < kNumModes; ++k) append("ad", k, m.dagger[k]);
  for (std::size_t k = 0; k < kNumModes; ++k) append("a", k, m.plain[k]);
  return out.empty() ? std::string("1") : out;
}

}  // namespace triphoton::algebra
