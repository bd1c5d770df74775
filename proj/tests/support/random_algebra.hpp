#pragma once

#include <random>

#include "triphoton/algebra/polynomial.hpp"

namespace triphoton::testing {

inline algebra::Monomial random_monomial(std::mt19937_64& rng, int max_exponent) {
  std::uniform_int_distribution<int> e(0, max_exponent);
  algebra::Monomial m;
  for (std::size_t k = 0; k < kNumModes; ++k) {
    m.dagger[k] = static_cast<std::uint8_t>(e(rng));
    m.plain[k] = static_cast<std::uint8_t>(e(rng));
  }
  return m;
}

/// Small Gaussian-integer coefficients, terms with total degree <= max_degree.
inline algebra::ExactPolynomial random_polynomial(std::mt19937_64& rng, int terms, int max_degree,
                                                  int max_exponent = 3) {
  std::uniform_int_distribution<long> c(-4, 4);
  algebra::ExactPolynomial p;
  int placed = 0;
  while (placed < terms) {
    const algebra::Monomial m = random_monomial(rng, max_exponent);
    if (m.degree() > max_degree) continue;
    p.add_term(m, algebra::GaussianRational(mpq_class(c(rng)), mpq_class(c(rng))));
    ++placed;
  }
  return p;
}

}  // namespace triphoton::testing
