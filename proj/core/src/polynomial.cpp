#include "triphoton/algebra/polynomial.hpp"

namespace triphoton::algebra {

OperatorPolynomial to_numeric(const ExactPolynomial& p) {
  OperatorPolynomial out;
  for (const auto& [m, c] : p.terms()) out.add_term(m, c.to_complex());
  return out;
}

}  // namespace triphoton::algebra
