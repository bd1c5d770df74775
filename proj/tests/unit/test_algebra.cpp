#include <gtest/gtest.h>

#include <random>

#include "fock_dense.hpp"
#include "random_algebra.hpp"
#include "triphoton/algebra/polynomial.hpp"
#include "triphoton/evolution.hpp"

namespace {

using namespace triphoton;
using namespace triphoton::algebra;
using triphoton::testing::apply_poly;
using triphoton::testing::basis_state;
using triphoton::testing::random_monomial;
using triphoton::testing::random_polynomial;
using triphoton::testing::relative_distance;

using Poly = ExactPolynomial;

const Poly a1 = annihilation(Mode::one);
const Poly ad1 = creation(Mode::one);
const Poly a2 = annihilation(Mode::two);
const Poly ad2 = creation(Mode::two);
const Poly a3 = annihilation(Mode::three);
const Poly ad3 = creation(Mode::three);
const Poly one = Poly::constant(1);

Poly word(std::array<int, 3> d, std::array<int, 3> p) { return Poly(Monomial::make(d, p)); }

TEST(Monomial, CanonicalKeyAndRendering) {
  const Monomial m = Monomial::make({2, 0, 0}, {0, 0, 1});
  EXPECT_EQ(to_string(m), "ad1^2*a3");
  EXPECT_EQ(to_string(Monomial::identity()), "1");
  EXPECT_EQ(m, Monomial::make({2, 0, 0}, {0, 0, 1}));
  EXPECT_EQ(m.degree(), 3);
  EXPECT_EQ(m.max_exponent(), 2);
}

TEST(Monomial, DegreeCapIsAnError) {
  EXPECT_NO_THROW(Monomial::make({16, 0, 0}, {0, 0, 0}));
  EXPECT_THROW(Monomial::make({17, 0, 0}, {0, 0, 0}), DegreeOverflow);
  EXPECT_THROW(Monomial::make({3, 0, 0}, {0, 0, 0}, 2), DegreeOverflow);
  EXPECT_THROW(Monomial::make({-1, 0, 0}, {0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(normal_order_product(Monomial::make({9, 0, 0}, {}), Monomial::make({9, 0, 0}, {})),
               DegreeOverflow);
}

TEST(NormalOrderProduct, SingleModeCommutationRelation) {
  // a1 * a1^dag = a1^dag a1 + 1
  const Poly p = normal_order_product(Monomial::annihilation(Mode::one), Monomial::creation(Mode::one));
  EXPECT_EQ(p, word({1, 0, 0}, {1, 0, 0}) + one);
}

TEST(NormalOrderProduct, NumberOperatorSquared) {
  const Monomial n1 = Monomial::make({1, 0, 0}, {1, 0, 0});
  EXPECT_EQ(normal_order_product(n1, n1), word({2, 0, 0}, {2, 0, 0}) + word({1, 0, 0}, {1, 0, 0}));
}

TEST(NormalOrderProduct, AlreadyOrderedProductIsUnchanged) {
  const Poly p = normal_order_product(Monomial::make({0, 1, 1}, {}), Monomial::make({}, {0, 1, 1}));
  EXPECT_EQ(p, word({0, 1, 1}, {0, 1, 1}));
}

TEST(Multiply, BilinearExpansion) {
  // (a1 + 1)(a1^dag - 1) = a1^dag a1 + a1^dag - a1
  EXPECT_EQ(multiply(a1 + one, ad1 - one), word({1, 0, 0}, {1, 0, 0}) + ad1 - a1);
}

TEST(Multiply, ZeroAndUnit) {
  std::mt19937_64 rng(7);
  const Poly b = random_polynomial(rng, 5, 4);
  EXPECT_TRUE(multiply(Poly{}, b).is_zero());
  EXPECT_EQ(multiply(one, b), b);
  EXPECT_EQ(multiply(b, one), b);
}

TEST(Commutator, Examples) {
  EXPECT_EQ(commutator(a1, ad1), one);
  const Poly h = evolution::hamiltonian_kernel();
  EXPECT_EQ(commutator(h, a1), -word({0, 1, 1}, {}));
  EXPECT_TRUE(commutator(h, h).is_zero());
}

TEST(Adjoint, Examples) {
  EXPECT_EQ(adjoint(a1 * GaussianRational::i()), ad1 * (-GaussianRational::i()));
  const Poly h = evolution::hamiltonian_kernel();
  EXPECT_EQ(adjoint(h), h);
  EXPECT_EQ(adjoint(word({1, 0, 0}, {1, 0, 0})), word({1, 0, 0}, {1, 0, 0}));
}

TEST(Rendering, StableDebugText) {
  const Poly p = -word({0, 1, 1}, {});
  EXPECT_EQ(to_string(p), "(-1+0i)*ad2*ad3");
  EXPECT_EQ(to_string(Poly{}), "0");
  EXPECT_EQ(to_string(to_numeric(p)), "(-1+0i)*ad2*ad3");
  EXPECT_EQ(to_string(one * GaussianRational(mpq_class(1, 2), mpq_class(-3))), "(1/2-3i)");
}

TEST(Coefficient, NumericPruning) {
  OperatorPolynomial p(Monomial::creation(Mode::one), {1e-301, 0.0});
  EXPECT_TRUE(p.is_zero());
  OperatorPolynomial q(Monomial::creation(Mode::one), {1.0, 0.0});
  q.add_term(Monomial::creation(Mode::one), {-1.0, 0.0});
  EXPECT_TRUE(q.is_zero());
}

TEST(AlgebraProperties, AdjointIsAnInvolution) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Poly p = random_polynomial(rng, 6, 6);
    EXPECT_EQ(adjoint(adjoint(p)), p);
  }
}

TEST(AlgebraProperties, CommutatorIsAntisymmetric) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const Poly a = random_polynomial(rng, 4, 4);
    const Poly b = random_polynomial(rng, 4, 4);
    EXPECT_EQ(commutator(a, b), -commutator(b, a));
  }
}

TEST(AlgebraProperties, JacobiIdentity) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    const Poly a = random_polynomial(rng, 3, 3, 2);
    const Poly b = random_polynomial(rng, 3, 3, 2);
    const Poly c = random_polynomial(rng, 3, 3, 2);
    const Poly sum = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                     commutator(c, commutator(a, b));
    EXPECT_TRUE(sum.is_zero()) << to_string(sum);
  }
}

TEST(AlgebraProperties, DistinctModesCommute) {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<int> e(0, 3);
  for (int i = 0; i < 100; ++i) {
    const Poly f = word({e(rng), 0, 0}, {e(rng), 0, 0}) + word({e(rng), 0, 0}, {e(rng), 0, 0});
    const Poly g = word({0, e(rng), 0}, {0, e(rng), 0}) + word({0, 0, e(rng)}, {0, 0, e(rng)});
    EXPECT_TRUE(commutator(f, g).is_zero());
  }
}

TEST(AlgebraProperties, MultiplicationIsAssociative) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 50; ++i) {
    const Poly a = random_polynomial(rng, 3, 3, 2);
    const Poly b = random_polynomial(rng, 3, 3, 2);
    const Poly c = random_polynomial(rng, 3, 3, 2);
    EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
  }
}

TEST(AlgebraProperties, ExactAndNumericProductsAgree) {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 100; ++i) {
    const Poly a = random_polynomial(rng, 4, 5);
    const Poly b = random_polynomial(rng, 4, 5);
    const OperatorPolynomial exact = to_numeric(multiply(a, b));
    const OperatorPolynomial numeric = multiply(to_numeric(a), to_numeric(b));
    ASSERT_EQ(exact.size(), numeric.size());
    for (const auto& [m, c] : exact.terms()) {
      EXPECT_NEAR(std::abs(c - numeric.coefficient(m)), 0.0, 1e-12 * std::abs(c));
    }
  }
}

// Normal-ordered products and commutators against dense truncated-Fock
// matrices, on basis columns low enough that truncation is invisible.
TEST(DenseFockOracle, MonomialProducts) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> level(0, 5);
  for (int i = 0; i < 2000; ++i) {
    const Monomial l = random_monomial(rng, 3);
    const Monomial r = random_monomial(rng, 3);
    const auto psi = basis_state({level(rng), level(rng), level(rng)});
    const auto dense = apply_poly(Poly(l), apply_poly(Poly(r), psi));
    const auto engine = apply_poly(normal_order_product(l, r), psi);
    ASSERT_LE(relative_distance(engine, dense), 1e-9) << to_string(l) << " * " << to_string(r);
  }
}

TEST(DenseFockOracle, Commutators) {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> level(0, 5);
  for (int i = 0; i < 200; ++i) {
    const Poly a = random_polynomial(rng, 3, 6);
    const Poly b = random_polynomial(rng, 3, 6);
    const auto psi = basis_state({level(rng), level(rng), level(rng)});
    auto dense = apply_poly(a, apply_poly(b, psi));
    for (const auto& [basis, amp] : apply_poly(b, apply_poly(a, psi))) dense[basis] -= amp;
    ASSERT_LE(relative_distance(apply_poly(commutator(a, b), psi), dense), 1e-9);
  }
}

}  // namespace
