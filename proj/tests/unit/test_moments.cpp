#include <gtest/gtest.h>

#include <numbers>

#include "triphoton/evolution.hpp"
#include "triphoton/moments.hpp"

namespace {

using namespace triphoton;
using namespace triphoton::algebra;
using namespace triphoton::moments;
using evolution::EvolutionParams;
using evolution::EvolvedMode;

constexpr double kPi = std::numbers::pi;

OperatorPolynomial word(std::array<int, 3> d, std::array<int, 3> p) {
  return OperatorPolynomial(Monomial::make(d, p));
}

EvolvedMode free_mode(Mode k) {
  EvolutionParams p;
  p.xi = 0.0;
  return evolution::evolve_mode(k, p);
}

TEST(SeedState, Constructors) {
  const SeedState s = SeedState::single_seed(Mode::two, 4.0, kPi / 2);
  EXPECT_NEAR(s.alpha(Mode::two).imag(), 2.0, 1e-15);
  EXPECT_EQ(s.photons(Mode::one), 0.0);
  const SeedState f = SeedState::full_seed(9.0, 0.0);
  for (Mode k : kAllModes) EXPECT_EQ(f.alpha(k), std::complex<double>(3.0, 0.0));
  const SeedState d = SeedState::double_seed(1.0, kPi);
  EXPECT_TRUE(d.alpha(Mode::one) == 0.0);
  EXPECT_NEAR(d.alpha(Mode::three).real(), -1.0, 1e-15);
  EXPECT_TRUE(SeedState::vacuum().is_vacuum());
  EXPECT_THROW(SeedState::full_seed(-1.0, 0.0), std::invalid_argument);
}

TEST(CoherentExpectation, Examples) {
  SeedState s = SeedState::coherent({{{2.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}}});
  EXPECT_NEAR(coherent_expectation(word({1, 0, 0}, {1, 0, 0}), s).real(), 4.0, 1e-14);

  const ExactPolynomial a2a3 = ExactPolynomial(Monomial::make({}, {0, 1, 1}));
  const ExactPolynomial ad2ad3 = ExactPolynomial(Monomial::make({0, 1, 1}, {}));
  const auto ordered = to_numeric(multiply(a2a3, ad2ad3));
  EXPECT_NEAR(coherent_expectation(ordered, SeedState::vacuum()).real(), 1.0, 1e-15);

  s = SeedState::coherent({{{1.0, 1.0}, {0.0, 0.0}, {0.0, 0.0}}});
  const auto v = coherent_expectation(word({2, 0, 0}, {2, 0, 0}), s);
  EXPECT_NEAR(v.real(), 4.0, 1e-14);
  EXPECT_NEAR(v.imag(), 0.0, 1e-14);
}

TEST(QuadraturePoly, InputQuadratures) {
  const EvolvedMode m = free_mode(Mode::one);
  OperatorPolynomial p = word({1, 0, 0}, {}) + word({}, {1, 0, 0});
  const OperatorPolynomial got_p = quadrature_poly(m, 0.0, Quadrature::P);
  for (const auto& [mono, c] : p.terms()) EXPECT_NEAR(std::abs(got_p.coefficient(mono) - c), 0.0, 1e-15);
  EXPECT_EQ(got_p.size(), 2u);

  // q = i(a - a^dag)
  const OperatorPolynomial got_q = quadrature_poly(m, 0.0, Quadrature::Q);
  EXPECT_NEAR(std::abs(got_q.coefficient(Monomial::annihilation(Mode::one)) - std::complex<double>(0, 1)), 0.0,
              1e-15);
  EXPECT_NEAR(std::abs(got_q.coefficient(Monomial::creation(Mode::one)) - std::complex<double>(0, -1)), 0.0,
              1e-15);
  for (Quadrature kind : {Quadrature::P, Quadrature::Q}) {
    EXPECT_NEAR(mean_variance(quadrature_poly(m, 0.0, kind), SeedState::vacuum()).variance, 1.0, 1e-15);
  }
}

TEST(QuadraturePoly, HermitianForEvolvedModes) {
  EvolutionParams p;
  p.xi = {0.05, 0.02};
  for (Mode k : kAllModes) {
    const EvolvedMode m = evolution::evolve_mode(k, p);
    for (double theta : {0.0, 0.7, 2.0, 4.5}) {
      for (Quadrature kind : {Quadrature::P, Quadrature::Q}) EXPECT_TRUE(is_hermitian(quadrature_poly(m, theta, kind)));
    }
  }
}

TEST(QuadraturePoly, PhaseIsWrapped) {
  EXPECT_NEAR(wrap_phase(2 * kPi + 0.5), 0.5, 1e-15);
  EXPECT_NEAR(wrap_phase(-0.5), 2 * kPi - 0.5, 1e-15);
}

TEST(MeanVariance, ShotNoise) {
  const OperatorPolynomial p1 = word({1, 0, 0}, {}) + word({}, {1, 0, 0});
  auto mv = mean_variance(p1, SeedState::vacuum());
  EXPECT_NEAR(mv.mean, 0.0, 1e-15);
  EXPECT_NEAR(mv.variance, 1.0, 1e-15);
  mv = mean_variance(p1, SeedState::coherent({{{3.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}}}));
  EXPECT_NEAR(mv.mean, 6.0, 1e-14);
  EXPECT_NEAR(mv.variance, 1.0, 1e-12);
}

TEST(MeanVariance, RejectsNonHermitian) {
  EXPECT_THROW(mean_variance(word({1, 0, 0}, {}), SeedState::vacuum()), NonHermitianError);
}

TEST(MeanVariance, SuperPoissonianAtFullSeedPoint) {
  EvolutionParams p;
  const auto m = evolution::evolve_mode(Mode::one, p);
  const auto seed = SeedState::full_seed(4e10, kPi / 2);
  EXPECT_GT(mean_variance(quadrature_poly(m, 0.0, Quadrature::P), seed).variance, 1.0);
}

TEST(SymCovariance, Examples) {
  const OperatorPolynomial p1 = word({1, 0, 0}, {}) + word({}, {1, 0, 0});
  const OperatorPolynomial p2 = word({0, 1, 0}, {}) + word({}, {0, 1, 0});
  EXPECT_NEAR(sym_covariance(p1, p2, SeedState::vacuum()), 0.0, 1e-15);
  const auto seed = SeedState::coherent({{{0.4, -0.2}, {1.0, 0.0}, {0.0, 0.3}}});
  EXPECT_NEAR(sym_covariance(p1, p1, seed), mean_variance(p1, seed).variance, 1e-13);
}

TEST(SymCovariance, FluorescenceCrossTermsVanish) {
  EvolutionParams p;
  const auto modes = evolution::evolve_all(p);
  const ModeMoments mm(modes, SeedState::vacuum());
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t m = k + 1; m < 3; ++m) {
      for (Quadrature kind : {Quadrature::P, Quadrature::Q}) {
        const QuadratureSpec qk{mode_from_slot(k), 0.0}, qm{mode_from_slot(m), 0.0};
        EXPECT_LE(std::abs(mm.quadrature_covariance(qk, kind, qm, kind)), 1e-12);
        const auto xk = quadrature_poly(modes[k], 0.0, kind);
        const auto xm = quadrature_poly(modes[m], 0.0, kind);
        EXPECT_LE(std::abs(sym_covariance(xk, xm, SeedState::vacuum())), 1e-12);
      }
    }
  }
}

TEST(Variance, FreeFieldIsStateIndependent) {
  const auto seed = SeedState::coherent({{{5.0, 1.0}, {-3.0, 0.0}, {0.0, 2.0}}});
  for (Mode k : kAllModes) {
    for (double theta : {0.0, 1.0, 3.0}) {
      const auto x = quadrature_poly(free_mode(k), theta, Quadrature::Q);
      EXPECT_NEAR(mean_variance(x, seed).variance, 1.0, 1e-12);
      EXPECT_NEAR(variance_by_product(x, seed), 1.0, 1e-12);
    }
  }
}

TEST(Variance, BilinearityIdentity) {
  // <du^2> from the full square of u equals the weighted covariance sum.
  EvolutionParams p;
  p.xi = 0.03;
  const auto modes = evolution::evolve_all(p);
  const auto seed = SeedState::coherent({{{1.0, 2.0}, {-1.5, 0.5}, {0.3, -1.0}}});
  const std::array<double, 3> h{1.0, -0.6, 0.4}, thetas{0.2, 1.1, 2.9};
  OperatorPolynomial u;
  std::array<OperatorPolynomial, 3> q;
  for (std::size_t k = 0; k < 3; ++k) {
    q[k] = quadrature_poly(modes[k], thetas[k], Quadrature::Q);
    u += q[k] * std::complex<double>(h[k]);
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t m = 0; m < 3; ++m) sum += h[k] * h[m] * sym_covariance(q[k], q[m], seed);
  }
  const double direct = variance_by_product(u, seed, 16);
  EXPECT_NEAR(direct / sum, 1.0, 1e-10);
  EXPECT_NEAR(mean_variance(u, seed).variance / sum, 1.0, 1e-10);

  const ModeMoments mm(modes, seed);
  double quad = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t m = 0; m < 3; ++m) {
      quad += h[k] * h[m] *
              mm.quadrature_covariance({mode_from_slot(k), thetas[k]}, Quadrature::Q,
                                       {mode_from_slot(m), thetas[m]}, Quadrature::Q);
    }
  }
  EXPECT_NEAR(quad / sum, 1.0, 1e-10);
}

TEST(Variance, NonNegativeOnSeededStates) {
  EvolutionParams p;
  const auto modes = evolution::evolve_all(p);
  for (double n : {1e8, 1e10, 1e11}) {
    for (double phi : {0.0, kPi / 6, kPi / 2, 1.3}) {
      const ModeMoments mm(modes, SeedState::full_seed(n, phi));
      for (Mode k : kAllModes) {
        for (double theta = 0.0; theta < 2 * kPi; theta += 0.4) {
          EXPECT_GE(mm.quadrature_variance({k, theta}, Quadrature::P), -1e-9);
        }
      }
    }
  }
}

TEST(PhotonNumber, LargeSeedsKeepPrecision) {
  // The fluctuation frame keeps the spontaneous contribution visible on top
  // of a 1e11-photon mean.
  EvolutionParams p;
  p.xi = 0.0;
  const auto m = evolution::evolve_mode(Mode::one, p);
  const auto seed = SeedState::full_seed(1e11, 0.3);
  EXPECT_NEAR(photon_number(m.poly, seed) / 1e11, 1.0, 1e-14);
  EXPECT_NEAR(commutator_expectation(m.poly, seed), 1.0, 1e-14);
}

}  // namespace
