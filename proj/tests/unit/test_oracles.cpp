#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "triphoton/oracles.hpp"

namespace {

using namespace triphoton;
using namespace triphoton::oracles;

constexpr double kXi = 1.75e-6;

TEST(SpdcOracle, Anchors) {
  EXPECT_EQ(spdc_exact_S({0.0, 0.0}), 4.0);
  EXPECT_NEAR(spdc_exact_S({std::log(2.0) / 2, 0.0}), 2.0, 1e-15);
  const auto p = SpdcOracleParams::from_seed(kXi, 1e11);
  EXPECT_NEAR(p.r, 0.5534, 1e-4);
  EXPECT_NEAR(spdc_exact_S(p), 1.32, 5e-3);
  EXPECT_NEAR(spdc_crossing_photons(kXi) / 3.92e10, 1.0, 1e-3);
  EXPECT_THROW(spdc_exact_S({-0.1, 0.0}), std::invalid_argument);
}

TEST(SpdcOracle, MonotoneDecreasing) {
  double prev = spdc_exact_S({0.0, 0.0});
  for (double r = 0.05; r < 3.0; r += 0.05) {
    const double s = spdc_exact_S({r, 0.0});
    EXPECT_LT(s, prev);
    prev = s;
  }
}

ClassicalField symmetric_seed(double n, double phi) {
  const auto a = std::polar(std::sqrt(n), phi);
  return {{a, a, a}, 0.0};
}

TEST(MeanField, ZeroTimeIsIdentity) {
  const ClassicalField in = symmetric_seed(4.0, 0.3);
  const ClassicalField out = classical_meanfield(in, 0.0);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(out.amplitudes[k], in.amplitudes[k]);
}

TEST(MeanField, AmplifiesAtQuarterTurnAndDeamplifiesAtSixth) {
  const double tau = kXi;
  const double n = 4e10;
  const auto grow = classical_meanfield(symmetric_seed(n, std::numbers::pi / 2), tau);
  const auto shrink = classical_meanfield(symmetric_seed(n, std::numbers::pi / 6), tau);
  EXPECT_GT(std::norm(grow.amplitudes[0]), n);
  EXPECT_LT(std::norm(shrink.amplitudes[0]), n);

  // Growth is monotone over the early trajectory.
  double prev = n;
  for (int i = 1; i <= 10; ++i) {
    const double now = std::norm(classical_meanfield(symmetric_seed(n, std::numbers::pi / 2), tau * i / 10).amplitudes[0]);
    EXPECT_GT(now, prev);
    prev = now;
  }
}

TEST(MeanField, ManleyRoweInvariants) {
  const ClassicalField in{{{std::complex<double>(3.0, 1.0), std::complex<double>(-1.0, 2.0),
                            std::complex<double>(0.5, -0.5)}},
                          0.0};
  const double d12 = std::norm(in.amplitudes[0]) - std::norm(in.amplitudes[1]);
  const double d13 = std::norm(in.amplitudes[0]) - std::norm(in.amplitudes[2]);
  for (double tau : {0.01, 0.05, 0.1}) {
    const auto out = classical_meanfield(in, tau);
    EXPECT_NEAR(std::norm(out.amplitudes[0]) - std::norm(out.amplitudes[1]), d12, 1e-9);
    EXPECT_NEAR(std::norm(out.amplitudes[0]) - std::norm(out.amplitudes[2]), d13, 1e-9);
  }
}

TEST(MeanField, StepLimit) {
  MeanFieldOptions opt;
  opt.steps = 1000;
  opt.max_steps = 1000;
  opt.tolerance = 1e-30;
  EXPECT_THROW(classical_meanfield(symmetric_seed(4.0, 0.3), 0.2, opt), StepLimitExceeded);
}

TEST(FockOracle, ZeroCouplingReproducesCoherentMoments) {
  const std::array<std::complex<double>, 3> a{{{0.3, 0.1}, {0.0, 0.2}, {-0.25, 0.0}}};
  const auto m = fock_oracle_expectations(a, 0.0, 12);
  for (Mode k : kAllModes) {
    EXPECT_NEAR(std::abs(m.mean[slot(k)] - a[slot(k)]), 0.0, 1e-9);
    EXPECT_NEAR(m.photon_number(k), std::norm(a[slot(k)]), 1e-9);
    EXPECT_NEAR(m.quadrature_variance({k, 0.4}, moments::Quadrature::P), 1.0, 1e-9);
  }
}

TEST(FockOracle, VacuumSpontaneousEmission) {
  const auto m = fock_oracle_expectations({}, 0.01, 8);
  for (Mode k : kAllModes) EXPECT_NEAR(m.photon_number(k) / 1e-4, 1.0, 0.01);
}

TEST(FockOracle, Unitarity) {
  const std::array<std::complex<double>, 3> a{{{0.3, 0.0}, {0.0, 0.3}, {-0.3, 0.0}}};
  const auto m = fock_oracle_expectations(a, 0.01, 12);
  EXPECT_NEAR(m.final_norm, m.initial_norm, 1e-10);
  EXPECT_LT(m.edge_population, kMaxEdgePopulation);
}

TEST(FockOracle, Guards) {
  EXPECT_THROW(fock_oracle_expectations({}, 0.01, 21), FockBudgetError);
  const std::array<std::complex<double>, 3> big{{{2.0, 0.0}, {2.0, 0.0}, {2.0, 0.0}}};
  EXPECT_THROW(fock_oracle_expectations(big, 0.01, 6), FockTruncationError);
}

}  // namespace
