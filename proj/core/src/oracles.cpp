#include "triphoton/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

namespace triphoton::oracles {

using Complex = std::complex<double>;

SpdcOracleParams SpdcOracleParams::from_seed(double xi_abs, double n_in, double seed_phase) {
  if (!(xi_abs >= 0.0) || !(n_in >= 0.0)) throw std::invalid_argument("xi and N_in must be non-negative");
  return {xi_abs * std::sqrt(n_in), seed_phase};
}

double spdc_exact_S(const SpdcOracleParams& p) {
  if (!(p.r >= 0.0)) throw std::invalid_argument("squeezing parameter must be non-negative");
  return 4.0 * std::exp(-2.0 * p.r);
}

double spdc_crossing_photons(double xi_abs, double level) {
  if (!(xi_abs > 0.0) || !(level > 0.0) || !(level <= 4.0)) {
    throw std::invalid_argument("crossing needs xi > 0 and 0 < level <= 4");
  }
  const double r = 0.5 * std::log(4.0 / level);
  return (r / xi_abs) * (r / xi_abs);
}

namespace {

using Amplitudes = std::array<Complex, kNumModes>;

Amplitudes rhs(const Amplitudes& a) {
  const Complex minus_i(0.0, -1.0);
  return {minus_i * std::conj(a[1]) * std::conj(a[2]), minus_i * std::conj(a[2]) * std::conj(a[0]),
          minus_i * std::conj(a[0]) * std::conj(a[1])};
}

Amplitudes axpy(const Amplitudes& y, double h, const Amplitudes& k) {
  return {y[0] + h * k[0], y[1] + h * k[1], y[2] + h * k[2]};
}

Amplitudes rk4(Amplitudes y, double tau, int steps) {
  const double h = tau / steps;
  for (int s = 0; s < steps; ++s) {
    const Amplitudes k1 = rhs(y);
    const Amplitudes k2 = rhs(axpy(y, h / 2, k1));
    const Amplitudes k3 = rhs(axpy(y, h / 2, k2));
    const Amplitudes k4 = rhs(axpy(y, h, k3));
    for (std::size_t i = 0; i < kNumModes; ++i) y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return y;
}

}  // namespace

ClassicalField classical_meanfield(const ClassicalField& initial, double tau_final, const MeanFieldOptions& options) {
  if (options.steps < 1) throw std::invalid_argument("mean-field integration needs at least one step");
  const double span = tau_final - initial.tau;
  if (span == 0.0) return {initial.amplitudes, tau_final};

  int steps = options.steps;
  Amplitudes coarse = rk4(initial.amplitudes, span, steps);
  while (true) {
    if (steps > options.max_steps / 2) {
      throw StepLimitExceeded("mean-field integration did not converge within the step limit");
    }
    steps *= 2;
    const Amplitudes fine = rk4(initial.amplitudes, span, steps);
    double diff = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < kNumModes; ++i) {
      diff = std::max(diff, std::abs(fine[i] - coarse[i]));
      scale = std::max(scale, std::abs(fine[i]));
    }
    if (diff <= options.tolerance * std::max(scale, 1e-300)) return {fine, tau_final};
    coarse = fine;
  }
}

namespace {

/// Applies `op` (a_k or a_k^dag, truncated) to a state in the product basis.
std::vector<Complex> apply_ladder(const std::vector<Complex>& psi, int cutoff, std::size_t mode, bool raise) {
  std::vector<Complex> out(psi.size());
  const std::size_t c = static_cast<std::size_t>(cutoff);
  const std::size_t stride = mode == 0 ? c * c : (mode == 1 ? c : 1);
  for (std::size_t idx = 0; idx < psi.size(); ++idx) {
    const std::size_t n = (idx / stride) % c;
    if (raise) {
      if (n + 1 < c) out[idx + stride] += std::sqrt(static_cast<double>(n + 1)) * psi[idx];
    } else if (n > 0) {
      out[idx - stride] += std::sqrt(static_cast<double>(n)) * psi[idx];
    }
  }
  return out;
}

Complex inner(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(const std::vector<Complex>& a) { return std::sqrt(inner(a, a).real()); }

}  // namespace

FockMoments fock_oracle_expectations(const std::array<Complex, kNumModes>& alphas, double xi, int cutoff) {
  if (cutoff < 2) throw FockBudgetError("Fock cutoff must be at least 2");
  if (static_cast<long>(cutoff) * cutoff * cutoff > kMaxFockStates) {
    throw FockBudgetError("cutoff^3 exceeds the dense Fock-space budget");
  }
  const std::size_t c = static_cast<std::size_t>(cutoff);
  auto index = [c](std::size_t n1, std::size_t n2, std::size_t n3) { return (n1 * c + n2) * c + n3; };

  // Truncated single-mode coherent amplitudes.
  std::array<std::vector<Complex>, kNumModes> single;
  for (std::size_t k = 0; k < kNumModes; ++k) {
    single[k].resize(c);
    Complex term = std::exp(-0.5 * std::norm(alphas[k]));
    for (std::size_t n = 0; n < c; ++n) {
      single[k][n] = term;
      term *= alphas[k] / std::sqrt(static_cast<double>(n + 1));
    }
  }
  std::vector<Complex> psi(c * c * c);
  for (std::size_t n1 = 0; n1 < c; ++n1)
    for (std::size_t n2 = 0; n2 < c; ++n2)
      for (std::size_t n3 = 0; n3 < c; ++n3) psi[index(n1, n2, n3)] = single[0][n1] * single[1][n2] * single[2][n3];

  FockMoments out;
  const double n0 = norm(psi);
  for (auto& x : psi) x /= n0;
  out.initial_norm = norm(psi);

  // H~ only links (n1, n2, n3) to (n1 + 1, n2 + 1, n3 + 1): each chain with
  // fixed n1 - n2 and n1 - n3 is a real symmetric tridiagonal block.
  const long lc = static_cast<long>(cutoff);
  for (long d12 = -(lc - 1); d12 < lc; ++d12) {
    for (long d13 = -(lc - 1); d13 < lc; ++d13) {
      std::vector<std::size_t> chain;
      for (long n1 = std::max({0L, d12, d13}); n1 < lc; ++n1) {
        const long n2 = n1 - d12, n3 = n1 - d13;
        if (n2 >= lc || n3 >= lc) break;
        chain.push_back(index(static_cast<std::size_t>(n1), static_cast<std::size_t>(n2), static_cast<std::size_t>(n3)));
      }
      if (chain.size() < 2) continue;
      const long len = static_cast<long>(chain.size());
      const long n1_start = std::max({0L, d12, d13});
      Eigen::MatrixXd h = Eigen::MatrixXd::Zero(len, len);
      for (long i = 0; i + 1 < len; ++i) {
        const double n1 = static_cast<double>(n1_start + i);
        const double n2 = n1 - static_cast<double>(d12), n3 = n1 - static_cast<double>(d13);
        h(i + 1, i) = h(i, i + 1) = std::sqrt((n1 + 1) * (n2 + 1) * (n3 + 1));
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h);
      const Eigen::MatrixXcd vecs = eig.eigenvectors().cast<Complex>();
      Eigen::VectorXcd block(len);
      for (long i = 0; i < len; ++i) block(i) = psi[chain[static_cast<std::size_t>(i)]];
      Eigen::VectorXcd phases(len);
      for (long i = 0; i < len; ++i) phases(i) = std::exp(Complex(0.0, -xi * eig.eigenvalues()(i)));
      const Eigen::VectorXcd evolved = vecs * phases.asDiagonal() * (vecs.adjoint() * block);
      for (long i = 0; i < len; ++i) psi[chain[static_cast<std::size_t>(i)]] = evolved(i);
    }
  }
  out.final_norm = norm(psi);

  double edge = 0.0;
  for (std::size_t n1 = 0; n1 < c; ++n1)
    for (std::size_t n2 = 0; n2 < c; ++n2)
      for (std::size_t n3 = 0; n3 < c; ++n3)
        if (n1 + 1 == c || n2 + 1 == c || n3 + 1 == c) edge += std::norm(psi[index(n1, n2, n3)]);
  out.edge_population = edge;
  if (edge > kMaxEdgePopulation) {
    throw FockTruncationError("population at the Fock cutoff is " + std::to_string(edge));
  }

  std::array<std::vector<Complex>, kNumModes> lowered, raised;
  for (std::size_t k = 0; k < kNumModes; ++k) {
    lowered[k] = apply_ladder(psi, cutoff, k, false);
    raised[k] = apply_ladder(psi, cutoff, k, true);
    out.mean[k] = inner(psi, lowered[k]);
  }
  for (std::size_t k = 0; k < kNumModes; ++k) {
    for (std::size_t m = 0; m < kNumModes; ++m) {
      out.aa[k][m] = inner(raised[k], lowered[m]);
      out.ad[k][m] = inner(raised[k], raised[m]);
      out.da[k][m] = inner(lowered[k], lowered[m]);
      out.dd[k][m] = inner(lowered[k], raised[m]);
    }
  }
  return out;
}

double FockMoments::quadrature_mean(const moments::QuadratureSpec& q, moments::Quadrature kind) const noexcept {
  const Complex x = moments::quadrature_weight(q.theta, kind);
  return 2.0 * (x * mean[slot(q.mode)]).real();
}

double FockMoments::quadrature_covariance(const moments::QuadratureSpec& qx, moments::Quadrature kx,
                                          const moments::QuadratureSpec& qy, moments::Quadrature ky) const noexcept {
  const Complex x = moments::quadrature_weight(qx.theta, kx);
  const Complex y = moments::quadrature_weight(qy.theta, ky);
  const std::size_t k = slot(qx.mode), m = slot(qy.mode);
  auto ordered = [&](Complex u, std::size_t i, Complex v, std::size_t j) {
    return u * v * aa[i][j] + u * std::conj(v) * ad[i][j] + std::conj(u) * v * da[i][j] +
           std::conj(u) * std::conj(v) * dd[i][j];
  };
  const double second = 0.5 * (ordered(x, k, y, m) + ordered(y, m, x, k)).real();
  return second - quadrature_mean(qx, kx) * quadrature_mean(qy, ky);
}

}  // namespace triphoton::oracles
