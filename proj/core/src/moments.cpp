#include "triphoton/moments.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace triphoton::moments {

using algebra::Monomial;

namespace {

using Complex = std::complex<double>;

/// powers[k][p] = alpha_k^p and conj(alpha_k)^p up to the largest exponent in `a`.
struct AmplitudePowers {
  std::array<std::vector<Complex>, kNumModes> plain;
  std::array<std::vector<Complex>, kNumModes> dagger;

  AmplitudePowers(const SeedState& seed, int max_exponent) {
    for (std::size_t k = 0; k < kNumModes; ++k) {
      plain[k].assign(static_cast<std::size_t>(max_exponent) + 1, Complex(1.0));
      dagger[k].assign(static_cast<std::size_t>(max_exponent) + 1, Complex(1.0));
      for (int p = 1; p <= max_exponent; ++p) {
        plain[k][p] = plain[k][p - 1] * seed.alphas[k];
        dagger[k][p] = dagger[k][p - 1] * std::conj(seed.alphas[k]);
      }
    }
  }
};

int max_exponent(const OperatorPolynomial& a) {
  int best = 0;
  for (const auto& [m, c] : a.terms()) best = std::max(best, m.max_exponent());
  return best;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

Complex coherent_expectation(const OperatorPolynomial& a, const SeedState& seed) {
  const AmplitudePowers pw(seed, max_exponent(a));
  Complex sum{};
  for (const auto& [m, c] : a.terms()) {
    Complex t = c;
    for (std::size_t k = 0; k < kNumModes; ++k) t *= pw.dagger[k][m.dagger[k]] * pw.plain[k][m.plain[k]];
    sum += t;
  }
  return sum;
}

OperatorPolynomial displace(const OperatorPolynomial& a, const SeedState& seed) {
  if (seed.is_vacuum()) return a;
  const AmplitudePowers pw(seed, max_exponent(a));
  OperatorPolynomial out;
  // (conj(alpha) + b^dag)^m (alpha + b)^n expanded per mode; the b^dag
  // factors stay left of the b factors, so every word is normal ordered.
  struct Factor {
    int dag, pl;
    Complex w;
  };
  std::array<std::vector<Factor>, kNumModes> per_mode;
  for (const auto& [m, c] : a.terms()) {
    for (std::size_t k = 0; k < kNumModes; ++k) {
      auto& f = per_mode[k];
      f.clear();
      const int md = m.dagger[k], mp = m.plain[k];
      for (int i = 0; i <= md; ++i) {
        const Complex wd = binomial(md, i) * pw.dagger[k][md - i];
        if (wd == Complex{}) continue;
        for (int j = 0; j <= mp; ++j) {
          const Complex w = wd * binomial(mp, j) * pw.plain[k][mp - j];
          if (w != Complex{}) f.push_back({i, j, w});
        }
      }
    }
    for (const auto& f0 : per_mode[0]) {
      for (const auto& f1 : per_mode[1]) {
        const Complex w01 = c * f0.w * f1.w;
        for (const auto& f2 : per_mode[2]) {
          Monomial word;
          word.dagger = {static_cast<std::uint8_t>(f0.dag), static_cast<std::uint8_t>(f1.dag),
                         static_cast<std::uint8_t>(f2.dag)};
          word.plain = {static_cast<std::uint8_t>(f0.pl), static_cast<std::uint8_t>(f1.pl),
                        static_cast<std::uint8_t>(f2.pl)};
          out.add_term(word, w01 * f2.w);
        }
      }
    }
  }
  return out;
}

OperatorPolynomial fluctuation(const OperatorPolynomial& a, const SeedState& seed) {
  OperatorPolynomial d = displace(a, seed);
  d.erase(Monomial::identity());
  return d;
}

Complex vacuum_pairing(const OperatorPolynomial& left, const OperatorPolynomial& right) {
  // Creation-only words of `right`, looked up by exponent.
  std::map<std::array<std::uint8_t, kNumModes>, Complex> raising;
  for (const auto& [m, c] : right.terms()) {
    if (m.plain == std::array<std::uint8_t, kNumModes>{}) raising.emplace(m.dagger, c);
  }
  Complex sum{};
  for (const auto& [m, c] : left.terms()) {
    if (m.dagger != std::array<std::uint8_t, kNumModes>{}) continue;
    auto it = raising.find(m.plain);
    if (it == raising.end()) continue;
    double weight = 1.0;
    for (std::size_t k = 0; k < kNumModes; ++k) weight *= factorial(m.plain[k]);
    sum += c * it->second * weight;
  }
  return sum;
}

double photon_number(const OperatorPolynomial& a, const SeedState& seed) {
  const OperatorPolynomial d = displace(a, seed);
  const Complex mean = d.constant_term();
  OperatorPolynomial fl = d;
  fl.erase(Monomial::identity());
  return std::norm(mean) + vacuum_pairing(algebra::adjoint(fl), fl).real();
}

double commutator_expectation(const OperatorPolynomial& a, const SeedState& seed) {
  const OperatorPolynomial fl = fluctuation(a, seed);
  const OperatorPolynomial fl_dag = algebra::adjoint(fl);
  return (vacuum_pairing(fl, fl_dag) - vacuum_pairing(fl_dag, fl)).real();
}

double wrap_phase(double theta) noexcept {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double t = std::fmod(theta, two_pi);
  if (t < 0.0) t += two_pi;
  return t == two_pi ? 0.0 : t;
}

Complex quadrature_weight(double theta, Quadrature kind) noexcept {
  const double c = std::cos(theta), s = std::sin(theta);
  // i e^{i theta} = -sin + i cos, kept exact at theta = 0.
  return kind == Quadrature::P ? Complex(c, s) : Complex(-s, c);
}

OperatorPolynomial quadrature_poly(const EvolvedMode& mode, double theta, Quadrature kind) {
  const Complex x = quadrature_weight(theta, kind);
  return mode.poly * x + algebra::adjoint(mode.poly) * std::conj(x);
}

bool is_hermitian(const OperatorPolynomial& x, double rel_tol) {
  for (const auto& [m, c] : x.terms()) {
    const Complex partner = x.coefficient(m.adjoint());
    const double scale = std::max(std::abs(c), std::abs(partner));
    if (std::abs(c - std::conj(partner)) > rel_tol * scale) return false;
  }
  return true;
}

MeanVariance mean_variance(const OperatorPolynomial& x, const SeedState& seed) {
  if (!is_hermitian(x)) throw NonHermitianError("mean_variance requires a Hermitian operator");
  OperatorPolynomial d = displace(x, seed);
  const Complex mean = d.constant_term();
  if (std::abs(mean.imag()) > kImaginaryTolerance) {
    throw NonHermitianError("expectation has a non-negligible imaginary part");
  }
  d.erase(Monomial::identity());
  const double variance = vacuum_pairing(d, d).real();
  return {mean.real(), variance};
}

double sym_covariance(const OperatorPolynomial& x, const OperatorPolynomial& y, const SeedState& seed) {
  if (!is_hermitian(x) || !is_hermitian(y)) {
    throw NonHermitianError("sym_covariance requires Hermitian operators");
  }
  const OperatorPolynomial dx = fluctuation(x, seed);
  const OperatorPolynomial dy = fluctuation(y, seed);
  return 0.5 * (vacuum_pairing(dx, dy) + vacuum_pairing(dy, dx)).real();
}

double variance_by_product(const OperatorPolynomial& x, const SeedState& seed, int cap) {
  const OperatorPolynomial dx = fluctuation(x, seed);
  return algebra::multiply(dx, dx, cap).constant_term().real();
}

ModeMoments::ModeMoments(std::span<const EvolvedMode, kNumModes> modes, const SeedState& seed) {
  std::array<OperatorPolynomial, kNumModes> fl, fl_dag;
  for (std::size_t k = 0; k < kNumModes; ++k) {
    OperatorPolynomial d = displace(modes[k].poly, seed);
    means_[k] = d.constant_term();
    d.erase(Monomial::identity());
    fl_dag[k] = algebra::adjoint(d);
    fl[k] = std::move(d);
  }
  for (std::size_t k = 0; k < kNumModes; ++k) {
    for (std::size_t m = 0; m < kNumModes; ++m) {
      aa_[k][m] = vacuum_pairing(fl[k], fl[m]);
      ad_[k][m] = vacuum_pairing(fl[k], fl_dag[m]);
      da_[k][m] = vacuum_pairing(fl_dag[k], fl[m]);
      dd_[k][m] = vacuum_pairing(fl_dag[k], fl_dag[m]);
    }
  }
}

double ModeMoments::photon_number(Mode k) const noexcept {
  const std::size_t s = slot(k);
  return std::norm(means_[s]) + da_[s][s].real();
}

double ModeMoments::quadrature_mean(const QuadratureSpec& q, Quadrature kind) const noexcept {
  const Complex x = quadrature_weight(q.theta, kind);
  return 2.0 * (x * means_[slot(q.mode)]).real();
}

double ModeMoments::quadrature_covariance(const QuadratureSpec& qx, Quadrature kx, const QuadratureSpec& qy,
                                          Quadrature ky) const noexcept {
  const Complex x = quadrature_weight(qx.theta, kx);
  const Complex y = quadrature_weight(qy.theta, ky);
  const std::size_t k = slot(qx.mode), m = slot(qy.mode);
  auto ordered = [&](Complex u, std::size_t i, Complex v, std::size_t j) {
    return u * v * aa_[i][j] + u * std::conj(v) * ad_[i][j] + std::conj(u) * v * da_[i][j] +
           std::conj(u) * std::conj(v) * dd_[i][j];
  };
  return 0.5 * (ordered(x, k, y, m) + ordered(y, m, x, k)).real();
}

}  // namespace triphoton::moments
