#pragma once

// Dense truncated-Fock representation of ladder-operator words, used as an
// independent reference for the normal-ordering algebra.

#include <array>
#include <complex>
#include <map>

#include <Eigen/Dense>

#include "triphoton/algebra/polynomial.hpp"

namespace triphoton::testing {

inline constexpr int kFockCutoff = 12;

using DenseMatrix = Eigen::Matrix<std::complex<double>, kFockCutoff, kFockCutoff>;
using Basis = std::array<int, kNumModes>;
/// Sparse three-mode state vector in the number basis.
using FockVector = std::map<Basis, std::complex<double>>;

/// Single-mode annihilation operator truncated to kFockCutoff levels.
inline DenseMatrix annihilation_matrix() {
  DenseMatrix a = DenseMatrix::Zero();
  for (int n = 1; n < kFockCutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

/// (a^dag)^m a^n by repeated dense multiplication.
inline DenseMatrix word_matrix(int m, int n) {
  static const DenseMatrix a = annihilation_matrix();
  static const DenseMatrix ad = a.adjoint();
  DenseMatrix out = DenseMatrix::Identity();
  for (int i = 0; i < m; ++i) out = out * ad;
  for (int i = 0; i < n; ++i) out = out * a;
  return out;
}

/// Applies a polynomial to a state, one term and one mode at a time with the
/// dense single-mode matrices.
template <algebra::Coefficient C>
FockVector apply_poly(const algebra::Polynomial<C>& p, const FockVector& psi) {
  FockVector out;
  for (const auto& [mono, coeff] : p.terms()) {
    std::array<DenseMatrix, kNumModes> mats;
    for (std::size_t k = 0; k < kNumModes; ++k) mats[k] = word_matrix(mono.dagger[k], mono.plain[k]);
    const std::complex<double> c = algebra::CoefficientTraits<C>::to_complex(coeff);
    for (const auto& [basis, amp] : psi) {
      for (int j0 = 0; j0 < kFockCutoff; ++j0) {
        const auto m0 = mats[0](j0, basis[0]);
        if (m0 == 0.0) continue;
        for (int j1 = 0; j1 < kFockCutoff; ++j1) {
          const auto m1 = mats[1](j1, basis[1]);
          if (m1 == 0.0) continue;
          for (int j2 = 0; j2 < kFockCutoff; ++j2) {
            const auto m2 = mats[2](j2, basis[2]);
            if (m2 == 0.0) continue;
            out[{j0, j1, j2}] += c * amp * m0 * m1 * m2;
          }
        }
      }
    }
  }
  return out;
}

inline FockVector basis_state(const Basis& n) {
  FockVector v;
  v[n] = 1.0;
  return v;
}

/// max |x - y| / max(max |y|, floor).
inline double relative_distance(const FockVector& x, const FockVector& y, double floor = 1.0) {
  double diff = 0.0, scale = floor;
  auto visit = [&](const Basis& b) {
    const auto ix = x.find(b);
    const auto iy = y.find(b);
    const std::complex<double> vx = ix == x.end() ? 0.0 : ix->second;
    const std::complex<double> vy = iy == y.end() ? 0.0 : iy->second;
    diff = std::max(diff, std::abs(vx - vy));
    scale = std::max(scale, std::abs(vy));
  };
  for (const auto& [b, v] : x) visit(b);
  for (const auto& [b, v] : y) visit(b);
  return diff / scale;
}

}  // namespace triphoton::testing
