#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <string>

#include "triphoton/algebra/coefficient.hpp"
#include "triphoton/algebra/monomial.hpp"

namespace triphoton::algebra {

/// Sparse linear combination of normal-ordered monomials.
///
/// Stored coefficients are never zero: exact coefficients are erased when
/// they cancel, numeric ones when their magnitude drops below
/// CoefficientTraits::kPruneBelow. Terms iterate in Monomial order, which
/// makes rendering and serialization deterministic.
template <Coefficient C>
class Polynomial {
 public:
  using coefficient_type = C;
  using container_type = std::map<Monomial, C>;

  Polynomial() = default;
  explicit Polynomial(const Monomial& m, const C& c = C(1)) { add_term(m, c); }

  static Polynomial constant(const C& c) { return Polynomial(Monomial::identity(), c); }

  const container_type& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  int degree() const noexcept {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  C coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C{} : it->second;
  }

  C constant_term() const { return coefficient(Monomial::identity()); }

  void add_term(const Monomial& m, const C& c) {
    if (CoefficientTraits<C>::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (CoefficientTraits<C>::is_zero(it->second)) terms_.erase(it);
    }
  }

  void erase(const Monomial& m) { terms_.erase(m); }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  Polynomial& operator*=(const C& s) {
    if (CoefficientTraits<C>::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= s;
      if (CoefficientTraits<C>::is_zero(it->second)) {
        it = terms_.erase(it);
      } else {
        ++it;
      }
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const C& s) { return a *= s; }
  friend Polynomial operator*(const C& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  container_type terms_;
};

using ExactPolynomial = Polynomial<GaussianRational>;
using OperatorPolynomial = Polynomial<std::complex<double>>;

namespace detail {

/// Adds scale * (left * right), normal ordered, into `out`.
///
/// Modes commute with each other, so the reordering factorizes per mode:
///   a^n (a^dag)^m = sum_j C(n,j) C(m,j) j! (a^dag)^(m-j) a^(n-j).
template <Coefficient C>
void accumulate_product(const Monomial& left, const Monomial& right, const C& scale, int cap,
                        Polynomial<C>& out) {
  using Traits = CoefficientTraits<C>;
  std::array<int, kNumModes> dag{}, pl{}, jmax{};
  for (std::size_t k = 0; k < kNumModes; ++k) {
    dag[k] = left.dagger[k] + right.dagger[k];
    pl[k] = left.plain[k] + right.plain[k];
    jmax[k] = std::min<int>(left.plain[k], right.dagger[k]);
    if (dag[k] > cap || pl[k] > cap) {
      throw DegreeOverflow("product exponent " + std::to_string(std::max(dag[k], pl[k])) +
                           " exceeds degree cap " + std::to_string(cap));
    }
  }
  for (int j0 = 0; j0 <= jmax[0]; ++j0) {
    const C w0 = Traits::contraction_weight(left.plain[0], right.dagger[0], j0);
    for (int j1 = 0; j1 <= jmax[1]; ++j1) {
      C w01 = w0;
      w01 *= Traits::contraction_weight(left.plain[1], right.dagger[1], j1);
      for (int j2 = 0; j2 <= jmax[2]; ++j2) {
        C w = w01;
        w *= Traits::contraction_weight(left.plain[2], right.dagger[2], j2);
        w *= scale;
        Monomial m;
        const std::array<int, kNumModes> j{j0, j1, j2};
        for (std::size_t k = 0; k < kNumModes; ++k) {
          m.dagger[k] = static_cast<std::uint8_t>(dag[k] - j[k]);
          m.plain[k] = static_cast<std::uint8_t>(pl[k] - j[k]);
        }
        out.add_term(m, w);
      }
    }
  }
}

}  // namespace detail

/// Normal-ordered expansion of the operator product left * right.
template <Coefficient C = GaussianRational>
Polynomial<C> normal_order_product(const Monomial& left, const Monomial& right,
                                   int cap = kDefaultDegreeCap) {
  Polynomial<C> out;
  detail::accumulate_product(left, right, C(1), cap, out);
  return out;
}

template <Coefficient C>
Polynomial<C> multiply(const Polynomial<C>& a, const Polynomial<C>& b, int cap = kDefaultDegreeCap) {
  Polynomial<C> out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      C scale = ca;
      scale *= cb;
      detail::accumulate_product(ma, mb, scale, cap, out);
    }
  }
  return out;
}

/// AB - BA.
template <Coefficient C>
Polynomial<C> commutator(const Polynomial<C>& a, const Polynomial<C>& b, int cap = kDefaultDegreeCap) {
  Polynomial<C> out = multiply(a, b, cap);
  out -= multiply(b, a, cap);
  return out;
}

/// Hermitian conjugate; conjugates coefficients and swaps exponent blocks.
template <Coefficient C>
Polynomial<C> adjoint(const Polynomial<C>& a) {
  Polynomial<C> out;
  for (const auto& [m, c] : a.terms()) out.add_term(m.adjoint(), CoefficientTraits<C>::conj(c));
  return out;
}

/// Relabels modes: mode k becomes perm[k].
template <Coefficient C>
Polynomial<C> permute_modes(const Polynomial<C>& a, const std::array<Mode, kNumModes>& perm) {
  Polynomial<C> out;
  for (const auto& [m, c] : a.terms()) out.add_term(m.permuted(perm), c);
  return out;
}

template <Coefficient C = GaussianRational>
Polynomial<C> creation(Mode m) {
  return Polynomial<C>(Monomial::creation(m));
}

template <Coefficient C = GaussianRational>
Polynomial<C> annihilation(Mode m) {
  return Polynomial<C>(Monomial::annihilation(m));
}

OperatorPolynomial to_numeric(const ExactPolynomial& p);

/// Debug rendering: terms in Monomial order joined by " + ", each as
/// "(re+imi)*word", e.g. "(-1+0i)*ad2*ad3". The zero polynomial renders as
/// "0" and a constant term as just its coefficient.
template <Coefficient C>
std::string to_string(const Polynomial<C>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c);
    if (!m.is_identity()) {
      out += '*';
      out += to_string(m);
    }
  }
  return out;
}

}  // namespace triphoton::algebra
