#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace triphoton::algebra {

/// Exact complex number with rational real and imaginary parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT: implicit from integers
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& real() const noexcept { return re_; }
  const mpq_class& imag() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_gaussian_integer() const;

  GaussianRational conj() const { return {re_, -im_}; }
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::string to_string(const GaussianRational& c);
std::string to_string(const std::complex<double>& c);

/// Per-coefficient-type hooks used by the polynomial templates.
///
/// contraction_weight(n, m, j) is the coefficient C(n,j) C(m,j) j! of the
/// term (a^dag)^(m-j) a^(n-j) in the single-mode reordering of a^n (a^dag)^m.
template <class C>
struct CoefficientTraits;

template <>
struct CoefficientTraits<GaussianRational> {
  static bool is_zero(const GaussianRational& c) { return c.is_zero(); }
  static GaussianRational conj(const GaussianRational& c) { return c.conj(); }
  static GaussianRational from_uint(std::uint64_t n) {
    return {mpq_class(static_cast<unsigned long>(n)), mpq_class(0)};
  }
  static GaussianRational contraction_weight(int n, int m, int j);
  static std::complex<double> to_complex(const GaussianRational& c) { return c.to_complex(); }
};

template <>
struct CoefficientTraits<std::complex<double>> {
  /// Numeric coefficients below this magnitude are dropped.
  static constexpr double kPruneBelow = 1e-300;
  static bool is_zero(const std::complex<double>& c) { return std::abs(c) < kPruneBelow; }
  static std::complex<double> conj(const std::complex<double>& c) { return std::conj(c); }
  static std::complex<double> from_uint(std::uint64_t n) { return {static_cast<double>(n), 0.0}; }
  static std::complex<double> contraction_weight(int n, int m, int j);
  static std::complex<double> to_complex(const std::complex<double>& c) { return c; }
};

template <class C>
concept Coefficient = requires(const C& a, C& b) {
  { CoefficientTraits<C>::is_zero(a) } -> std::convertible_to<bool>;
  { CoefficientTraits<C>::conj(a) } -> std::convertible_to<C>;
  { CoefficientTraits<C>::from_uint(std::uint64_t{1}) } -> std::convertible_to<C>;
  { CoefficientTraits<C>::contraction_weight(1, 1, 1) } -> std::convertible_to<C>;
  b += a;
  b -= a;
  b *= a;
};

}  // namespace triphoton::algebra
