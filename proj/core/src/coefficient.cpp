#include "triphoton/algebra/coefficient.hpp"

#include <array>
#include <charconv>

namespace triphoton::algebra {

bool GaussianRational::is_gaussian_integer() const {
  return re_.get_den() == 1 && im_.get_den() == 1;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string to_string(const GaussianRational& c) {
  std::string out = "(" + c.real().get_str();
  if (sgn(c.imag()) >= 0) out += '+';
  out += c.imag().get_str() + "i)";
  return out;
}

namespace {

std::string shortest(double v) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

}  // namespace

std::string to_string(const std::complex<double>& c) {
  std::string out = "(" + shortest(c.real() == 0.0 ? 0.0 : c.real());
  const double im = c.imag() == 0.0 ? 0.0 : c.imag();
  if (!std::signbit(im)) out += '+';
  out += shortest(im) + "i)";
  return out;
}

}  // namespace triphoton::algebra

namespace triphoton::algebra {

GaussianRational CoefficientTraits<GaussianRational>::contraction_weight(int n, int m, int j) {
  mpz_class bn, bm, fj;
  mpz_bin_uiui(bn.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
  mpz_bin_uiui(bm.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(j));
  mpz_fac_ui(fj.get_mpz_t(), static_cast<unsigned long>(j));
  return {mpq_class(bn * bm * fj), mpq_class(0)};
}

namespace {

struct WeightTables {
  static constexpr int kSize = 256;
  std::array<std::array<double, kSize>, kSize> binom{};
  std::array<double, kSize> factorial{};

  WeightTables() {
    for (int n = 0; n < kSize; ++n) {
      binom[n][0] = 1.0;
      for (int j = 1; j <= n; ++j) binom[n][j] = binom[n - 1][j - 1] + (j < n ? binom[n - 1][j] : 0.0);
    }
    factorial[0] = 1.0;
    for (int j = 1; j < kSize; ++j) factorial[j] = factorial[j - 1] * j;
  }
};

const WeightTables& weight_tables() {
  static const WeightTables tables;
  return tables;
}

}  // namespace

std::complex<double> CoefficientTraits<std::complex<double>>::contraction_weight(int n, int m, int j) {
  const auto& t = weight_tables();
  return {t.binom[n][j] * t.binom[m][j] * t.factorial[j], 0.0};
}

}  // namespace triphoton::algebra
