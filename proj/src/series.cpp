#include "daehee/series.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace daehee {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) {
    throw std::domain_error("series truncation orders differ: " + std::to_string(a.order()) +
                            " vs " + std::to_string(b.order()));
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::domain_error("series needs at least the constant coefficient");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const {
  if (new_order > order()) {
    throw std::domain_error("truncated() cannot extend a series beyond its known order");
  }
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  TruncatedSeries r(a.order());
  for (std::size_t k = 0; k <= a.order(); ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  TruncatedSeries r(a.order());
  for (std::size_t k = 0; k <= a.order(); ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  TruncatedSeries r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= a.order(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coeffs_[0].is_zero()) {
    throw std::domain_error("series inverse requires a nonzero constant term");
  }
  TruncatedSeries r(order());
  r.coeffs_[0] = Rational(1) / coeffs_[0];
  for (std::size_t k = 1; k <= order(); ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * r.coeffs_[k - j];
    r.coeffs_[k] = -acc / coeffs_[0];
  }
  return r;
}

TruncatedSeries TruncatedSeries::pow(long e) const {
  if (e == 0) return one(order());
  TruncatedSeries base = e < 0 ? inverse() : *this;
  // Negate via unsigned to survive e == LONG_MIN.
  unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  TruncatedSeries acc = one(order());
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

TruncatedSeries TruncatedSeries::shift_down(std::size_t k) const {
  if (k > order()) throw std::domain_error("shift_down past the truncation order");
  for (std::size_t j = 0; j < k; ++j) {
    if (!coeffs_[j].is_zero()) {
      throw std::domain_error("shift_down would drop the nonzero coefficient of t^" +
                              std::to_string(j));
    }
  }
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

Rational TruncatedSeries::egf_coeff(std::size_t n) const {
  if (n > order()) {
    throw std::out_of_range("egf_coeff index " + std::to_string(n) + " past truncation order " +
                            std::to_string(order()));
  }
  return Rational::from_integer(factorial(n)) * coeffs_[n];
}

TruncatedSeries log1p_series(std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t n = 1; n <= order; ++n) {
    c[n] = Rational(n % 2 == 1 ? 1 : -1, static_cast<long>(n));
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries expm1_series(std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t n = 1; n <= order; ++n) {
    c[n] = Rational(1) / Rational::from_integer(factorial(n));
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries exp_series(const Rational& x, std::size_t order) {
  std::vector<Rational> c(order + 1);
  c[0] = Rational(1);
  for (std::size_t n = 1; n <= order; ++n) {
    c[n] = c[n - 1] * x / Rational(static_cast<long>(n));
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries binomial_pow_series(const Rational& x, std::size_t order) {
  std::vector<Rational> c(order + 1);
  c[0] = Rational(1);
  for (std::size_t n = 1; n <= order; ++n) {
    c[n] = c[n - 1] * (x - Rational(static_cast<long>(n) - 1)) / Rational(static_cast<long>(n));
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries one_plus_t(std::size_t order) {
  std::vector<Rational> c(order + 1);
  c[0] = Rational(1);
  if (order >= 1) c[1] = Rational(1);
  return TruncatedSeries(std::move(c));
}

}  // namespace daehee
