#pragma once

#include <cstddef>
#include <vector>

#include "daehee/rational.hpp"

namespace daehee {

/// Formal power series over Rational, truncated at a fixed order T:
/// exactly T+1 stored coefficients, index k holding the coefficient of t^k.
///
/// Series of different truncation orders never combine implicitly; mismatched
/// operands throw. Use truncated() when an order change is intended.
class TruncatedSeries {
public:
  /// Zero series of the given order.
  explicit TruncatedSeries(std::size_t order);
  /// Takes the coefficient list as-is; order = coeffs.size() - 1.
  explicit TruncatedSeries(std::vector<Rational> coeffs);
  static TruncatedSeries constant(const Rational& c, std::size_t order);
  static TruncatedSeries one(std::size_t order) { return constant(Rational(1), order); }

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Explicit re-truncation; new_order must not exceed order().
  TruncatedSeries truncated(std::size_t new_order) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  /// Cauchy product, truncated at the shared order.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  /// Integer power by binary exponentiation; e = 0 gives the constant 1,
  /// negative e inverts first (requires a nonzero constant term).
  TruncatedSeries pow(long e) const;

  /// Multiplicative inverse, solving the triangular convolution system
  /// coefficient by coefficient. Requires a nonzero constant term.
  TruncatedSeries inverse() const;

  /// Divides by t^k; the first k coefficients must be exactly zero.
  /// The result has order() - k.
  TruncatedSeries shift_down(std::size_t k) const;

  /// n! times the coefficient of t^n. Throws std::out_of_range past order().
  Rational egf_coeff(std::size_t n) const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

private:
  std::vector<Rational> coeffs_;
};

/// log(1+t): coefficient of t^n is (-1)^(n+1)/n for n >= 1, constant term 0.
TruncatedSeries log1p_series(std::size_t order);

/// e^t - 1: coefficient of t^n is 1/n! for n >= 1, constant term 0.
TruncatedSeries expm1_series(std::size_t order);

/// e^{xt}: coefficient of t^n is x^n/n!.
TruncatedSeries exp_series(const Rational& x, std::size_t order);

/// (1+t)^x as the binomial series: coefficient of t^n is binomial(x, n).
TruncatedSeries binomial_pow_series(const Rational& x, std::size_t order);

/// The polynomial 1 + t at the given order.
TruncatedSeries one_plus_t(std::size_t order);

}  // namespace daehee
