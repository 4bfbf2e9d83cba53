#include "daehee/sequences.hpp"

#include <stdexcept>
#include <utility>

namespace daehee {

Triangle::Triangle(TriangleKind kind, std::vector<std::vector<Rational>> rows)
    : kind_(kind), rows_(std::move(rows)) {
  if (rows_.empty()) throw std::domain_error("triangle needs at least row 0");
}

const Rational& Triangle::at(std::size_t n, std::size_t l) const {
  return rows_.at(n).at(l);
}

const std::vector<Rational>& Triangle::row(std::size_t n) const { return rows_.at(n); }

SequenceTable::SequenceTable(SequenceKind kind, std::vector<Rational> values)
    : kind_(kind), values_(std::move(values)) {
  if (values_.empty()) throw std::domain_error("sequence table needs at least index 0");
}

const Rational& SequenceTable::at(std::size_t n) const { return values_.at(n); }

Triangle stirling1(std::size_t n_max) {
  std::vector<std::vector<Rational>> rows(n_max + 1);
  rows[0] = {Rational(1)};
  for (std::size_t n = 0; n < n_max; ++n) {
    // S1(n+1, l) = S1(n, l-1) - n * S1(n, l)
    std::vector<Rational> next(n + 2);
    Rational factor(static_cast<long>(n));
    for (std::size_t l = 0; l <= n + 1; ++l) {
      Rational v;
      if (l > 0) v += rows[n][l - 1];
      if (l <= n) v -= factor * rows[n][l];
      next[l] = v;
    }
    rows[n + 1] = std::move(next);
  }
  return Triangle(TriangleKind::Stirling1Signed, std::move(rows));
}

Triangle stirling2(std::size_t n_max) {
  std::vector<std::vector<Rational>> rows(n_max + 1);
  rows[0] = {Rational(1)};
  for (std::size_t n = 0; n < n_max; ++n) {
    // S2(n+1, l) = l * S2(n, l) + S2(n, l-1)
    std::vector<Rational> next(n + 2);
    for (std::size_t l = 0; l <= n + 1; ++l) {
      Rational v;
      if (l <= n) v += Rational(static_cast<long>(l)) * rows[n][l];
      if (l > 0) v += rows[n][l - 1];
      next[l] = v;
    }
    rows[n + 1] = std::move(next);
  }
  return Triangle(TriangleKind::Stirling2, std::move(rows));
}

TruncatedSeries daehee_gf(std::size_t order) {
  return log1p_series(order + 1).shift_down(1);
}

TruncatedSeries daehee2_gf(std::size_t order) {
  return one_plus_t(order) * daehee_gf(order);
}

TruncatedSeries bernoulli_gf(std::size_t order) {
  return expm1_series(order + 1).shift_down(1).inverse();
}

SequenceTable bernoulli_numbers(std::size_t n_max) {
  TruncatedSeries gf = bernoulli_gf(n_max);
  std::vector<Rational> values(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) values[n] = gf.egf_coeff(n);
  return SequenceTable(SequenceKind::Bernoulli, std::move(values));
}

SequenceTable daehee_numbers(std::size_t n_max) {
  TruncatedSeries gf = daehee_gf(n_max);
  std::vector<Rational> values(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) values[n] = gf.egf_coeff(n);
  return SequenceTable(SequenceKind::Daehee, std::move(values));
}

SequenceTable daehee2_numbers(std::size_t n_max) {
  TruncatedSeries gf = daehee2_gf(n_max);
  std::vector<Rational> values(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) values[n] = gf.egf_coeff(n);
  return SequenceTable(SequenceKind::Daehee2, std::move(values));
}

Rational bernoulli_poly(std::size_t n, const Rational& x) {
  return bernoulli_poly(n, x, bernoulli_numbers(n));
}

Rational bernoulli_poly(std::size_t n, const Rational& x, const SequenceTable& bernoulli) {
  // B_n(x) = sum_k binom(n,k) B_k x^{n-k}
  Rational acc;
  for (std::size_t k = 0; k <= n; ++k) {
    acc += binomial(Rational(static_cast<long>(n)), k) * bernoulli.at(k) *
           pow(x, static_cast<unsigned long>(n - k));
  }
  return acc;
}

Rational bernoulli_higher(std::size_t n, long alpha, const Rational& x) {
  TruncatedSeries gf = bernoulli_gf(n).pow(alpha) * exp_series(x, n);
  return gf.egf_coeff(n);
}

Rational daehee_poly(std::size_t n, const Rational& x) {
  return (daehee_gf(n) * binomial_pow_series(x, n)).egf_coeff(n);
}

Rational daehee2_poly(std::size_t n, const Rational& x) {
  return (daehee2_gf(n) * binomial_pow_series(-x, n)).egf_coeff(n);
}

std::vector<Rational> daehee_poly_table(std::size_t n_max, const Rational& x) {
  TruncatedSeries gf = daehee_gf(n_max) * binomial_pow_series(x, n_max);
  std::vector<Rational> values(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) values[n] = gf.egf_coeff(n);
  return values;
}

std::vector<Rational> daehee2_poly_table(std::size_t n_max, const Rational& x) {
  TruncatedSeries gf = daehee2_gf(n_max) * binomial_pow_series(-x, n_max);
  std::vector<Rational> values(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) values[n] = gf.egf_coeff(n);
  return values;
}

}  // namespace daehee
