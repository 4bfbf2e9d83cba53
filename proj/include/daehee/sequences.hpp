#pragma once

#include <cstddef>
#include <vector>

#include "daehee/series.hpp"

namespace daehee {

enum class TriangleKind { Stirling1Signed, Stirling2 };

/// Lower-triangular table of exact integers (stored as Rational); row n
/// holds the entries for l = 0..n.
class Triangle {
public:
  Triangle(TriangleKind kind, std::vector<std::vector<Rational>> rows);

  TriangleKind kind() const { return kind_; }
  std::size_t n_max() const { return rows_.size() - 1; }
  const Rational& at(std::size_t n, std::size_t l) const;
  const std::vector<Rational>& row(std::size_t n) const;

private:
  TriangleKind kind_;
  std::vector<std::vector<Rational>> rows_;
};

enum class SequenceKind { Daehee, Daehee2, Bernoulli };

/// One value per index n = 0..n_max.
class SequenceTable {
public:
  SequenceTable(SequenceKind kind, std::vector<Rational> values);

  SequenceKind kind() const { return kind_; }
  std::size_t n_max() const { return values_.size() - 1; }
  const Rational& at(std::size_t n) const;
  const std::vector<Rational>& values() const { return values_; }

private:
  SequenceKind kind_;
  std::vector<Rational> values_;
};

/// Signed Stirling numbers of the first kind, the coefficients of the
/// falling factorial: (x)_n = sum_l S1(n,l) x^l.
Triangle stirling1(std::size_t n_max);

/// Stirling numbers of the second kind (set-partition counts).
Triangle stirling2(std::size_t n_max);

/// B_0..B_{n_max} from the series t/(e^t - 1); B_1 = -1/2.
SequenceTable bernoulli_numbers(std::size_t n_max);

/// EGF coefficients of log(1+t)/t.
SequenceTable daehee_numbers(std::size_t n_max);

/// EGF coefficients of (1+t) log(1+t)/t.
SequenceTable daehee2_numbers(std::size_t n_max);

Rational bernoulli_poly(std::size_t n, const Rational& x);
/// Same, reusing a precomputed Bernoulli table (n <= table.n_max()).
Rational bernoulli_poly(std::size_t n, const Rational& x, const SequenceTable& bernoulli);

/// Bernoulli polynomial of integer order alpha: the n-th EGF coefficient of
/// (t/(e^t-1))^alpha e^{xt}. Negative orders are allowed.
Rational bernoulli_higher(std::size_t n, long alpha, const Rational& x);

/// n-th EGF coefficient of (log(1+t)/t) (1+t)^x.
Rational daehee_poly(std::size_t n, const Rational& x);

/// n-th EGF coefficient of ((1+t) log(1+t)/t) (1+t)^{-x}.
Rational daehee2_poly(std::size_t n, const Rational& x);

/// All values daehee_poly(n, x) for n = 0..n_max from one series product.
std::vector<Rational> daehee_poly_table(std::size_t n_max, const Rational& x);
std::vector<Rational> daehee2_poly_table(std::size_t n_max, const Rational& x);

/// log(1+t)/t at the given order.
TruncatedSeries daehee_gf(std::size_t order);

/// (1+t) log(1+t)/t at the given order.
TruncatedSeries daehee2_gf(std::size_t order);

/// t/(e^t - 1) at the given order (a unit series).
TruncatedSeries bernoulli_gf(std::size_t order);

}  // namespace daehee
