#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace daehee {

/// Exact rational scalar backed by arbitrary-precision integers.
///
/// Values are kept in canonical form at all times: gcd(|num|, den) = 1,
/// den >= 1, zero is 0/1. Instances are immutable value types; all
/// operations are pure and safe to run concurrently on distinct objects.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(static_cast<long int>(n)) {}
  Rational(long num, long den);
  Rational(mpz_class num, mpz_class den);
  static Rational from_integer(mpz_class n);

  /// Parses the canonical text form: optional leading '-', a digit run,
  /// optionally '/' followed by a positive digit run. Whitespace, '+',
  /// and zero denominators are rejected.
  static std::optional<Rational> parse(std::string_view text);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws std::domain_error when b is zero.
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  /// Canonical text: "a/b" with b >= 2, or just "a" when the denominator
  /// is 1; the sign sits on the numerator. This rendering is the wire
  /// format for all CLI output.
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

/// base^e with the empty-product convention 0^0 = 1.
Rational pow(const Rational& base, unsigned long e);

/// p-adic valuation value: an integer, or infinity exactly when the valued
/// rational is zero.
class Valuation {
public:
  explicit Valuation(long v) : v_(v) {}
  static Valuation infinity() { return Valuation(); }

  bool is_infinity() const { return !v_.has_value(); }
  /// Throws std::logic_error on the infinite valuation.
  long value() const;

  /// "inf" or the decimal value.
  std::string to_string() const;

  friend bool operator==(const Valuation& a, const Valuation& b) { return a.v_ == b.v_; }
  friend bool operator<(const Valuation& a, const Valuation& b);
  friend bool operator<=(const Valuation& a, const Valuation& b) { return a == b || a < b; }
  friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
  friend bool operator>=(const Valuation& a, const Valuation& b) { return b <= a; }

private:
  Valuation() = default;
  std::optional<long> v_;
};

/// Trial division; intended for the small primes the CLI admits.
bool is_prime(unsigned long p);

/// v_p(a) = v_p(num) - v_p(den); infinity for a = 0.
/// Throws std::invalid_argument when p is not prime.
Valuation padic_valuation(const Rational& a, unsigned long p);

mpz_class factorial(unsigned long n);

/// Generalized binomial coefficient x(x-1)...(x-n+1)/n!.
Rational binomial(const Rational& x, unsigned long n);

/// x(x-1)...(x-n+1); empty product for n = 0.
Rational falling_factorial(const Rational& x, unsigned long n);

/// x(x+1)...(x+n-1); satisfies rising(x,n) = (-1)^n falling(-x,n).
Rational rising_factorial(const Rational& x, unsigned long n);

}  // namespace daehee
