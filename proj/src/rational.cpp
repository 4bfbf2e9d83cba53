#include "daehee/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace daehee {

namespace {

mpq_class make_canonical(mpz_class num, mpz_class den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  mpq_class q;
  q.get_num() = std::move(num);
  q.get_den() = std::move(den);
  q.canonicalize();  // also moves the sign onto the numerator
  return q;
}

}  // namespace

Rational::Rational(long num, long den) : q_(make_canonical(mpz_class(num), mpz_class(den))) {}

Rational::Rational(mpz_class num, mpz_class den)
    : q_(make_canonical(std::move(num), std::move(den))) {}

Rational Rational::from_integer(mpz_class n) {
  Rational r;
  r.q_ = mpq_class(std::move(n));
  return r;
}

std::optional<Rational> Rational::parse(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) return std::nullopt;
  mpz_class num(std::string(text.substr(0, i)), 10);
  mpz_class den(1);
  if (i < text.size()) {
    if (text[i] != '/') return std::nullopt;
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) return std::nullopt;
    den = mpz_class(std::string(text.substr(den_begin)), 10);
    if (sgn(den) == 0) return std::nullopt;
  }
  return Rational(std::move(num), std::move(den));
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

std::string Rational::to_string() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow(const Rational& base, unsigned long e) {
  Rational acc(1);
  Rational b = base;
  while (e > 0) {
    if (e & 1) acc *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return acc;
}

long Valuation::value() const {
  if (is_infinity()) throw std::logic_error("value() on the infinite valuation");
  return *v_;
}

std::string Valuation::to_string() const {
  return is_infinity() ? "inf" : std::to_string(*v_);
}

bool operator<(const Valuation& a, const Valuation& b) {
  if (a.is_infinity()) return false;
  if (b.is_infinity()) return true;
  return *a.v_ < *b.v_;
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Valuation padic_valuation(const Rational& a, unsigned long p) {
  if (!is_prime(p)) throw std::invalid_argument("padic_valuation: p = " + std::to_string(p) + " is not prime");
  if (a.is_zero()) return Valuation::infinity();
  mpz_class prime(static_cast<unsigned long>(p));
  mpz_class stripped;
  long v_num = static_cast<long>(mpz_remove(stripped.get_mpz_t(), a.num().get_mpz_t(), prime.get_mpz_t()));
  long v_den = static_cast<long>(mpz_remove(stripped.get_mpz_t(), a.den().get_mpz_t(), prime.get_mpz_t()));
  return Valuation(v_num - v_den);
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational binomial(const Rational& x, unsigned long n) {
  // Incremental (x-i)/(i+1) keeps intermediate values small.
  Rational acc(1);
  for (unsigned long i = 0; i < n; ++i) {
    acc *= x - Rational(static_cast<long>(i));
    acc /= Rational(static_cast<long>(i) + 1);
  }
  return acc;
}

Rational falling_factorial(const Rational& x, unsigned long n) {
  Rational acc(1);
  for (unsigned long i = 0; i < n; ++i) acc *= x - Rational(static_cast<long>(i));
  return acc;
}

Rational rising_factorial(const Rational& x, unsigned long n) {
  Rational acc(1);
  for (unsigned long i = 0; i < n; ++i) acc *= x + Rational(static_cast<long>(i));
  return acc;
}

}  // namespace daehee
