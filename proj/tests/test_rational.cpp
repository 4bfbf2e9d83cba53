#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "daehee/rational.hpp"

using namespace daehee;

namespace {

std::mt19937 rng(20240517);

Rational random_rational(long max_num = 50, long max_den = 30) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

Rational random_nonzero(long max_num = 50, long max_den = 30) {
  for (;;) {
    Rational r = random_rational(max_num, max_den);
    if (!r.is_zero()) return r;
  }
}

}  // namespace

TEST_CASE("arithmetic basics") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 3) - Rational(2, 3) == Rational(0));
  CHECK(Rational(-3, 2) * Rational(-2, 3) == Rational(1));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("canonical form is maintained") {
  CHECK(Rational(2, 6).num() == 1);
  CHECK(Rational(2, 6).den() == 3);
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational(0, 7).to_string() == "0");

  for (int i = 0; i < 500; ++i) {
    const Rational a = random_rational();
    const Rational b = random_rational();
    for (const Rational& r : {a + b, a - b, a * b}) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
      CHECK(g == 1);
      CHECK(r.den() >= 1);
    }
  }
}

TEST_CASE("text rendering") {
  CHECK(Rational(-3, 2).to_string() == "-3/2");
  CHECK(Rational(7).to_string() == "7");
  CHECK(Rational(0).to_string() == "0");
  CHECK(Rational(4, 2).to_string() == "2");
}

TEST_CASE("parsing accepts the canonical grammar only") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/2") == Rational(-3, 2));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational::parse("2/6") == Rational(1, 3));
  CHECK(Rational::parse("-0") == Rational(0));

  CHECK_FALSE(Rational::parse("").has_value());
  CHECK_FALSE(Rational::parse("-").has_value());
  CHECK_FALSE(Rational::parse("+3").has_value());
  CHECK_FALSE(Rational::parse(" 1").has_value());
  CHECK_FALSE(Rational::parse("1 ").has_value());
  CHECK_FALSE(Rational::parse("1/").has_value());
  CHECK_FALSE(Rational::parse("1//2").has_value());
  CHECK_FALSE(Rational::parse("1/-2").has_value());
  CHECK_FALSE(Rational::parse("1/0").has_value());
  CHECK_FALSE(Rational::parse("a").has_value());
  CHECK_FALSE(Rational::parse("1.5").has_value());
}

TEST_CASE("round trip through text") {
  for (int i = 0; i < 200; ++i) {
    const Rational r = random_rational(1000, 997);
    const auto back = Rational::parse(r.to_string());
    REQUIRE(back.has_value());
    CHECK(*back == r);
  }
}

TEST_CASE("p-adic valuation") {
  CHECK(padic_valuation(Rational(9, 2), 3) == Valuation(2));
  CHECK(padic_valuation(Rational(3, 4), 2) == Valuation(-2));
  CHECK(padic_valuation(Rational(0), 5).is_infinity());
  CHECK(padic_valuation(Rational(1), 7) == Valuation(0));
  CHECK_THROWS_AS(padic_valuation(Rational(1), 4), std::invalid_argument);
  CHECK_THROWS_AS(padic_valuation(Rational(1), 1), std::invalid_argument);
  CHECK_THROWS_AS(padic_valuation(Rational(1), 0), std::invalid_argument);
}

TEST_CASE("valuation ordering and rendering") {
  CHECK(Valuation::infinity() > Valuation(1000));
  CHECK(Valuation(2) < Valuation(3));
  CHECK(Valuation(-2) < Valuation(0));
  CHECK(Valuation::infinity() == Valuation::infinity());
  CHECK(Valuation(3).to_string() == "3");
  CHECK(Valuation(-2).to_string() == "-2");
  CHECK(Valuation::infinity().to_string() == "inf");
  CHECK_THROWS_AS(Valuation::infinity().value(), std::logic_error);
}

TEST_CASE("valuation additivity and ultrametric inequality") {
  const unsigned long primes[] = {2, 3, 5, 7};
  for (int i = 0; i < 300; ++i) {
    const Rational a = random_nonzero();
    const Rational b = random_nonzero();
    for (unsigned long p : primes) {
      CHECK(padic_valuation(a * b, p).value() ==
            padic_valuation(a, p).value() + padic_valuation(b, p).value());
      const Rational s = a + b;
      if (!s.is_zero()) {
        CHECK(padic_valuation(s, p) >=
              std::min(padic_valuation(a, p), padic_valuation(b, p)));
      }
    }
  }
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
  CHECK(binomial(Rational(5), 2) == Rational(10));
  CHECK(binomial(Rational(-1), 3) == Rational(-1));
  CHECK(binomial(Rational(22, 7), 0) == Rational(1));

  // Pascal-type recurrence for generalized arguments.
  for (int i = 0; i < 100; ++i) {
    const Rational x = random_rational();
    std::uniform_int_distribution<unsigned long> pick_n(1, 12);
    const unsigned long n = pick_n(rng);
    CHECK(binomial(x, n) ==
          binomial(x - Rational(1), n - 1) + binomial(x - Rational(1), n));
  }
}

TEST_CASE("falling and rising factorials") {
  CHECK(falling_factorial(Rational(1, 2), 2) == Rational(-1, 4));
  CHECK(falling_factorial(Rational(3), 3) == Rational(6));
  CHECK(falling_factorial(Rational(5), 0) == Rational(1));
  CHECK(rising_factorial(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(rising_factorial(Rational(1), 4) == Rational(24));
  CHECK(rising_factorial(Rational(-7, 3), 0) == Rational(1));

  // rising(x, n) = (-1)^n falling(-x, n)
  for (int i = 0; i < 100; ++i) {
    const Rational x = random_rational();
    std::uniform_int_distribution<unsigned long> pick_n(0, 20);
    const unsigned long n = pick_n(rng);
    const Rational sign(n % 2 == 0 ? 1 : -1);
    CHECK(rising_factorial(x, n) == sign * falling_factorial(-x, n));
  }
}

TEST_CASE("rational power with 0^0 = 1") {
  CHECK(pow(Rational(0), 0) == Rational(1));
  CHECK(pow(Rational(0), 3) == Rational(0));
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
}

TEST_CASE("primality by trial division") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  CHECK_FALSE(is_prime(91));
}
