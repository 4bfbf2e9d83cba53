#include "daehee/volkenborn.hpp"

#include <utility>

#include "daehee/sequences.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace daehee {

namespace {

// Below this many terms the OpenMP fan-out costs more than it saves.
constexpr std::uint64_t kParallelCutoff = 1 << 14;

std::uint64_t level_terms_checked(unsigned long p, unsigned level, std::uint64_t budget) {
  if (!is_prime(p)) {
    throw std::invalid_argument("volkenborn: p = " + std::to_string(p) + " is not prime");
  }
  std::uint64_t terms = 1;
  for (unsigned i = 0; i < level; ++i) {
    if (terms > budget / p) throw BudgetExceededError(p, level, budget);
    terms *= p;
  }
  if (terms > budget) throw BudgetExceededError(p, level, budget);
  return terms;
}

// ---- integer-shift kernels: the whole loop stays in mpz ----

mpz_class eval_int(const Integrand& f, const mpz_class& s, unsigned long y) {
  mpz_class acc(1);
  switch (f.kind) {
    case IntegrandKind::Falling:
      for (unsigned i = 0; i < f.degree; ++i) acc *= s + y - i;
      return acc;
    case IntegrandKind::NegFalling:
      for (unsigned i = 0; i < f.degree; ++i) acc *= -s - y - i;
      return acc;
    case IntegrandKind::Monomial: {
      mpz_class base = s + y;
      mpz_pow_ui(acc.get_mpz_t(), base.get_mpz_t(), f.degree);
      return acc;
    }
  }
  return acc;
}

mpz_class sum_range_int(const Integrand& f, const mpz_class& s, unsigned long a, unsigned long b) {
  mpz_class total(0);
  if (a >= b) return total;
  if (f.kind == IntegrandKind::Monomial) {
    mpz_class term;
    for (unsigned long y = a; y < b; ++y) {
      mpz_class base = s + y;
      mpz_pow_ui(term.get_mpz_t(), base.get_mpz_t(), f.degree);
      total += term;
    }
    return total;
  }
  const long n = f.degree;
  mpz_class cur = eval_int(f, s, a);
  for (unsigned long y = a; y < b; ++y) {
    total += cur;
    if (y + 1 == b) break;
    if (f.kind == IntegrandKind::Falling) {
      // (v+1)_n = (v)_n * (v+1)/(v+1-n) with v = s+y, away from zeros
      mpz_class top = s + y + 1;
      mpz_class bottom = top - n;
      if (sgn(cur) == 0 || sgn(bottom) == 0) {
        cur = eval_int(f, s, y + 1);
      } else {
        cur *= top;
        mpz_divexact(cur.get_mpz_t(), cur.get_mpz_t(), bottom.get_mpz_t());
      }
    } else {
      // (u-1)_n = (u)_n * (u-n)/u with u = -s-y
      mpz_class u = -s - y;
      mpz_class top = u - n;
      if (sgn(cur) == 0 || sgn(u) == 0) {
        cur = eval_int(f, s, y + 1);
      } else {
        cur *= top;
        mpz_divexact(cur.get_mpz_t(), cur.get_mpz_t(), u.get_mpz_t());
      }
    }
  }
  return total;
}

// ---- general rational-shift kernels ----

Rational sum_range_rat(const Integrand& f, unsigned long a, unsigned long b) {
  Rational total;
  if (a >= b) return total;
  if (f.kind == IntegrandKind::Monomial) {
    for (unsigned long y = a; y < b; ++y) {
      total += pow(f.shift + Rational(static_cast<long>(y)), f.degree);
    }
    return total;
  }
  const Rational deg(static_cast<long>(f.degree));
  Rational cur = f.eval(Rational(static_cast<long>(a)));
  for (unsigned long y = a; y < b; ++y) {
    total += cur;
    if (y + 1 == b) break;
    const Rational ynext(static_cast<long>(y) + 1);
    if (f.kind == IntegrandKind::Falling) {
      Rational top = f.shift + ynext;
      Rational bottom = top - deg;
      if (cur.is_zero() || bottom.is_zero()) {
        cur = f.eval(ynext);
      } else {
        cur = cur * top / bottom;
      }
    } else {
      Rational u = -f.shift - Rational(static_cast<long>(y));
      Rational top = u - deg;
      if (cur.is_zero() || u.is_zero()) {
        cur = f.eval(ynext);
      } else {
        cur = cur * top / u;
      }
    }
  }
  return total;
}

Rational divide_by_power(mpz_class total, unsigned long p, unsigned level) {
  mpz_class denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), p, level);
  return Rational(std::move(total), std::move(denom));
}

Rational divide_by_power(const Rational& total, unsigned long p, unsigned level) {
  mpz_class denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), p, level);
  return total / Rational::from_integer(std::move(denom));
}

}  // namespace

Rational Integrand::eval(const Rational& y) const {
  switch (kind) {
    case IntegrandKind::Falling:
      return falling_factorial(shift + y, degree);
    case IntegrandKind::NegFalling:
      return falling_factorial(-shift - y, degree);
    case IntegrandKind::Monomial:
      return pow(shift + y, degree);
  }
  return Rational();
}

Integrand Integrand::translated() const { return Integrand{kind, degree, shift + Rational(1)}; }

Rational Integrand::derivative_at_zero() const {
  if (degree == 0) return Rational();
  if (kind == IntegrandKind::Monomial) {
    return Rational(static_cast<long>(degree)) * pow(shift, degree - 1);
  }
  // Factorial kinds expand as sum_l S1(n,l) (+-(x+y))^l; differentiate the
  // monomials and evaluate at y = 0.
  const Triangle s1 = stirling1(degree);
  const Rational base = kind == IntegrandKind::Falling ? shift : -shift;
  const Rational outer(kind == IntegrandKind::Falling ? 1 : -1);
  Rational acc;
  for (std::size_t l = 1; l <= degree; ++l) {
    acc += s1.at(degree, l) * Rational(static_cast<long>(l)) * pow(base, l - 1);
  }
  return outer * acc;
}

std::string Integrand::label() const {
  switch (kind) {
    case IntegrandKind::Falling:
      return "falling(n=" + std::to_string(degree) + ",x=" + shift.to_string() + ")";
    case IntegrandKind::NegFalling:
      return "neg-falling(n=" + std::to_string(degree) + ",x=" + shift.to_string() + ")";
    case IntegrandKind::Monomial:
      return "monomial(m=" + std::to_string(degree) + ",x=" + shift.to_string() + ")";
  }
  return {};
}

BudgetExceededError::BudgetExceededError(unsigned long p, unsigned level, std::uint64_t budget)
    : std::runtime_error("volkenborn level N=" + std::to_string(level) + " needs " +
                         std::to_string(p) + "^" + std::to_string(level) +
                         " terms, exceeding the budget of " + std::to_string(budget)),
      level_(level) {}

Rational volkenborn_partial_sum_serial(const Integrand& f, unsigned long p, unsigned level,
                                       std::uint64_t term_budget) {
  const std::uint64_t terms = level_terms_checked(p, level, term_budget);
  if (f.shift.is_integer()) {
    return divide_by_power(sum_range_int(f, f.shift.num(), 0, terms), p, level);
  }
  return divide_by_power(sum_range_rat(f, 0, terms), p, level);
}

Rational volkenborn_partial_sum(const Integrand& f, unsigned long p, unsigned level,
                                std::uint64_t term_budget) {
  const std::uint64_t terms = level_terms_checked(p, level, term_budget);
#ifdef _OPENMP
  if (terms >= kParallelCutoff) {
    const int chunks = omp_get_max_threads();
    const std::uint64_t stride = terms / chunks;
    if (f.shift.is_integer()) {
      const mpz_class& s = f.shift.num();
      std::vector<mpz_class> part(chunks);
#pragma omp parallel for schedule(static)
      for (int c = 0; c < chunks; ++c) {
        const std::uint64_t a = stride * c;
        const std::uint64_t b = (c == chunks - 1) ? terms : a + stride;
        part[c] = sum_range_int(f, s, a, b);
      }
      mpz_class total(0);
      for (const mpz_class& x : part) total += x;
      return divide_by_power(std::move(total), p, level);
    }
    std::vector<Rational> part(chunks);
#pragma omp parallel for schedule(static)
    for (int c = 0; c < chunks; ++c) {
      const std::uint64_t a = stride * c;
      const std::uint64_t b = (c == chunks - 1) ? terms : a + stride;
      part[c] = sum_range_rat(f, a, b);
    }
    Rational total;
    for (const Rational& x : part) total += x;
    return divide_by_power(total, p, level);
  }
#endif
  if (f.shift.is_integer()) {
    return divide_by_power(sum_range_int(f, f.shift.num(), 0, terms), p, level);
  }
  return divide_by_power(sum_range_rat(f, 0, terms), p, level);
}

VolkenbornReport convergence_report(const Integrand& f, unsigned long p, unsigned level_min,
                                    unsigned level_max, const Rational& exact_limit,
                                    std::uint64_t term_budget) {
  VolkenbornReport report;
  report.p = p;
  report.integrand = f;
  report.exact_limit = exact_limit;
  for (unsigned level = level_min; level <= level_max; ++level) {
    Rational sum = volkenborn_partial_sum(f, p, level, term_budget);
    Valuation v = padic_valuation(sum - exact_limit, p);
    report.levels.emplace_back(level, std::move(sum), v);
  }
  return report;
}

}  // namespace daehee
