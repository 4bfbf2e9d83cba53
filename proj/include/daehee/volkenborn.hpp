#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "daehee/rational.hpp"

namespace daehee {

enum class IntegrandKind { Falling, NegFalling, Monomial };

/// Polynomial integrand for invariant-integral partial sums over the p-adic
/// integers, restricted to the three shapes every exact limit here needs:
///
///   Falling     y -> (x+y)(x+y-1)...(x+y-n+1)
///   NegFalling  y -> (-x-y)(-x-y-1)...(-x-y-n+1)
///   Monomial    y -> (x+y)^m
struct Integrand {
  IntegrandKind kind = IntegrandKind::Falling;
  unsigned degree = 0;
  Rational shift;

  Rational eval(const Rational& y) const;

  /// The translate y -> f(y+1).
  Integrand translated() const;

  /// d/dy f(y) at y = 0, computed symbolically from the signed-Stirling
  /// expansion of the factorial kinds (never by numeric differencing).
  Rational derivative_at_zero() const;

  /// Stable text form, e.g. "falling(n=2,x=0)".
  std::string label() const;
};

/// Default cap on p^N, keeping any single level's loop at desk scale.
inline constexpr std::uint64_t kDefaultTermBudget = 2'000'000;

class BudgetExceededError : public std::runtime_error {
public:
  BudgetExceededError(unsigned long p, unsigned level, std::uint64_t budget);
  unsigned level() const { return level_; }

private:
  unsigned level_;
};

/// Exact level-N Riemann-type sum (1/p^N) * sum_{y=0}^{p^N - 1} f(y).
/// Throws BudgetExceededError when p^N exceeds term_budget and
/// std::invalid_argument when p is not prime. Runs the OpenMP kernel when
/// available; results are bit-identical to the serial reference either way.
Rational volkenborn_partial_sum(const Integrand& f, unsigned long p, unsigned level,
                                std::uint64_t term_budget = kDefaultTermBudget);

/// Single-threaded reference kernel with the same contract; kept as the
/// comparison baseline for tests and benchmarks.
Rational volkenborn_partial_sum_serial(const Integrand& f, unsigned long p, unsigned level,
                                       std::uint64_t term_budget = kDefaultTermBudget);

struct LevelResult {
  unsigned level;
  Rational sum;
  Valuation error_valuation;

  LevelResult(unsigned level_, Rational sum_, Valuation ev)
      : level(level_), sum(std::move(sum_)), error_valuation(ev) {}
};

/// Per-level partial sums with the p-adic valuation of the error against the
/// exact limit supplied by the caller.
struct VolkenbornReport {
  unsigned long p = 0;
  Integrand integrand;
  Rational exact_limit;
  std::vector<LevelResult> levels;
};

VolkenbornReport convergence_report(const Integrand& f, unsigned long p, unsigned level_min,
                                    unsigned level_max, const Rational& exact_limit,
                                    std::uint64_t term_budget = kDefaultTermBudget);

}  // namespace daehee
