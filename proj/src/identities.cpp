#include "daehee/identities.hpp"

#include <algorithm>
#include <stdexcept>

#include "daehee/sequences.hpp"
#include "daehee/series.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace daehee {

void IdentityCheck::record(const std::string& instance, const Rational& lhs, const Rational& rhs) {
  ++instances;
  if (lhs != rhs) failures.push_back({instance, lhs, rhs});
}

namespace {

std::string instance_n(std::size_t n) { return "n=" + std::to_string(n); }
std::string instance_m(std::size_t m) { return "m=" + std::to_string(m); }
std::string with_x(std::string base, const Rational& x) { return base + " x=" + x.to_string(); }

/// Everything the catalog entries share, computed once per verify call.
struct Context {
  unsigned n_max;
  std::vector<Rational> x_samples;
  std::size_t trunc;
  Triangle s1;
  Triangle s2;
  SequenceTable bernoulli;
  SequenceTable daehee;
  SequenceTable daehee2;

  Context(unsigned n_max_, std::vector<Rational> samples, std::size_t trunc_)
      : n_max(n_max_),
        x_samples(std::move(samples)),
        trunc(trunc_),
        s1(stirling1(n_max_)),
        s2(stirling2(n_max_)),
        bernoulli(bernoulli_numbers(n_max_)),
        daehee(daehee_numbers(n_max_)),
        daehee2(daehee2_numbers(n_max_)) {}
};

using CheckFn = void (*)(const Context&, IdentityCheck&);

// D_n = sum_l S1(n,l) B_l
void check_thm1_stirling(const Context& c, IdentityCheck& out) {
  for (std::size_t n = 0; n <= c.n_max; ++n) {
    Rational rhs;
    for (std::size_t l = 0; l <= n; ++l) rhs += c.s1.at(n, l) * c.bernoulli.at(l);
    out.record(instance_n(n), c.daehee.at(n), rhs);
  }
}

// D_n(x) = sum_l S1(n,l) B_l(x)
void check_cor3_stirling(const Context& c, IdentityCheck& out) {
  for (const Rational& x : c.x_samples) {
    const std::vector<Rational> dp = daehee_poly_table(c.n_max, x);
    for (std::size_t n = 0; n <= c.n_max; ++n) {
      Rational rhs;
      for (std::size_t l = 0; l <= n; ++l) {
        rhs += c.s1.at(n, l) * bernoulli_poly(l, x, c.bernoulli);
      }
      out.record(with_x(instance_n(n), x), dp[n], rhs);
    }
  }
}

// D_n(x) equals the order-(n+2) Bernoulli polynomial at x+1
void check_thm2_norlund(const Context& c, IdentityCheck& out) {
  for (const Rational& x : c.x_samples) {
    const std::vector<Rational> dp = daehee_poly_table(c.n_max, x);
    for (std::size_t n = 0; n <= c.n_max; ++n) {
      const Rational rhs = bernoulli_higher(n, static_cast<long>(n) + 2, x + Rational(1));
      out.record(with_x(instance_n(n), x), dp[n], rhs);
    }
  }
}

// B_m = sum_n D_n S2(m,n)
void check_thm4_inverse(const Context& c, IdentityCheck& out) {
  for (std::size_t m = 0; m <= c.n_max; ++m) {
    Rational rhs;
    for (std::size_t n = 0; n <= m; ++n) rhs += c.daehee.at(n) * c.s2.at(m, n);
    out.record(instance_m(m), c.bernoulli.at(m), rhs);
  }
}

// B_m(x) = sum_n D_n(x) S2(m,n)
void check_rem_thm4_poly(const Context& c, IdentityCheck& out) {
  for (const Rational& x : c.x_samples) {
    const std::vector<Rational> dp = daehee_poly_table(c.n_max, x);
    for (std::size_t m = 0; m <= c.n_max; ++m) {
      Rational rhs;
      for (std::size_t n = 0; n <= m; ++n) rhs += dp[n] * c.s2.at(m, n);
      out.record(with_x(instance_m(m), x), bernoulli_poly(m, x, c.bernoulli), rhs);
    }
  }
}

// D2_n = sum_l S1(n,l) (-1)^l B_l
void check_thm5_stirling(const Context& c, IdentityCheck& out) {
  for (std::size_t n = 0; n <= c.n_max; ++n) {
    Rational rhs;
    for (std::size_t l = 0; l <= n; ++l) {
      const Rational sign(l % 2 == 0 ? 1 : -1);
      rhs += c.s1.at(n, l) * sign * c.bernoulli.at(l);
    }
    out.record(instance_n(n), c.daehee2.at(n), rhs);
  }
}

// D2_n(x) = sum_l (-1)^l S1(n,l) B_l(x)
void check_thm6_stirling(const Context& c, IdentityCheck& out) {
  for (const Rational& x : c.x_samples) {
    const std::vector<Rational> dp = daehee2_poly_table(c.n_max, x);
    for (std::size_t n = 0; n <= c.n_max; ++n) {
      Rational rhs;
      for (std::size_t l = 0; l <= n; ++l) {
        const Rational sign(l % 2 == 0 ? 1 : -1);
        rhs += sign * c.s1.at(n, l) * bernoulli_poly(l, x, c.bernoulli);
      }
      out.record(with_x(instance_n(n), x), dp[n], rhs);
    }
  }
}

// B_m(1-x) = sum_n D2_n(x) S2(m,n)
void check_thm7_inverse(const Context& c, IdentityCheck& out) {
  for (const Rational& x : c.x_samples) {
    const std::vector<Rational> dp = daehee2_poly_table(c.n_max, x);
    for (std::size_t m = 0; m <= c.n_max; ++m) {
      Rational rhs;
      for (std::size_t n = 0; n <= m; ++n) rhs += dp[n] * c.s2.at(m, n);
      out.record(with_x(instance_m(m), x), bernoulli_poly(m, Rational(1) - x, c.bernoulli), rhs);
    }
  }
}

// B_m(1-x) = (-1)^m B_m(x)
void check_thm7_reflection(const Context& c, IdentityCheck& out) {
  for (const Rational& x : c.x_samples) {
    for (std::size_t m = 0; m <= c.n_max; ++m) {
      const Rational sign(m % 2 == 0 ? 1 : -1);
      out.record(with_x(instance_m(m), x), bernoulli_poly(m, Rational(1) - x, c.bernoulli),
                 sign * bernoulli_poly(m, x, c.bernoulli));
    }
  }
}

// D2_n equals the order-(n+2) Bernoulli value at 2; D2_n(x) the value at 2-x
void check_rem_thm7_norlund(const Context& c, IdentityCheck& out) {
  for (std::size_t n = 0; n <= c.n_max; ++n) {
    out.record(instance_n(n), c.daehee2.at(n),
               bernoulli_higher(n, static_cast<long>(n) + 2, Rational(2)));
  }
  for (const Rational& x : c.x_samples) {
    const std::vector<Rational> dp = daehee2_poly_table(c.n_max, x);
    for (std::size_t n = 0; n <= c.n_max; ++n) {
      out.record(with_x(instance_n(n), x), dp[n],
                 bernoulli_higher(n, static_cast<long>(n) + 2, Rational(2) - x));
    }
  }
}

// (-1)^n D_n/n! = sum_{m=1..n} binom(n-1,m-1) D2_m/m!, and the mirror with
// the families swapped. The sums start at m = 1, so n = 0 has no instance.
void check_thm8_reciprocal(const Context& c, IdentityCheck& out) {
  for (std::size_t n = 1; n <= c.n_max; ++n) {
    const Rational sign(n % 2 == 0 ? 1 : -1);
    const Rational nf = Rational::from_integer(factorial(n));
    Rational rhs_main;
    Rational rhs_mirror;
    for (std::size_t m = 1; m <= n; ++m) {
      const Rational weight =
          binomial(Rational(static_cast<long>(n) - 1), m - 1) / Rational::from_integer(factorial(m));
      rhs_main += weight * c.daehee2.at(m);
      rhs_mirror += weight * c.daehee.at(m);
    }
    out.record(instance_n(n), sign * c.daehee.at(n) / nf, rhs_main);
    out.record(instance_n(n) + " (mirror)", sign * c.daehee2.at(n) / nf, rhs_mirror);
  }
}

// EGF coefficients of (t/log(1+t))^j (1+t)^{x-1} are order-(k-j+1) Bernoulli
// polynomial values, for integer j of either sign.
void check_eq11_norlund(const Context& c, IdentityCheck& out) {
  const unsigned k_max = std::min(c.n_max, 12u);
  const TruncatedSeries inv_daehee_gf = daehee_gf(c.trunc).inverse();  // t/log(1+t)
  for (long j = -2; j <= 3; ++j) {
    const TruncatedSeries powered = inv_daehee_gf.pow(j);
    for (const Rational& x : c.x_samples) {
      const TruncatedSeries gf = powered * binomial_pow_series(x - Rational(1), c.trunc);
      for (unsigned k = 0; k <= k_max; ++k) {
        const Rational rhs = bernoulli_higher(k, static_cast<long>(k) - j + 1, x);
        out.record(with_x("k=" + std::to_string(k) + " j=" + std::to_string(j), x),
                   gf.egf_coeff(k), rhs);
      }
    }
  }
}

// rising(x,n) = (-1)^n falling(-x,n) = sum_l S1(n,l) (-1)^{n-l} x^l
void check_eq22_rising(const Context& c, IdentityCheck& out) {
  for (const Rational& x : c.x_samples) {
    for (std::size_t n = 0; n <= c.n_max; ++n) {
      const Rational lhs = rising_factorial(x, n);
      const Rational sign(n % 2 == 0 ? 1 : -1);
      out.record(with_x(instance_n(n), x), lhs, sign * falling_factorial(-x, n));
      Rational stirling_sum;
      for (std::size_t l = 0; l <= n; ++l) {
        const Rational term_sign((n - l) % 2 == 0 ? 1 : -1);
        stirling_sum += c.s1.at(n, l) * term_sign * pow(x, l);
      }
      out.record(with_x(instance_n(n) + " (stirling)", x), lhs, stirling_sum);
    }
  }
}

// The shift identity transported to series: (1+t)G - G = log(1+t) for
// G = log(1+t)/t, checked as literal coefficient equality.
void check_eq3_shift_gf(const Context& c, IdentityCheck& out) {
  const TruncatedSeries g = daehee_gf(c.trunc);
  const TruncatedSeries lhs = one_plus_t(c.trunc) * g - g;
  const TruncatedSeries rhs = log1p_series(c.trunc);
  ++out.instances;
  if (lhs != rhs) {
    // Surface the first differing coefficient.
    for (std::size_t k = 0; k <= c.trunc; ++k) {
      if (lhs[k] != rhs[k]) {
        out.failures.push_back({"coefficient t^" + std::to_string(k), lhs[k], rhs[k]});
        break;
      }
    }
  }
}

struct CatalogEntry {
  const char* id;
  const char* description;
  CheckFn fn;
};

constexpr CatalogEntry kCatalog[] = {
    {"thm1-stirling", "Daehee numbers as the signed Stirling transform of Bernoulli numbers",
     check_thm1_stirling},
    {"cor3-stirling", "Daehee polynomials as the signed Stirling transform of Bernoulli polynomials",
     check_cor3_stirling},
    {"thm2-norlund", "Daehee polynomials as order-(n+2) Bernoulli polynomial values at x+1",
     check_thm2_norlund},
    {"thm4-inverse", "Bernoulli numbers as the Stirling-2 transform of Daehee numbers",
     check_thm4_inverse},
    {"rem-thm4-poly", "Bernoulli polynomials as the Stirling-2 transform of Daehee polynomials",
     check_rem_thm4_poly},
    {"thm5-stirling", "Second-kind Daehee numbers via the alternating Stirling-Bernoulli sum",
     check_thm5_stirling},
    {"thm6-stirling", "Second-kind Daehee polynomials via the alternating Stirling-Bernoulli sum",
     check_thm6_stirling},
    {"thm7-inverse",
     "Reflected Bernoulli polynomials as the Stirling-2 transform of second-kind Daehee polynomials",
     check_thm7_inverse},
    {"thm7-reflection", "Bernoulli reflection B_m(1-x) = (-1)^m B_m(x)", check_thm7_reflection},
    {"rem-thm7-norlund", "Second-kind Daehee values as order-(n+2) Bernoulli values at 2-x",
     check_rem_thm7_norlund},
    {"thm8-reciprocal", "Binomial-convolution reciprocity between the two Daehee families",
     check_thm8_reciprocal},
    {"eq11-norlund", "EGF coefficients of integer powers of t/log(1+t) as higher-order Bernoulli values",
     check_eq11_norlund},
    {"eq22-rising", "Rising factorial as alternating falling factorial and its Stirling expansion",
     check_eq22_rising},
    {"eq3-shift-gf", "Translation identity on generating functions: (1+t)G - G = log(1+t)",
     check_eq3_shift_gf},
};

const CatalogEntry* find_entry(std::string_view id) {
  for (const CatalogEntry& e : kCatalog) {
    if (id == e.id) return &e;
  }
  return nullptr;
}

std::size_t effective_trunc(unsigned n_max, std::size_t trunc) {
  const std::size_t needed = static_cast<std::size_t>(n_max) + 2;
  if (trunc == 0) return std::max<std::size_t>(needed, 32);
  if (trunc < needed) {
    throw std::invalid_argument("trunc = " + std::to_string(trunc) +
                                " is too small: need n_max + 2 = " + std::to_string(needed));
  }
  return trunc;
}

std::vector<Rational> effective_samples(std::vector<Rational> x_samples) {
  if (x_samples.empty()) x_samples.push_back(Rational(0));
  return x_samples;
}

IdentityCheck run_entry(const CatalogEntry& entry, const Context& ctx) {
  IdentityCheck check;
  check.id = entry.id;
  check.description = entry.description;
  check.n_max = ctx.n_max;
  check.x_samples = ctx.x_samples;
  entry.fn(ctx, check);
  return check;
}

}  // namespace

std::vector<std::string> identity_ids() {
  std::vector<std::string> ids;
  for (const CatalogEntry& e : kCatalog) ids.emplace_back(e.id);
  return ids;
}

bool is_identity_id(std::string_view id) { return find_entry(id) != nullptr; }

IdentityCheck verify(std::string_view id, unsigned n_max, std::vector<Rational> x_samples,
                     std::size_t trunc) {
  const CatalogEntry* entry = find_entry(id);
  if (entry == nullptr) {
    std::string msg = "unknown identity id '" + std::string(id) + "'; valid ids:";
    for (const CatalogEntry& e : kCatalog) msg += std::string(" ") + e.id;
    throw std::invalid_argument(msg);
  }
  Context ctx(n_max, effective_samples(std::move(x_samples)), effective_trunc(n_max, trunc));
  return run_entry(*entry, ctx);
}

std::vector<IdentityCheck> verify_all(unsigned n_max, std::vector<Rational> x_samples,
                                      std::size_t trunc) {
  Context ctx(n_max, effective_samples(std::move(x_samples)), effective_trunc(n_max, trunc));
  constexpr int count = static_cast<int>(std::size(kCatalog));
  std::vector<IdentityCheck> checks(count);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < count; ++i) {
    checks[i] = run_entry(kCatalog[i], ctx);
  }
  return checks;
}

}  // namespace daehee
