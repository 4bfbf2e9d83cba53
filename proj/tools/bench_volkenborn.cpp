// Times the partial-sum kernels: OpenMP fan-out vs the serial reference.
// Exact arithmetic makes the two bit-identical; this only measures speed.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "daehee/volkenborn.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace daehee;

namespace {

double run_ms(Rational (*kernel)(const Integrand&, unsigned long, unsigned, std::uint64_t),
              const Integrand& f, unsigned long p, unsigned level, Rational& out) {
  const auto t0 = std::chrono::steady_clock::now();
  out = kernel(f, p, level, kDefaultTermBudget);
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (built without OpenMP)\n";
#endif
  struct Case {
    Integrand f;
    unsigned long p;
    unsigned level;
  };
  const Case cases[] = {
      {{IntegrandKind::Falling, 4, Rational(0)}, 2, 20},
      {{IntegrandKind::NegFalling, 6, Rational(0)}, 3, 13},
      {{IntegrandKind::Falling, 5, Rational(1, 2)}, 5, 8},
      {{IntegrandKind::Monomial, 6, Rational(0)}, 5, 9},
  };

  std::cout << "integrand                    p   N     serial     parallel   speedup\n";
  bool all_equal = true;
  for (const Case& c : cases) {
    Rational serial_sum, parallel_sum;
    const double serial_ms = run_ms(&volkenborn_partial_sum_serial, c.f, c.p, c.level, serial_sum);
    const double parallel_ms = run_ms(&volkenborn_partial_sum, c.f, c.p, c.level, parallel_sum);
    const bool equal = serial_sum == parallel_sum;
    all_equal = all_equal && equal;
    std::printf("%-28s %2lu  %2u  %8.1f ms %8.1f ms    %5.2fx  %s\n", c.f.label().c_str(), c.p,
                c.level, serial_ms, parallel_ms, serial_ms / parallel_ms,
                equal ? "" : "MISMATCH");
  }
  return all_equal ? EXIT_SUCCESS : EXIT_FAILURE;
}
