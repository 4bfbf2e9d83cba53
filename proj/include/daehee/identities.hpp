#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "daehee/rational.hpp"

namespace daehee {

struct IdentityFailure {
  std::string instance;  // e.g. "n=3 x=1/2"
  Rational lhs;
  Rational rhs;
};

/// Outcome of one catalog entry over a range of indices and sample points.
/// The check passes only when every evaluated instance is exactly equal;
/// failures carry both sides for inspection.
struct IdentityCheck {
  std::string id;
  std::string description;
  unsigned n_max = 0;
  std::vector<Rational> x_samples;
  std::uint64_t instances = 0;
  std::vector<IdentityFailure> failures;

  bool passed() const { return failures.empty(); }

  void record(const std::string& instance, const Rational& lhs, const Rational& rhs);
};

/// Catalog keys in report order.
std::vector<std::string> identity_ids();

bool is_identity_id(std::string_view id);

/// Verifies one catalog entry for indices up to n_max at the given sample
/// points (empty list means x = 0 only). trunc selects the working series
/// order; 0 picks max(n_max + 2, 32). Throws std::invalid_argument for an
/// unknown id or an undersized trunc.
IdentityCheck verify(std::string_view id, unsigned n_max, std::vector<Rational> x_samples,
                     std::size_t trunc = 0);

/// Runs the whole catalog; entries are independent and verified
/// concurrently, results merged in catalog order.
std::vector<IdentityCheck> verify_all(unsigned n_max, std::vector<Rational> x_samples,
                                      std::size_t trunc = 0);

}  // namespace daehee
