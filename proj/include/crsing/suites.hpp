#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "crsing/manifold.hpp"
#include "crsing/poly.hpp"

namespace crsing {

struct SuiteOptions {
  /// Degree bound; each suite has its own default when unset.
  std::optional<unsigned> dmax;
  /// Sample count; each suite has its own default when unset.
  std::optional<unsigned> samples;
  std::uint64_t seed = 1;
};

struct SuiteReport {
  std::string name;
  unsigned criterion = 0;
  bool passed = true;
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// Human-readable table, one line per row.
  std::vector<std::string> lines;
  nlohmann::json details = nlohmann::json::array();
  double seconds = 0;

  void check(bool ok, const std::string& what);
};

/// Names in criterion order: rank-formula, block-ranks, extension-sweep,
/// uniqueness, examples, classification, ode, restriction, levi-flat.
const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

/// Random data used by the suites (and the property tests).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  unsigned uniform(unsigned lo, unsigned hi);
  bool coin(double p);

  /// Entry from {0, +-1, +-i, +-1/2}, zero with probability p_zero.
  GaussRational entry(double p_zero);
  /// Nonzero entry from {+-1, +-i, +-1/2, +-2, 1+i, 1/3}.
  GaussRational nonzero();
  Matrix matrix(unsigned n, double p_zero);
  Matrix symmetric(unsigned n, double p_zero);
  Matrix invertible(unsigned n);
  /// Random quadric with rank [A*; B] >= 1 (resampled otherwise).
  Quadric quadric(unsigned n);
  /// Random quadric with rank >= 2.
  Quadric quadric_rank2(unsigned n);
  /// Sum of a few random monomials z^alpha w^j, |alpha| + 2j <= wdeg.
  Poly holomorphic(unsigned n, unsigned wdeg, unsigned max_terms);
  /// Sum of a few random w-free monomials of total degree in [lo, hi].
  Poly zzbar(unsigned n, unsigned lo, unsigned hi, unsigned max_terms);

 private:
  std::mt19937_64 rng_;
};

}  // namespace crsing
