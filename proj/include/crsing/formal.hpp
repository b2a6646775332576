#pragma once

#include <climits>
#include <vector>

#include "crsing/manifold.hpp"
#include "crsing/poly.hpp"

namespace crsing {

inline constexpr unsigned kInfiniteOrder = UINT_MAX;

/// How formal_extend treats quadrics with rank [A*; B] == 1. Rank 0 is
/// always rejected.
enum class RankPolicy { AllowRankOne, RequireRankTwo };

struct FormalStage {
  unsigned degree = 0;
  /// Weighted homogeneous piece found at this stage.
  Poly F;
  bool unique = false;
};

struct FormalExtension {
  /// Holomorphic F(z, w) of weighted degree <= order.
  Poly F;
  unsigned order = 0;
  /// Lowest total degree of f - F(z, rho); kInfiniteOrder if it is zero.
  unsigned residual_order = kInfiniteOrder;
  /// f - F(z, rho), untruncated.
  Poly residual;
  bool unique = true;
  std::vector<FormalStage> stages;
};

/// Order-by-order extension of f to truncation order N. Each stage takes the
/// lowest homogeneous part f_k of the running remainder, checks it is CR on
/// the quadric and extends it there.
///
/// Errors: DegenerateQuadric (rank 0), RankTooLow (rank 1 under
/// RequireRankTwo), NotCRAtDegree(k) when f fails the CR equations through
/// degree N, NoExtension(k) when f_k is CR but has no extension (rank 1).
FormalExtension formal_extend(const Manifold& m, const Poly& f, unsigned N,
                              RankPolicy policy = RankPolicy::AllowRankOne);

/// True iff every stage solve was unique. Requires rank >= 2.
bool check_formal_uniqueness(const Manifold& m, const Poly& f, unsigned N);

}  // namespace crsing
