#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crsing/linalg.hpp"
#include "crsing/manifold.hpp"
#include "crsing/poly.hpp"

namespace crsing {

/// Matrix of the CR equations on degree-d homogeneous polynomials.
///
/// Columns are the degree-d monomials in (z, zb) in the order of
/// zzbar_monomials. Rows are (pair, output monomial) for every pair k < l in
/// lexicographic order and every degree-d monomial in the same order, so the
/// shape is (n choose 2) * #monomials by #monomials.
struct CRMatrix {
  unsigned n = 0;
  unsigned degree = 0;
  std::vector<Monomial> columns;
  std::vector<std::pair<unsigned, unsigned>> pairs;
  SparseMatrix matrix;

  std::size_t row_index(std::size_t pair, std::size_t column) const {
    return pair * columns.size() + column;
  }

  /// CSV dump: header "row,<column labels>", then one line per row labelled
  /// "L<k><l>:<monomial>".
  std::string to_csv() const;
};

CRMatrix build_Xd(const Quadric& q, unsigned d);

/// sum_{j=1}^{d} 2 floor((j+1)/2) (d-j+1).
unsigned long rank_formula(unsigned d);

/// Kernel of X_d as polynomials.
struct CRSpace {
  unsigned degree = 0;
  std::size_t monomials = 0;
  std::size_t rank = 0;
  std::vector<Poly> basis;

  std::size_t dim() const { return basis.size(); }
};

CRSpace cr_homogeneous_basis(const Quadric& q, unsigned d);

struct ExtensionResult {
  /// Holomorphic F(z, w).
  Poly F;
  /// f - F(z, Q).
  Poly residual;
  bool unique = false;
};

/// The unknowns z^alpha w^j with 2j + |alpha| = d and the matrix whose columns
/// are the coefficient vectors of z^alpha Q^j.
struct MatchingSystem {
  std::vector<Poly> holomorphic;  // z^alpha w^j
  std::vector<Poly> restricted;   // z^alpha Q^j
};

MatchingSystem matching_system(const Quadric& q, unsigned d);

/// Rank of the matching matrix; it equals the number of unknowns exactly when
/// extensions of degree d are unique.
std::size_t matching_rank(const Quadric& q, unsigned d);

/// Solves sum c_{alpha j} z^alpha Q^j = f for a homogeneous CR polynomial f of
/// degree d. Throws NotCR or NoExtension (with the degree).
ExtensionResult extend_homogeneous(const Quadric& q, const Poly& f, unsigned d);

/// Batch form of extend_homogeneous sharing one elimination. Entries are
/// nullopt where no extension exists. Every f must be CR and homogeneous.
std::vector<std::optional<ExtensionResult>> extend_homogeneous_batch(
    const Quadric& q, const std::vector<Poly>& fs, unsigned d);

/// Extends each homogeneous part. With require_rank, rank_condition < 2 is
/// rejected up front (RankTooLow, or DegenerateQuadric for rank 0).
ExtensionResult extend_polynomial(const Quadric& q, const Poly& f,
                                  bool require_rank = false);

/// A CR linear function v . zb with no holomorphic extension.
struct LinearCounterexample {
  Vector v;
  Poly h;
  bool is_cr = false;
  bool extension_fails = false;
};

/// For rank_condition == 1 returns a certified counterexample; nullopt for
/// rank >= 2. Throws DegenerateQuadric when Q has no zb.
std::optional<LinearCounterexample> counterexample_linear(const Quadric& q);

}  // namespace crsing
