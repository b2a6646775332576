#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "crsing/linalg.hpp"
#include "crsing/poly.hpp"

namespace crsing {

/// Row label of a coefficient system: (block, monomial).
using RowKey = std::pair<std::size_t, Monomial>;

/// Linear system obtained by matching coefficients of polynomial identities.
///
/// Each unknown contributes one column, given as a list of polynomials (one
/// per block, e.g. one per CR vector field). Each right-hand side is a list of
/// polynomials of the same shape. Rows are the (block, monomial) pairs that
/// occur anywhere, ordered by block and then by canonical monomial order.
struct CoefficientSystem {
  SparseMatrix matrix;
  std::vector<Vector> rhs;
  std::vector<RowKey> rows;
};

CoefficientSystem coefficient_system(
    const std::vector<std::vector<Poly>>& columns,
    const std::vector<std::vector<Poly>>& rhs = {});

/// Sum of coeffs[k] * basis[k].
Poly combine(const std::vector<Poly>& basis, const Vector& coeffs);

}  // namespace crsing
