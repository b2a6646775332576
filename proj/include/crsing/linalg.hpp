#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "crsing/gauss_rational.hpp"

namespace crsing {

using Vector = std::vector<GaussRational>;

/// Dense matrix over Q(i), row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Builds from nested rows; all rows must have equal length.
  static Matrix from_rows(const std::vector<std::vector<GaussRational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussRational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const GaussRational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Matrix transpose() const;
  Matrix conjugate() const;
  /// Conjugate transpose.
  Matrix adjoint() const;
  bool is_zero() const;
  bool is_symmetric() const;

  /// [this; below] stacked vertically.
  Matrix vstack(const Matrix& below) const;
  Vector column(std::size_t c) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussRational> data_;
};

/// Sparse row: (column, value) pairs with strictly increasing columns and no
/// zero values.
using SparseRow = std::vector<std::pair<std::size_t, GaussRational>>;

/// Exact sparse matrix held by rows.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows) {}

  static SparseMatrix from_dense(const Matrix& m);
  Matrix to_dense() const;

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  /// Adds v to entry (r, c).
  void add(std::size_t r, std::size_t c, const GaussRational& v);
  GaussRational at(std::size_t r, std::size_t c) const;
  const SparseRow& row(std::size_t r) const { return rows_[r]; }
  std::size_t nonzeros() const;

  /// Submatrix of the given rows and columns (in the given order).
  SparseMatrix submatrix(const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) const;

 private:
  std::size_t cols_ = 0;
  std::vector<SparseRow> rows_;
};

/// Reduced row echelon form of a sparse matrix, computed by exact Gauss-Jordan
/// elimination. Columns are processed left to right; among candidate rows the
/// lowest original index becomes the pivot.
struct RowEchelon {
  std::size_t cols = 0;
  /// Pivot rows, normalized to leading 1, fully reduced, ordered by pivot column.
  std::vector<SparseRow> rows;
  std::vector<std::size_t> pivot_cols;

  std::size_t rank() const { return pivot_cols.size(); }
  /// Kernel basis, one vector per free column, in ascending free-column order.
  std::vector<Vector> kernel() const;
};

RowEchelon row_echelon(const SparseMatrix& m);

std::size_t rank(const SparseMatrix& m);
std::size_t rank(const Matrix& m);
std::vector<Vector> kernel(const SparseMatrix& m);
std::vector<Vector> kernel(const Matrix& m);

/// Solution of m x = b for each right-hand side: a particular solution with
/// all free variables zero, or nullopt when the system is inconsistent.
struct SolveResult {
  std::vector<std::optional<Vector>> solutions;
  std::size_t rank = 0;
  /// Dimension of the solution space of the homogeneous system.
  std::size_t nullity = 0;
};

SolveResult solve(const SparseMatrix& m, const std::vector<Vector>& rhs);

GaussRational determinant(const Matrix& m);
/// Throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

Vector multiply(const Matrix& m, const Vector& v);

}  // namespace crsing
