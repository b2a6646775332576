#include "crsing/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace crsing {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = GaussRational(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<GaussRational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::conjugate() const {
  Matrix t = *this;
  for (auto& x : t.data_) x = x.conj();
  return t;
}

Matrix Matrix::adjoint() const { return transpose().conjugate(); }

bool Matrix::is_zero() const {
  return std::ranges::all_of(data_, [](const auto& x) { return x.is_zero(); });
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if (!((*this)(r, c) == (*this)(c, r))) return false;
  return true;
}

Matrix Matrix::vstack(const Matrix& below) const {
  if (below.cols_ != cols_) throw std::invalid_argument("vstack width");
  Matrix m(rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(),
            m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
    }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix sum shape");
  Matrix m = a;
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
  return m;
}

Vector multiply(const Matrix& m, const Vector& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("matvec shape");
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero() && !v[c].is_zero()) out[r] += m(r, c) * v[c];
  return out;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) s.rows_[r].emplace_back(c, m(r, c));
  return s;
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows(), cols_);
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, v] : rows_[r]) m(r, c) = v;
  return m;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const GaussRational& v) {
  if (r >= rows_.size() || c >= cols_)
    throw std::out_of_range("sparse matrix index");
  if (v.is_zero()) return;
  auto& row = rows_[r];
  auto it = std::lower_bound(
      row.begin(), row.end(), c,
      [](const auto& entry, std::size_t col) { return entry.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (it->second.is_zero()) row.erase(it);
  } else {
    row.emplace(it, c, v);
  }
}

GaussRational SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = rows_.at(r);
  auto it = std::lower_bound(
      row.begin(), row.end(), c,
      [](const auto& entry, std::size_t col) { return entry.first < col; });
  return (it != row.end() && it->first == c) ? it->second : GaussRational();
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

SparseMatrix SparseMatrix::submatrix(const std::vector<std::size_t>& rows,
                                     const std::vector<std::size_t>& cols) const {
  std::vector<std::ptrdiff_t> col_map(cols_, -1);
  for (std::size_t k = 0; k < cols.size(); ++k)
    col_map[cols[k]] = static_cast<std::ptrdiff_t>(k);
  SparseMatrix s(rows.size(), cols.size());
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (const auto& [c, v] : rows_.at(rows[k]))
      if (col_map[c] >= 0) s.add(k, static_cast<std::size_t>(col_map[c]), v);
  return s;
}

namespace {

const GaussRational* find_entry(const SparseRow& row, std::size_t c) {
  auto it = std::lower_bound(
      row.begin(), row.end(), c,
      [](const auto& entry, std::size_t col) { return entry.first < col; });
  return (it != row.end() && it->first == c) ? &it->second : nullptr;
}

// a - f * b
SparseRow axpy(const SparseRow& a, const GaussRational& f, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, -(f * ib->second));
      ++ib;
    } else {
      GaussRational v = ia->second - f * ib->second;
      if (!v.is_zero()) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

struct Elimination {
  RowEchelon echelon;
  // Rows that vanished on the pivot columns but not beyond pivot_limit.
  std::vector<SparseRow> leftover;
};

// Gauss-Jordan with pivots restricted to columns < pivot_limit.
Elimination eliminate(std::vector<SparseRow> work, std::size_t cols,
                      std::size_t pivot_limit) {
  std::vector<std::vector<std::size_t>> buckets(cols);
  for (std::size_t r = 0; r < work.size(); ++r)
    if (!work[r].empty()) buckets[work[r].front().first].push_back(r);

  Elimination out;
  out.echelon.cols = cols;
  for (std::size_t c = 0; c < pivot_limit; ++c) {
    auto candidates = std::move(buckets[c]);
    if (candidates.empty()) continue;
    std::ranges::sort(candidates);
    SparseRow pivot = std::move(work[candidates.front()]);
    const GaussRational inv = pivot.front().second.inverse();
    for (auto& entry : pivot) entry.second *= inv;
    for (std::size_t k = 1; k < candidates.size(); ++k) {
      auto& row = work[candidates[k]];
      GaussRational f = row.front().second;
      row = axpy(row, f, pivot);
      if (!row.empty()) buckets[row.front().first].push_back(candidates[k]);
    }
    out.echelon.rows.push_back(std::move(pivot));
    out.echelon.pivot_cols.push_back(c);
  }
  for (std::size_t c = pivot_limit; c < cols; ++c)
    for (std::size_t r : buckets[c]) out.leftover.push_back(std::move(work[r]));

  // Back substitution to reduced form.
  auto& rows = out.echelon.rows;
  const auto& pcols = out.echelon.pivot_cols;
  for (std::size_t q = rows.size(); q-- > 0;) {
    for (std::size_t p = 0; p < q; ++p) {
      const GaussRational* e = find_entry(rows[p], pcols[q]);
      if (e == nullptr) continue;
      GaussRational f = *e;
      rows[p] = axpy(rows[p], f, rows[q]);
    }
  }
  return out;
}

std::vector<SparseRow> rows_of(const SparseMatrix& m) {
  std::vector<SparseRow> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows[r] = m.row(r);
  return rows;
}

}  // namespace

RowEchelon row_echelon(const SparseMatrix& m) {
  return eliminate(rows_of(m), m.cols(), m.cols()).echelon;
}

std::vector<Vector> RowEchelon::kernel() const {
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = GaussRational(1);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (const GaussRational* e = find_entry(rows[i], f)) v[pivot_cols[i]] = -*e;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const SparseMatrix& m) { return row_echelon(m).rank(); }
std::size_t rank(const Matrix& m) { return rank(SparseMatrix::from_dense(m)); }
std::vector<Vector> kernel(const SparseMatrix& m) {
  return row_echelon(m).kernel();
}
std::vector<Vector> kernel(const Matrix& m) {
  return kernel(SparseMatrix::from_dense(m));
}

SolveResult solve(const SparseMatrix& m, const std::vector<Vector>& rhs) {
  const std::size_t n = m.cols();
  const std::size_t k = rhs.size();
  std::vector<SparseRow> work = rows_of(m);
  for (std::size_t j = 0; j < k; ++j) {
    if (rhs[j].size() != m.rows())
      throw std::invalid_argument("right-hand side length");
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!rhs[j][r].is_zero()) work[r].emplace_back(n + j, rhs[j][r]);
  }
  Elimination e = eliminate(std::move(work), n + k, n);

  SolveResult result;
  result.rank = e.echelon.rank();
  result.nullity = n - result.rank;
  std::vector<bool> consistent(k, true);
  for (const auto& row : e.leftover)
    for (const auto& [c, v] : row) consistent[c - n] = false;
  for (std::size_t j = 0; j < k; ++j) {
    if (!consistent[j]) {
      result.solutions.emplace_back(std::nullopt);
      continue;
    }
    Vector x(n);
    for (std::size_t i = 0; i < e.echelon.rows.size(); ++i)
      if (const GaussRational* v = find_entry(e.echelon.rows[i], n + j))
        x[e.echelon.pivot_cols[i]] = *v;
    result.solutions.emplace_back(std::move(x));
  }
  return result;
}

GaussRational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant shape");
  Matrix a = m;
  const std::size_t n = a.rows();
  GaussRational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return GaussRational(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const GaussRational inv = a(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      GaussRational f = a(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse shape");
  const std::size_t n = m.rows();
  std::vector<Vector> rhs;
  for (std::size_t j = 0; j < n; ++j) rhs.push_back(Matrix::identity(n).column(j));
  auto res = solve(SparseMatrix::from_dense(m), rhs);
  if (res.rank != n) throw std::domain_error("singular matrix");
  Matrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*res.solutions[j])[i];
  return inv;
}

}  // namespace crsing
