#include "crsing/coefficients.hpp"

#include <map>
#include <stdexcept>

namespace crsing {

CoefficientSystem coefficient_system(
    const std::vector<std::vector<Poly>>& columns,
    const std::vector<std::vector<Poly>>& rhs) {
  std::map<RowKey, std::size_t> index;
  auto scan = [&](const std::vector<Poly>& blocks) {
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (const auto& [m, c] : blocks[b].terms()) index.try_emplace({b, m}, 0);
  };
  for (const auto& col : columns) scan(col);
  for (const auto& r : rhs) scan(r);

  CoefficientSystem sys;
  sys.rows.reserve(index.size());
  for (auto& [key, pos] : index) {
    pos = sys.rows.size();
    sys.rows.push_back(key);
  }
  sys.matrix = SparseMatrix(sys.rows.size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t b = 0; b < columns[j].size(); ++b)
      for (const auto& [m, c] : columns[j][b].terms())
        sys.matrix.add(index.at({b, m}), j, c);
  for (const auto& r : rhs) {
    Vector v(sys.rows.size());
    for (std::size_t b = 0; b < r.size(); ++b)
      for (const auto& [m, c] : r[b].terms()) v[index.at({b, m})] = c;
    sys.rhs.push_back(std::move(v));
  }
  return sys;
}

Poly combine(const std::vector<Poly>& basis, const Vector& coeffs) {
  if (basis.size() != coeffs.size())
    throw std::invalid_argument("combine: size mismatch");
  if (basis.empty()) return Poly();
  Poly out(basis.front().n());
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!coeffs[k].is_zero()) out += basis[k] * coeffs[k];
  return out;
}

}  // namespace crsing
