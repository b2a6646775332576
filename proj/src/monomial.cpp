#include "crsing/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace crsing {

Monomial::Monomial(std::span<const Exponent> z, std::span<const Exponent> zb,
                   Exponent w) {
  exps_.reserve(z.size() + zb.size() + 1);
  exps_.insert(exps_.end(), z.begin(), z.end());
  exps_.insert(exps_.end(), zb.begin(), zb.end());
  exps_.push_back(w);
}

unsigned Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

unsigned Monomial::z_degree() const {
  auto zs = z_block();
  return std::accumulate(zs.begin(), zs.end(), 0u);
}

unsigned Monomial::zb_degree() const {
  auto zs = zb_block();
  return std::accumulate(zs.begin(), zs.end(), 0u);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t k = 0; k < r.exps_.size(); ++k) r.exps_[k] += b.exps_[k];
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  // Larger exponent on an earlier variable sorts first.
  for (std::size_t k = 0; k < a.exps_.size(); ++k) {
    if (a.exps_[k] != b.exps_[k])
      return a.exps_[k] > b.exps_[k] ? std::strong_ordering::less
                                     : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::vector<std::vector<Monomial::Exponent>> compositions(unsigned k,
                                                          unsigned d) {
  std::vector<std::vector<Monomial::Exponent>> out;
  if (k == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<Monomial::Exponent> cur(k, 0);
  // Enumerate in ascending lexicographic order: the first entry grows slowest.
  auto rec = [&](auto&& self, unsigned pos, unsigned left) -> void {
    if (pos + 1 == k) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

bool cr_column_less(const Monomial& a, const Monomial& b) {
  unsigned da = a.z_degree(), db = b.z_degree();
  if (da != db) return da < db;
  auto za = a.z_block(), zb = b.z_block();
  if (!std::ranges::equal(za, zb))
    return std::ranges::lexicographical_compare(za, zb);
  auto ba = a.zb_block(), bb = b.zb_block();
  return std::ranges::lexicographical_compare(ba, bb);
}

std::vector<Monomial> zzbar_monomials(unsigned n, unsigned d) {
  std::vector<Monomial> out;
  for (unsigned hol = 0; hol <= d; ++hol) {
    auto zs = compositions(n, hol);
    auto zbs = compositions(n, d - hol);
    for (const auto& a : zs)
      for (const auto& b : zbs) out.emplace_back(a, b, 0);
  }
  std::ranges::sort(out, cr_column_less);
  return out;
}

}  // namespace crsing
