#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace crsing {

/// A variable of the ring Q(i)[z_1..z_n, zb_1..zb_n, w]. Indices are 1-based.
struct Var {
  enum class Kind : std::uint8_t { Z, ZBar, W };

  Kind kind = Kind::Z;
  unsigned index = 1;

  static Var z(unsigned i) { return {Kind::Z, i}; }
  static Var zb(unsigned i) { return {Kind::ZBar, i}; }
  static Var w() { return {Kind::W, 0}; }

  friend bool operator==(const Var&, const Var&) = default;
};

/// z^a zb^b w^j over a fixed ambient dimension n.
///
/// Exponents are stored as one vector [a_1..a_n, b_1..b_n, j]. The ordering
/// operator is the canonical term order: ascending total degree (w counted
/// once), then descending lexicographic on the exponent vector, so the
/// z-block decides first, then the zb-block, then w.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(unsigned n) : exps_(2 * n + 1, 0) {}
  Monomial(std::span<const Exponent> z, std::span<const Exponent> zb,
           Exponent w);

  unsigned n() const { return static_cast<unsigned>(exps_.size() / 2); }

  Exponent z(unsigned i) const { return exps_[i - 1]; }
  Exponent zb(unsigned i) const { return exps_[n() + i - 1]; }
  Exponent w() const { return exps_.back(); }

  /// Exponent of a variable; the index must already be validated.
  Exponent get(Var v) const { return exps_[slot(v)]; }
  void set(Var v, Exponent e) { exps_[slot(v)] = e; }

  std::span<const Exponent> exponents() const { return exps_; }
  std::span<const Exponent> z_block() const { return {exps_.data(), n()}; }
  std::span<const Exponent> zb_block() const {
    return {exps_.data() + n(), n()};
  }

  unsigned total_degree() const;
  /// w counts twice.
  unsigned weighted_degree() const { return total_degree() + w(); }
  unsigned z_degree() const;
  unsigned zb_degree() const;

  bool is_constant() const { return total_degree() == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b);

 private:
  std::size_t slot(Var v) const {
    switch (v.kind) {
      case Var::Kind::Z: return v.index - 1;
      case Var::Kind::ZBar: return n() + v.index - 1;
      case Var::Kind::W: break;
    }
    return exps_.size() - 1;
  }

  std::vector<Exponent> exps_;
};

/// All monomials in z, zb (no w) of total degree d in dimension n, in the
/// column order used for the CR matrices: ascending holomorphic degree, then
/// ascending lexicographic on the z-block, then ascending lexicographic on
/// the zb-block. For n = 2 this is exactly the ordering
/// m < m' iff a1+a2 < a3+a4, or equal and a1 < a3, or equal, equal and b1 < b3.
std::vector<Monomial> zzbar_monomials(unsigned n, unsigned d);

/// Comparator implementing the column order of zzbar_monomials.
bool cr_column_less(const Monomial& a, const Monomial& b);

/// All exponent vectors of length k summing to d, lexicographically ascending.
std::vector<std::vector<Monomial::Exponent>> compositions(unsigned k,
                                                          unsigned d);

}  // namespace crsing
