#pragma once

#include <optional>
#include <vector>

#include "crsing/linalg.hpp"
#include "crsing/poly.hpp"

namespace crsing {

/// Quadric model w = Q(z, zb) = z*Az + conj(z^t B z) + z^t C z with B, C
/// symmetric.
class Quadric {
 public:
  Quadric() = default;
  /// Validates shapes and symmetry (AsymmetricB / AsymmetricC).
  Quadric(Matrix a, Matrix b, Matrix c);

  static Quadric zero(unsigned n);
  /// Reads A, B, C off a polynomial whose terms are all quadratic in z, zb.
  static Quadric from_poly(const Poly& q);

  unsigned n() const { return static_cast<unsigned>(a_.rows()); }
  const Matrix& A() const { return a_; }
  const Matrix& B() const { return b_; }
  const Matrix& C() const { return c_; }

  /// Q as a polynomial in z, zb.
  Poly poly() const;

  friend bool operator==(const Quadric&, const Quadric&) = default;

 private:
  Matrix a_, b_, c_;
};

/// Manifold w = rho(z, zb) = Q + E with E w-free of order >= 3.
class Manifold {
 public:
  Manifold() = default;
  explicit Manifold(Quadric q);
  /// Validates E (ContainsW, EOrderTooLow, DimensionMismatch).
  Manifold(Quadric q, Poly e);

  /// Splits rho into its quadratic part and higher-order rest. Rejects
  /// constant and linear terms.
  static Manifold from_rho(const Poly& rho);

  unsigned n() const { return quadric_.n(); }
  const Quadric& quadric() const { return quadric_; }
  const Poly& higher_order() const { return e_; }
  const Poly& rho() const { return rho_; }

 private:
  Quadric quadric_;
  Poly e_;
  Poly rho_;
};

/// Rank of the 2n x n matrix [A*; B]. Zero exactly when Q has no zb.
std::size_t rank_condition(const Quadric& q);

/// L_{k,l} = rho_{zb_l} d/dzb_k - rho_{zb_k} d/dzb_l for 1 <= k < l <= n.
struct CRField {
  unsigned k = 0;
  unsigned l = 0;
  Poly coeff_k;  // rho_{zb_l}
  Poly coeff_l;  // -rho_{zb_k}

  Poly apply(const Poly& f) const;
};

CRField cr_field(const Manifold& m, unsigned k, unsigned l);
/// All fields, pairs in lexicographic order.
std::vector<CRField> cr_fields(const Manifold& m);

struct CRCheck {
  bool is_cr = false;
  /// Every rho_{zb_j} vanishes: M is a complex manifold and the CR
  /// condition is empty.
  bool vacuous = false;
  /// First pair (k, l) with L_{k,l} f != 0, and that image.
  std::optional<std::pair<unsigned, unsigned>> failing_pair;
  Poly defect;
};

/// Polynomial identity test L_{k,l} f = 0 for all pairs. f must be w-free.
CRCheck is_cr(const Manifold& m, const Poly& f);

/// Basis of {v in C^n : v . zb is CR on the quadric}.
std::vector<Vector> cr_linear_space(const Quadric& q);

/// v . zb = sum_k v_k zb_k.
Poly linear_zbar(unsigned n, const Vector& v);

/// Coordinate change z -> Tz: A -> T*AT, B -> T^tBT, C -> T^tCT,
/// E(z, zb) -> E(Tz, conj(T) zb).
Quadric transform(const Quadric& q, const Matrix& t);
Manifold transform(const Manifold& m, const Matrix& t);

/// Throws RequiresNGe2 when n < 2.
void require_n_ge_2(unsigned n);

}  // namespace crsing
