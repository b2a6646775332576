#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "crsing/gauss_rational.hpp"
#include "crsing/monomial.hpp"

namespace crsing {

/// Sparse polynomial in z_1..z_n, zb_1..zb_n, w over Q(i).
///
/// The barred variables are independent indeterminates (the complexified
/// picture). No stored coefficient is zero, and iteration follows the
/// canonical term order of Monomial.
class Poly {
 public:
  using Terms = std::map<Monomial, GaussRational>;

  Poly() = default;
  explicit Poly(unsigned n) : n_(n) {}

  static Poly constant(unsigned n, const GaussRational& c);
  static Poly variable(unsigned n, Var v);
  static Poly term(const Monomial& m, const GaussRational& c);

  unsigned n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  GaussRational coefficient(const Monomial& m) const;

  /// Adds c * m in place.
  void add_term(const Monomial& m, const GaussRational& c);

  /// Max total degree (w counted once); -1 for the zero polynomial.
  int total_degree() const;
  /// Max weighted degree (w counted twice); -1 for zero.
  int weighted_degree() const;
  /// Min total degree of a term; -1 for zero.
  int order() const;
  /// Highest exponent of v among the terms; 0 for zero.
  unsigned degree_in(Var v) const;

  bool contains_w() const;
  bool contains_zbar() const;
  bool is_constant() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const GaussRational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const GaussRational& c) { return a *= c; }
  friend Poly operator*(const GaussRational& c, Poly a) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  Poly pow(unsigned k) const;

 private:
  unsigned n_ = 0;
  Terms terms_;
};

/// Product keeping only terms of total degree <= max_degree.
Poly multiply_truncated(const Poly& a, const Poly& b, unsigned max_degree);

/// Formal partial derivative.
Poly differentiate(const Poly& p, Var v);

/// Swaps z and zb and conjugates coefficients. Rejects any w.
Poly conjugate_poly(const Poly& p);

/// Replaces w by q (w-free, no constant term). With max_degree, terms of
/// total degree above it are dropped during expansion.
Poly substitute_w(const Poly& p, const Poly& q,
                  std::optional<unsigned> max_degree = std::nullopt);

/// Simultaneous substitution of every variable. images holds one Poly per
/// variable in slot order [z_1..z_n, zb_1..zb_n, w]; all images share one
/// target dimension.
Poly substitute(const Poly& p, const std::vector<Poly>& images,
                std::optional<unsigned> max_degree = std::nullopt);

/// Terms of degree exactly d (weighted: w counts 2, otherwise 1).
Poly homogeneous_part(const Poly& p, unsigned d, bool weighted);

/// Terms of total degree <= max_degree.
Poly truncate(const Poly& p, unsigned max_degree);

/// Coefficients of p viewed as a polynomial in v: exponent -> coefficient.
std::map<unsigned, Poly> collect(const Poly& p, Var v);

struct DivisionResult {
  Poly quotient;
  Poly remainder;
};

/// Division by a divisor that is monic up to a nonzero scalar in main_var.
/// p = quotient * divisor + remainder with deg_main(remainder) < deg_main(divisor).
DivisionResult weierstrass_divide(const Poly& p, const Poly& divisor,
                                  Var main_var);

/// Throws UnknownVariable if v is not a variable of dimension n.
void check_var(unsigned n, Var v);

}  // namespace crsing
