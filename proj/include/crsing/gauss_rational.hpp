#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace crsing {

/// Arbitrary precision rational; GMP keeps it in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Exact complex number re + im*i with rational parts.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re) : re_(std::move(re)) {  // NOLINT
    re_.canonicalize();
  }
  // mpq_class(num, den) is not reduced; these keep == meaningful.
  GaussRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussRational conj() const { return {re_, -im_}; }

  /// |x|^2 = re^2 + im^2.
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  /// Multiplicative inverse. Throws std::domain_error on zero.
  GaussRational inverse() const;

  GaussRational operator-() const { return {-re_, -im_}; }

  GaussRational& operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o) {
    return *this *= o.inverse();
  }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) {
    return a += b;
  }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) {
    return a -= b;
  }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) {
    return a *= b;
  }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) {
    return a /= b;
  }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Integer power, negative exponents allowed for nonzero bases.
  GaussRational pow(long e) const;

  /// Plain text form "a", "bi", "a+bi", "a-bi" with rationals "p" or "p/q".
  std::string str() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussRational& x);

/// Exact square root in Q(i) if one exists.
bool sqrt_exact(const GaussRational& x, GaussRational& root);

/// Exact square root of a nonnegative rational if it is a perfect square.
bool sqrt_exact(const Rational& x, Rational& root);

/// Nonnegative integer test: zero imaginary part, integral, >= 0.
bool is_nonnegative_integer(const GaussRational& x);

/// Strictly positive integer test.
bool is_positive_integer(const GaussRational& x);

}  // namespace crsing
