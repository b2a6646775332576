#include "crsing/gauss_rational.hpp"

#include <ostream>
#include <stdexcept>

namespace crsing {

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Rational n = norm2();
  return {re_ / n, -im_ / n};
}

GaussRational GaussRational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  GaussRational result(1);
  GaussRational base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string GaussRational::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  Rational mag = abs(im_);
  std::string imag = mag == 1 ? "i" : mag.get_str() + "i";
  if (sgn(re_) == 0) return sgn(im_) < 0 ? "-" + imag : imag;
  return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& x) {
  return os << x.str();
}

bool sqrt_exact(const Rational& x, Rational& root) {
  if (sgn(x) < 0) return false;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) ||
      !mpz_perfect_square_p(x.get_den_mpz_t()))
    return false;
  Integer num = sqrt(Integer(x.get_num()));
  Integer den = sqrt(Integer(x.get_den()));
  root = Rational(num, den);
  root.canonicalize();
  return true;
}

bool sqrt_exact(const GaussRational& x, GaussRational& root) {
  const Rational& a = x.re();
  const Rational& b = x.im();
  if (sgn(b) == 0) {
    Rational r;
    if (sgn(a) >= 0) {
      if (!sqrt_exact(a, r)) return false;
      root = GaussRational(r);
    } else {
      if (!sqrt_exact(Rational(-a), r)) return false;
      root = GaussRational(Rational(0), r);
    }
    return true;
  }
  Rational modulus;
  if (!sqrt_exact(x.norm2(), modulus)) return false;
  Rational u, v;
  if (!sqrt_exact(Rational((modulus + a) / 2), u)) return false;
  if (!sqrt_exact(Rational((modulus - a) / 2), v)) return false;
  if (sgn(b) < 0) v = -v;
  root = GaussRational(u, v);
  return true;
}

bool is_nonnegative_integer(const GaussRational& x) {
  return x.is_real() && x.re().get_den() == 1 && sgn(x.re()) >= 0;
}

bool is_positive_integer(const GaussRational& x) {
  return x.is_real() && x.re().get_den() == 1 && sgn(x.re()) > 0;
}

}  // namespace crsing
