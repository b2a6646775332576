#include "crsing/manifold.hpp"

#include <string>

#include "crsing/coefficients.hpp"
#include "crsing/error.hpp"

namespace crsing {
namespace {

void check_square(const Matrix& m, std::size_t n, const char* name) {
  if (m.rows() != n || m.cols() != n)
    throw Error(ErrorCode::DimensionMismatch,
                std::string(name) + " must be " + std::to_string(n) + "x" +
                    std::to_string(n));
}

Poly zb_partial(const Manifold& m, unsigned j) {
  return differentiate(m.rho(), Var::zb(j));
}

}  // namespace

void require_n_ge_2(unsigned n) {
  if (n < 2)
    throw Error(ErrorCode::RequiresNGe2,
                "the extension theory needs at least two z variables");
}

Quadric::Quadric(Matrix a, Matrix b, Matrix c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.rows() == 0)
    throw Error(ErrorCode::DimensionMismatch, "quadric needs n >= 1");
  check_square(a_, a_.rows(), "A");
  check_square(b_, a_.rows(), "B");
  check_square(c_, a_.rows(), "C");
  if (!b_.is_symmetric()) throw Error(ErrorCode::AsymmetricB, "B is not symmetric");
  if (!c_.is_symmetric()) throw Error(ErrorCode::AsymmetricC, "C is not symmetric");
}

Quadric Quadric::zero(unsigned n) {
  return Quadric(Matrix(n, n), Matrix(n, n), Matrix(n, n));
}

Quadric Quadric::from_poly(const Poly& q) {
  const unsigned n = q.n();
  Matrix a(n, n), b(n, n), c(n, n);
  const GaussRational half(Rational(1, 2));
  for (const auto& [m, coeff] : q.terms()) {
    if (m.w() > 0 || m.total_degree() != 2)
      throw Error(ErrorCode::InvalidArgument,
                  "quadric polynomial must be homogeneous quadratic in z, zb");
    std::vector<unsigned> zs, zbs;
    for (unsigned i = 1; i <= n; ++i) {
      for (unsigned e = 0; e < m.z(i); ++e) zs.push_back(i - 1);
      for (unsigned e = 0; e < m.zb(i); ++e) zbs.push_back(i - 1);
    }
    if (zs.size() == 1) {
      a(zbs[0], zs[0]) += coeff;
    } else if (zbs.size() == 2) {
      auto [i, j] = std::pair{zbs[0], zbs[1]};
      if (i == j) {
        b(i, i) += coeff.conj();
      } else {
        b(i, j) += coeff.conj() * half;
        b(j, i) += coeff.conj() * half;
      }
    } else {
      auto [i, j] = std::pair{zs[0], zs[1]};
      if (i == j) {
        c(i, i) += coeff;
      } else {
        c(i, j) += coeff * half;
        c(j, i) += coeff * half;
      }
    }
  }
  return Quadric(std::move(a), std::move(b), std::move(c));
}

Poly Quadric::poly() const {
  const unsigned dim = n();
  Poly q(dim);
  for (unsigned i = 0; i < dim; ++i)
    for (unsigned j = 0; j < dim; ++j) {
      Monomial ma(dim), mb(dim), mc(dim);
      ma.set(Var::zb(i + 1), 1);
      ma.set(Var::z(j + 1), ma.z(j + 1) + 1);
      q.add_term(ma, a_(i, j));
      mb.set(Var::zb(i + 1), 1);
      mb.set(Var::zb(j + 1), mb.zb(j + 1) + 1);
      q.add_term(mb, b_(i, j).conj());
      mc.set(Var::z(i + 1), 1);
      mc.set(Var::z(j + 1), mc.z(j + 1) + 1);
      q.add_term(mc, c_(i, j));
    }
  return q;
}

Manifold::Manifold(Quadric q) : Manifold(q, Poly(q.n())) {}

Manifold::Manifold(Quadric q, Poly e) : quadric_(std::move(q)), e_(std::move(e)) {
  if (e_.n() != quadric_.n()) {
    if (!e_.is_zero())
      throw Error(ErrorCode::DimensionMismatch,
                  "E lives in a different dimension than the quadric");
    e_ = Poly(quadric_.n());
  }
  if (e_.contains_w()) throw Error(ErrorCode::ContainsW, "E must not contain w");
  if (!e_.is_zero() && e_.order() < 3)
    throw Error(ErrorCode::EOrderTooLow,
                "every term of E must have total degree >= 3");
  rho_ = quadric_.poly() + e_;
}

Manifold Manifold::from_rho(const Poly& rho) {
  if (rho.contains_w()) throw Error(ErrorCode::ContainsW, "rho must not contain w");
  if (!rho.is_zero() && rho.order() < 2)
    throw Error(ErrorCode::InvalidArgument,
                "rho must have no constant or linear terms");
  Poly quadratic = homogeneous_part(rho, 2, false);
  return Manifold(Quadric::from_poly(quadratic), rho - quadratic);
}

std::size_t rank_condition(const Quadric& q) {
  return rank(q.A().adjoint().vstack(q.B()));
}

Poly CRField::apply(const Poly& f) const {
  return coeff_k * differentiate(f, Var::zb(k)) +
         coeff_l * differentiate(f, Var::zb(l));
}

CRField cr_field(const Manifold& m, unsigned k, unsigned l) {
  require_n_ge_2(m.n());
  if (k < 1 || l > m.n() || k >= l)
    throw Error(ErrorCode::IndexOutOfRange,
                "CR field needs 1 <= k < l <= n");
  return CRField{k, l, zb_partial(m, l), -zb_partial(m, k)};
}

std::vector<CRField> cr_fields(const Manifold& m) {
  require_n_ge_2(m.n());
  std::vector<Poly> partials;
  for (unsigned j = 1; j <= m.n(); ++j) partials.push_back(zb_partial(m, j));
  std::vector<CRField> out;
  for (unsigned k = 1; k <= m.n(); ++k)
    for (unsigned l = k + 1; l <= m.n(); ++l)
      out.push_back(CRField{k, l, partials[l - 1], -partials[k - 1]});
  return out;
}

CRCheck is_cr(const Manifold& m, const Poly& f) {
  require_n_ge_2(m.n());
  if (f.n() != m.n())
    throw Error(ErrorCode::DimensionMismatch, "function and manifold dimensions differ");
  if (f.contains_w())
    throw Error(ErrorCode::ContainsW,
                "functions on M are written in z, zb only");
  CRCheck check;
  check.vacuous = true;
  for (unsigned j = 1; j <= m.n(); ++j)
    if (!zb_partial(m, j).is_zero()) check.vacuous = false;
  check.is_cr = true;
  for (const auto& field : cr_fields(m)) {
    Poly image = field.apply(f);
    if (!image.is_zero()) {
      check.is_cr = false;
      check.failing_pair = std::pair{field.k, field.l};
      check.defect = std::move(image);
      break;
    }
  }
  return check;
}

Poly linear_zbar(unsigned n, const Vector& v) {
  Poly p(n);
  for (unsigned k = 1; k <= n; ++k) {
    Monomial m(n);
    m.set(Var::zb(k), 1);
    p.add_term(m, v.at(k - 1));
  }
  return p;
}

std::vector<Vector> cr_linear_space(const Quadric& q) {
  const unsigned n = q.n();
  require_n_ge_2(n);
  Manifold model(q);
  auto fields = cr_fields(model);
  // Column k: images of zb_k under every field.
  std::vector<std::vector<Poly>> columns;
  for (unsigned k = 1; k <= n; ++k) {
    Poly zbk = Poly::variable(n, Var::zb(k));
    std::vector<Poly> blocks;
    for (const auto& field : fields) blocks.push_back(field.apply(zbk));
    columns.push_back(std::move(blocks));
  }
  auto sys = coefficient_system(columns);
  return kernel(sys.matrix);
}

Quadric transform(const Quadric& q, const Matrix& t) {
  const unsigned n = q.n();
  if (t.rows() != n || t.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "transform must be n x n");
  if (determinant(t).is_zero())
    throw Error(ErrorCode::SingularTransform, "transform is singular");
  Matrix tt = t.transpose();
  return Quadric(t.adjoint() * q.A() * t, tt * q.B() * t, tt * q.C() * t);
}

Manifold transform(const Manifold& m, const Matrix& t) {
  Quadric q = transform(m.quadric(), t);
  const unsigned n = m.n();
  std::vector<Poly> images;
  for (unsigned i = 0; i < n; ++i) {
    Poly img(n);
    for (unsigned j = 0; j < n; ++j) img += Poly::variable(n, Var::z(j + 1)) * t(i, j);
    images.push_back(std::move(img));
  }
  for (unsigned i = 0; i < n; ++i) {
    Poly img(n);
    for (unsigned j = 0; j < n; ++j)
      img += Poly::variable(n, Var::zb(j + 1)) * t(i, j).conj();
    images.push_back(std::move(img));
  }
  images.push_back(Poly::variable(n, Var::w()));
  return Manifold(std::move(q), substitute(m.higher_order(), images));
}

}  // namespace crsing
