#include "crsing/classify.hpp"

#include "crsing/error.hpp"
#include "crsing/extend.hpp"

namespace crsing {
namespace {

Poly z(unsigned n, unsigned i) { return Poly::variable(n, Var::z(i)); }
Poly zb(unsigned n, unsigned i) { return Poly::variable(n, Var::zb(i)); }

// Conjugation on the parameter ring: s and t are real, xi_j <-> conj(xi_j).
Poly conj_param(const Poly& p) {
  const unsigned n = p.n();
  Poly out(n);
  for (const auto& [m, c] : p.terms()) {
    Monomial img = m;
    for (unsigned j = 2; j <= n; ++j) {
      img.set(Var::z(j), m.zb(j));
      img.set(Var::zb(j), m.z(j));
    }
    out.add_term(img, c.conj());
  }
  return out;
}

}  // namespace

std::string_view to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::NonExceptional: return "NonExceptional";
    case ClassKind::RankZero: return "RankZero";
    case ClassKind::Case1: return "Case1";
    case ClassKind::Case2: return "Case2";
    case ClassKind::Case3: return "Case3";
    case ClassKind::Case4: return "Case4";
  }
  return "?";
}

std::string to_string(const ClassLabel& label) {
  std::string out(to_string(label.kind));
  if (label.a_squared) out += "(a^2=" + label.a_squared->get_str() + ")";
  return out;
}

std::string_view to_string(CRImageForm form) {
  switch (form) {
    case CRImageForm::Form1: return "Form1";
    case CRImageForm::Form2: return "Form2";
    case CRImageForm::Form3: return "Form3";
    case CRImageForm::Form4: return "Form4";
    case CRImageForm::Form5: return "Form5";
    case CRImageForm::NotApplicable: return "NotApplicable";
  }
  return "?";
}

std::string_view to_string(QuadraticMatch m) {
  switch (m) {
    case QuadraticMatch::Matches: return "Matches";
    case QuadraticMatch::Mismatch: return "Mismatch";
    case QuadraticMatch::NormalizationRequired: return "NormalizationRequired";
  }
  return "?";
}

Normalization normalize_rank1(const Quadric& q) {
  const unsigned n = q.n();
  Matrix stacked = q.A().adjoint().vstack(q.B());
  RowEchelon ech = row_echelon(SparseMatrix::from_dense(stacked));
  if (ech.rank() != 1)
    throw Error(ErrorCode::RankNotOne,
                "rank [A*; B] is " + std::to_string(ech.rank()) + ", not 1");
  Matrix t(n, n);
  t(ech.pivot_cols.front(), 0) = GaussRational(1);
  auto ker = ech.kernel();
  for (std::size_t c = 0; c < ker.size(); ++c)
    for (unsigned r = 0; r < n; ++r) t(r, c + 1) = ker[c][r];
  return {t, transform(q, t)};
}

ClassLabel classify_quadric(const Quadric& q) {
  const auto r = rank_condition(q);
  if (r == 0) return {ClassKind::RankZero, std::nullopt};
  if (r >= 2) return {ClassKind::NonExceptional, std::nullopt};
  Quadric nq = normalize_rank1(q).normalized;
  const GaussRational mu = nq.B()(0, 0).conj();
  bool any = false, beyond_first = false;
  for (unsigned j = 0; j < nq.n(); ++j)
    if (!nq.A()(0, j).is_zero()) {
      any = true;
      if (j > 0) beyond_first = true;
    }
  if (!any) return {ClassKind::Case4, std::nullopt};
  if (!beyond_first)
    return {ClassKind::Case3, Rational(mu.norm2() / nq.A()(0, 0).norm2())};
  return {mu.is_zero() ? ClassKind::Case2 : ClassKind::Case1, std::nullopt};
}

Quadric normal_form(const ClassLabel& label, unsigned n) {
  require_n_ge_2(n);
  Poly q(n);
  switch (label.kind) {
    case ClassKind::Case1: q = zb(n, 1) * z(n, 2) + zb(n, 1) * zb(n, 1); break;
    case ClassKind::Case2: q = zb(n, 1) * z(n, 2); break;
    case ClassKind::Case3: {
      Rational a;
      if (!label.a_squared || sgn(*label.a_squared) < 0 ||
          !sqrt_exact(*label.a_squared, a))
        throw Error(ErrorCode::InvalidArgument,
                    "Case3 normal form needs a^2 to be the square of a rational");
      q = zb(n, 1) * z(n, 1) + GaussRational(a) * zb(n, 1) * zb(n, 1);
      break;
    }
    case ClassKind::Case4: q = zb(n, 1) * zb(n, 1); break;
    case ClassKind::RankZero: break;
    case ClassKind::NonExceptional:
      throw Error(ErrorCode::InvalidArgument, "no exceptional normal form for rank >= 2");
  }
  return Quadric::from_poly(q);
}

CRImageForm classify_cr_image(const Manifold& m) {
  switch (classify_quadric(m.quadric()).kind) {
    case ClassKind::Case1: return CRImageForm::Form1;
    case ClassKind::Case2: return CRImageForm::Form2;
    case ClassKind::Case3: return CRImageForm::Form3;
    case ClassKind::Case4: return CRImageForm::Form4;
    case ClassKind::RankZero: return CRImageForm::Form5;
    case ClassKind::NonExceptional: break;
  }
  return CRImageForm::NotApplicable;
}

std::vector<std::string> levi_flat_param_names(unsigned n) {
  std::vector<std::string> names{"s"};
  for (unsigned j = 2; j <= n; ++j) names.push_back("xi" + std::to_string(j));
  names.push_back("t");
  for (unsigned j = 2; j <= n; ++j) names.push_back("xib" + std::to_string(j));
  names.push_back("w");
  return names;
}

LeviFlatParam levi_flat_image_param(const ClassLabel& label, unsigned n) {
  if (label.kind == ClassKind::NonExceptional || label.kind == ClassKind::RankZero)
    throw Error(ErrorCode::InvalidArgument,
                "parametrizations exist only for Case1..Case4");
  LeviFlatParam out;
  out.label = label;
  out.quadric = normal_form(label, n);
  const Poly s = z(n, 1), t = zb(n, 1);
  const Poly z1 = s + GaussRational::i() * t;
  const Poly zb1 = s - GaussRational::i() * t;
  // Q(z1, z', zb1): the remaining barred slots are not part of the input
  std::vector<Poly> images;
  images.push_back(z1);
  for (unsigned j = 2; j <= n; ++j) images.push_back(z(n, j));
  images.push_back(zb1);
  for (unsigned j = 2; j <= n; ++j) images.push_back(Poly(n));
  images.push_back(Poly(n));
  Poly w = substitute(out.quadric.poly(), images);

  out.map.push_back(z1);
  for (unsigned j = 2; j <= n; ++j) out.map.push_back(z(n, j));
  out.map.push_back(w);

  out.holomorphic_in_xi = true;
  for (const auto& [m, c] : w.terms())
    for (unsigned j = 2; j <= n; ++j)
      if (m.zb(j) != 0) out.holomorphic_in_xi = false;

  // Q(phi, conj(phi)) on the image point
  std::vector<Poly> point;
  for (unsigned j = 0; j < n; ++j) point.push_back(out.map[j]);
  for (unsigned j = 0; j < n; ++j) point.push_back(conj_param(out.map[j]));
  point.push_back(Poly(n));
  out.identity_holds = substitute(out.quadric.poly(), point) == w;
  return out;
}

FirstIntegralReport check_first_integral(const Manifold& m, const Poly& g,
                                         unsigned N) {
  require_n_ge_2(m.n());
  if (g.n() != m.n())
    throw Error(ErrorCode::DimensionMismatch, "g and manifold dimensions differ");
  if (g.contains_w())
    throw Error(ErrorCode::ContainsW, "g must be a polynomial in z, zb");
  const auto r = rank_condition(m.quadric());
  if (r == 0) throw Error(ErrorCode::DegenerateQuadric, "Q has no antiholomorphic part");
  if (r < 2) throw Error(ErrorCode::RankTooLow, "rank [A*; B] is 1");

  FirstIntegralReport rep;
  rep.real_valued = conjugate_poly(g) == g;
  rep.cr_through_order = true;
  for (const auto& field : cr_fields(m)) {
    Poly image = truncate(field.apply(g), N);
    if (image.is_zero()) continue;
    rep.cr_through_order = false;
    auto k = static_cast<unsigned>(image.order());
    if (!rep.failing_degree || k < *rep.failing_degree) rep.failing_degree = k;
  }

  const Poly q = m.quadric().poly();
  if (!(conjugate_poly(q) == q)) {
    rep.quadratic = QuadraticMatch::NormalizationRequired;
    return rep;
  }
  const Poly g2 = homogeneous_part(g, 2, false);
  const auto& [lead, lead_coeff] = *q.terms().begin();
  const GaussRational alpha = g2.coefficient(lead) / lead_coeff;
  if (!alpha.is_zero() && alpha.is_real() && g2 == alpha * q) {
    rep.quadratic = QuadraticMatch::Matches;
    rep.alpha = alpha.re();
  } else {
    rep.quadratic = QuadraticMatch::Mismatch;
  }
  return rep;
}

FormalExtension flatten_from_first_integral(const Manifold& m, const Poly& g,
                                            unsigned N) {
  FirstIntegralReport rep = check_first_integral(m, g, N);
  if (!rep.cr_through_order)
    throw Error(ErrorCode::NotCRAtDegree,
                "g is not CR on M: failure at degree " +
                    std::to_string(*rep.failing_degree),
                *rep.failing_degree);
  if (!rep.real_valued)
    throw Error(ErrorCode::NotApplicable, "g is not real-valued");
  if (rep.quadratic == QuadraticMatch::NormalizationRequired)
    throw Error(ErrorCode::NormalizationRequired,
                "Q is not real-valued; normalize A = A* and C = B first");
  if (rep.quadratic == QuadraticMatch::Mismatch)
    throw Error(ErrorCode::NotApplicable,
                "quadratic part of g is not a nonzero real multiple of Q");
  FormalExtension ext = formal_extend(m, g, N, RankPolicy::RequireRankTwo);
  if (ext.residual_order <= N)
    throw std::logic_error("flattening residual survives through order N");
  return ext;
}

}  // namespace crsing
