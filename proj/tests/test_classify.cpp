#include <gtest/gtest.h>

#include "crsing/classify.hpp"
#include "crsing/suites.hpp"
#include "oracle.hpp"

using namespace crsing;
using oracle::P;

namespace {

Quadric Q(const std::string& q, unsigned n = 2) {
  return Quadric::from_poly(parse_poly(q, n));
}

Manifold M(const std::string& rho, unsigned n = 2) {
  return Manifold::from_rho(parse_poly(rho, n));
}

ClassLabel label(ClassKind k) { return {k, std::nullopt}; }

}  // namespace

TEST(Normalize, Examples) {
  auto a = normalize_rank1(Q("zb1*z2"));
  EXPECT_EQ(a.normalized, transform(Q("zb1*z2"), a.T));
  EXPECT_TRUE(a.normalized.B().is_zero());
  EXPECT_FALSE(a.normalized.A()(0, 1).is_zero());

  auto b = normalize_rank1(Q("zb2^2"));
  EXPECT_EQ(b.T, Matrix::from_rows({{0, 1}, {1, 0}}));
  EXPECT_EQ(b.normalized.poly(), P("zb1^2"));

  auto c = normalize_rank1(Q("z1*zb1 + zb1^2"));
  EXPECT_EQ(c.T, Matrix::identity(2));

  EXPECT_CRSING_ERROR(normalize_rank1(Q("z1*zb1 + z2*zb2")), ErrorCode::RankNotOne);
  EXPECT_CRSING_ERROR(normalize_rank1(Quadric::zero(2)), ErrorCode::RankNotOne);
}

TEST(Normalize, SupportInFirstColumn) {
  Sampler s(81);
  int seen = 0;
  for (int trial = 0; trial < 200 && seen < 30; ++trial) {
    Quadric q = s.quadric(2 + trial % 2);
    if (rank_condition(q) != 1) continue;
    ++seen;
    auto nq = normalize_rank1(q).normalized;
    for (unsigned r = 1; r < q.n(); ++r)
      for (unsigned c = 0; c < q.n(); ++c) EXPECT_TRUE(nq.A()(r, c).is_zero());
    for (unsigned r = 0; r < q.n(); ++r)
      for (unsigned c = 0; c < q.n(); ++c)
        if (r || c) {
          EXPECT_TRUE(nq.B()(r, c).is_zero());
        }
  }
  EXPECT_GE(seen, 10);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_quadric(Q("zb1*z2 + zb1^2")), label(ClassKind::Case1));
  EXPECT_EQ(classify_quadric(Q("z1*zb1 + zb1*z2")), label(ClassKind::Case2));
  EXPECT_EQ(classify_quadric(Q("zb1*z2")), label(ClassKind::Case2));
  auto c3 = classify_quadric(Q("2*z1*zb1 + 3*zb1^2"));
  EXPECT_EQ(c3.kind, ClassKind::Case3);
  EXPECT_EQ(*c3.a_squared, Rational(9, 4));
  EXPECT_EQ(to_string(c3), "Case3(a^2=9/4)");
  EXPECT_EQ(classify_quadric(Q("zb2^2 + z1^2")), label(ClassKind::Case4));
  EXPECT_EQ(classify_quadric(Q("z1*z2")), label(ClassKind::RankZero));
  EXPECT_EQ(classify_quadric(Q("z1*zb1 + z2*zb2")), label(ClassKind::NonExceptional));
}

TEST(Classify, Case2ExplicitEquivalence) {
  // z -> (z1, z2 - z1) carries |z1|^2 + zb1 z2 to zb1 z2.
  Matrix t = Matrix::from_rows({{1, 0}, {-1, 1}});
  EXPECT_EQ(transform(Q("z1*zb1 + zb1*z2"), t).poly(), P("zb1*z2"));
}

TEST(Classify, NormalFormsAreDistinctAndFixed) {
  std::vector<ClassLabel> labels = {label(ClassKind::Case1), label(ClassKind::Case2),
                                    {ClassKind::Case3, Rational(0)},
                                    {ClassKind::Case3, Rational(9, 4)},
                                    label(ClassKind::Case4)};
  for (unsigned n : {2u, 3u}) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      EXPECT_EQ(classify_quadric(normal_form(labels[i], n)), labels[i]) << to_string(labels[i]);
      for (std::size_t j = 0; j < i; ++j)
        EXPECT_FALSE(classify_quadric(normal_form(labels[i], n)) == labels[j]);
    }
  }
  EXPECT_CRSING_ERROR(normal_form({ClassKind::Case3, Rational(2)}, 2),
                      ErrorCode::InvalidArgument);
}

TEST(Classify, InvariantUnderTransformAndHolomorphicTerms) {
  Sampler s(82);
  std::vector<ClassLabel> labels = {label(ClassKind::Case1), label(ClassKind::Case2),
                                    {ClassKind::Case3, Rational(9, 4)},
                                    {ClassKind::Case3, Rational(1, 9)},
                                    label(ClassKind::Case4)};
  for (const auto& l : labels)
    for (int trial = 0; trial < 20; ++trial) {
      const unsigned n = 2 + trial % 2;
      Quadric base = normal_form(l, n);
      Quadric q(base.A(), base.B(), s.symmetric(n, 0.4));
      EXPECT_EQ(classify_quadric(transform(q, s.invertible(n))), l) << to_string(l);
    }
  // The Case3 parameter comes out exactly from non-normalized data.
  Quadric raw = Q("2*z1*zb1 + 3*zb1^2");
  for (int trial = 0; trial < 20; ++trial)
    EXPECT_EQ(*classify_quadric(transform(raw, s.invertible(2))).a_squared, Rational(9, 4));
}

TEST(Classify, RankOneHasLinearCRFunction) {
  Sampler s(83);
  for (int trial = 0; trial < 100; ++trial) {
    Quadric q = s.quadric(2 + trial % 2);
    if (rank_condition(q) != 1) continue;
    EXPECT_EQ(cr_linear_space(q).size(), 1u);
  }
}

TEST(CRImage, Examples) {
  Poly norm = P("z1*zb1");
  Poly er = (P("zb2") + P("i*z1*zb1") + norm.pow(2)).pow(2);
  EXPECT_EQ(classify_cr_image(Manifold::from_rho(er)), CRImageForm::Form4);
  EXPECT_EQ(classify_cr_image(M("zb1^3")), CRImageForm::Form5);
  EXPECT_EQ(classify_cr_image(M("z1*zb1 + z2*zb2")), CRImageForm::NotApplicable);
  EXPECT_EQ(classify_cr_image(M("zb1*z2 + zb1^2")), CRImageForm::Form1);
  EXPECT_EQ(classify_cr_image(M("zb1*z2 + z1^3")), CRImageForm::Form2);
  EXPECT_EQ(classify_cr_image(M("z1*zb1")), CRImageForm::Form3);
}

TEST(LeviFlat, Parametrizations) {
  auto c2 = levi_flat_image_param(label(ClassKind::Case2), 2);
  ASSERT_EQ(c2.map.size(), 3u);
  EXPECT_EQ(c2.map[0], P("z1 + i*zb1"));
  EXPECT_EQ(c2.map[1], P("z2"));
  EXPECT_EQ(c2.map[2], P("z1*z2 - i*zb1*z2"));
  EXPECT_TRUE(c2.identity_holds);
  EXPECT_TRUE(c2.holomorphic_in_xi);
  EXPECT_EQ(format_poly_named(c2.map[2], levi_flat_param_names(2)), "s*xi2 - i*t*xi2");

  auto c4 = levi_flat_image_param(label(ClassKind::Case4), 2);
  EXPECT_EQ(c4.map[2], P("z1 - i*zb1").pow(2));
  EXPECT_TRUE(c4.identity_holds);

  auto c3 = levi_flat_image_param({ClassKind::Case3, Rational(0)}, 2);
  EXPECT_EQ(c3.map[2], P("z1 - i*zb1") * P("z1 + i*zb1"));
  EXPECT_TRUE(c3.identity_holds);

  for (unsigned n : {2u, 3u, 4u})
    for (const auto& l : {label(ClassKind::Case1), label(ClassKind::Case2),
                          ClassLabel{ClassKind::Case3, Rational(4)}, label(ClassKind::Case4)})
      EXPECT_TRUE(levi_flat_image_param(l, n).identity_holds) << to_string(l) << " n=" << n;

  EXPECT_CRSING_ERROR(levi_flat_image_param(label(ClassKind::NonExceptional), 2),
                      ErrorCode::InvalidArgument);
}

TEST(FirstIntegral, Examples) {
  Manifold ball = M("z1*zb1 + z2*zb2");
  auto ok = check_first_integral(ball, P("z1*zb1 + z2*zb2"), 6);
  EXPECT_TRUE(ok.passes());
  EXPECT_EQ(*ok.alpha, Rational(1));

  EXPECT_FALSE(check_first_integral(ball, P("z1"), 6).real_valued);

  Manifold lam = M("z1*zb1 - z2*zb2 + 1/3*z1^2 + 1/3*z2^2 + 1/3*zb1^2 + 1/3*zb2^2");
  auto mis = check_first_integral(lam, P("z1*zb1 + z2*zb2"), 4);
  EXPECT_EQ(mis.quadratic, QuadraticMatch::Mismatch);
  auto scaled = check_first_integral(lam, P("2") * lam.rho(), 4);
  EXPECT_TRUE(scaled.passes());
  EXPECT_EQ(*scaled.alpha, Rational(2));

  EXPECT_EQ(check_first_integral(M("zb1^2 + zb2^2"), P("z1*zb1"), 4).quadratic,
            QuadraticMatch::NormalizationRequired);
  EXPECT_CRSING_ERROR(check_first_integral(M("zb1*z2"), P("z1"), 4), ErrorCode::RankTooLow);
}

TEST(Flatten, Examples) {
  Manifold ball = M("z1*zb1 + z2*zb2");
  EXPECT_EQ(flatten_from_first_integral(ball, ball.rho(), 6).F, P("w"));

  // Real E; g = rho + rho^2 is the restriction of w + w^2.
  Manifold m = M("z1*zb1 + z2*zb2 + z1^2*zb1 + z1*zb1^2");
  Poly g = truncate(m.rho() + m.rho().pow(2), 8);
  auto ext = flatten_from_first_integral(m, g, 8);
  EXPECT_EQ(ext.F, P("w + w^2"));
  EXPECT_GT(ext.residual_order, 8u);

  try {
    flatten_from_first_integral(ball, P("z1*zb1"), 6);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCRAtDegree);
    EXPECT_EQ(e.degree(), 2u);
  }
  EXPECT_CRSING_ERROR(flatten_from_first_integral(ball, P("i*z1*zb1 + i*z2*zb2"), 6),
                      ErrorCode::NotApplicable);
}
