#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "crsing/extend.hpp"
#include "crsing/manifold.hpp"
#include "crsing/suites.hpp"
#include "oracle.hpp"

using namespace crsing;
using oracle::P;

namespace {

Quadric Q(const std::string& q, unsigned n = 2) {
  return Quadric::from_poly(parse_poly(q, n));
}

Quadric lemma_family(const GaussRational& beta, const GaussRational& delta) {
  return Quadric(Matrix::from_rows({{1, beta}, {0, delta}}), Matrix(2, 2), Matrix(2, 2));
}

// The paper's comparator for n = 2, written out literally.
bool paper_less(const Monomial& m, const Monomial& p) {
  const unsigned a1 = m.z(1), a2 = m.z(2), b1 = m.zb(1);
  const unsigned a3 = p.z(1), a4 = p.z(2), b3 = p.zb(1);
  if (a1 + a2 != a3 + a4) return a1 + a2 < a3 + a4;
  if (a1 != a3) return a1 < a3;
  return b1 < b3;
}

}  // namespace

TEST(Xd, LemmaExampleDegreeThree) {
  auto x = build_Xd(lemma_family(GaussRational(Rational(1, 2), 1), 3), 3);
  EXPECT_EQ(x.columns.size(), 20u);
  EXPECT_EQ(rank(x.matrix), 14u);
  EXPECT_EQ(oracle::dense_rank(oracle::rows_of(x.matrix)), 14u);
  EXPECT_EQ(x.pairs.size(), 1u);
}

TEST(Xd, ZeroQuadricGivesZeroMatrix) {
  for (unsigned d = 1; d <= 4; ++d) {
    auto x = build_Xd(Quadric::zero(3), d);
    EXPECT_EQ(x.matrix.nonzeros(), 0u);
    EXPECT_EQ(x.pairs.size(), 3u);
  }
}

TEST(Xd, RequiresTwoVariables) {
  EXPECT_CRSING_ERROR(build_Xd(Q("z1*zb1", 1), 2), ErrorCode::RequiresNGe2);
}

TEST(Xd, ColumnOrderMatchesPaperComparator) {
  for (unsigned d = 1; d <= 6; ++d) {
    auto cols = zzbar_monomials(2, d);
    EXPECT_EQ(cols.size(), oracle::binomial(d + 3, 3));
    for (std::size_t k = 0; k + 1 < cols.size(); ++k)
      EXPECT_TRUE(paper_less(cols[k], cols[k + 1])) << k;
  }
}

TEST(Xd, EntriesAreCoefficientsOfFieldImages) {
  Quadric q = Q("z1*zb1 + 2*zb1*z2 + i*zb2^2 + z1*z2");
  auto x = build_Xd(q, 2);
  auto fields = cr_fields(Manifold(q));
  for (std::size_t c = 0; c < x.columns.size(); ++c) {
    Poly image = fields[0].apply(Poly::term(x.columns[c], 1));
    for (std::size_t r = 0; r < x.columns.size(); ++r)
      EXPECT_EQ(x.matrix.at(x.row_index(0, r), c), image.coefficient(x.columns[r]));
  }
}

TEST(Xd, CsvLayout) {
  auto x = build_Xd(Q("zb1*z2"), 1);
  std::istringstream csv(x.to_csv());
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "row,zb2,zb1,z2,z1");
  std::vector<std::string> lines;
  while (std::getline(csv, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 4u);
  // L = -z2 d/dzb2 sends zb2 to -z2.
  EXPECT_EQ(lines[2], "L12:z2,-1,0,0,0");
  EXPECT_EQ(lines[0], "L12:zb2,0,0,0,0");
}

TEST(RankFormula, SmallValues) {
  EXPECT_EQ(rank_formula(1), 2u);
  EXPECT_EQ(rank_formula(2), 6u);
  EXPECT_EQ(rank_formula(3), 14u);
  for (unsigned d = 1; d <= 12; ++d) {
    EXPECT_EQ(rank_formula(d), oracle::split_rank_formula(d)) << d;
    EXPECT_EQ(oracle::binomial(d + 3, 3) - rank_formula(d), (d + 2) * (d + 2) / 4) << d;
  }
}

TEST(RankFormula, ExactRankAndBlocks) {
  Sampler s(51);
  for (int trial = 0; trial < 6; ++trial) {
    Quadric q = lemma_family(s.entry(0.3), s.nonzero());
    for (unsigned d = 1; d <= 6; ++d) {
      auto x = build_Xd(q, d);
      auto rows = oracle::rows_of(x.matrix);
      EXPECT_EQ(oracle::dense_rank(rows), rank_formula(d));
      // Columns of zb-degree j only feed rows of zb-degree j - 1.
      unsigned long block_sum = 0;
      for (unsigned j = 1; j <= d; ++j) {
        std::vector<std::vector<GaussRational>> block(rows.size());
        for (std::size_t c = 0; c < x.columns.size(); ++c)
          if (x.columns[c].zb_degree() == j)
            for (std::size_t r = 0; r < rows.size(); ++r) block[r].push_back(rows[r][c]);
        const auto r = oracle::dense_rank(block);
        EXPECT_EQ(r, d - j + 1 <= j ? (j + 1) * (d - j + 1) : j * (d - j + 2));
        block_sum += r;
      }
      EXPECT_EQ(block_sum, rank_formula(d));
    }
  }
}

TEST(CRBasis, Examples) {
  Quadric q = Q("z1*zb1 + z2*zb2");
  auto two = cr_homogeneous_basis(q, 2);
  EXPECT_EQ(two.dim(), 4u);
  // The span contains z1^2, z1 z2, z2^2 and Q.
  std::vector<std::vector<GaussRational>> span;
  auto cols = zzbar_monomials(2, 2);
  auto vec = [&](const Poly& p) {
    std::vector<GaussRational> v;
    for (const auto& m : cols) v.push_back(p.coefficient(m));
    return v;
  };
  for (const auto& b : two.basis) span.push_back(vec(b));
  for (const char* extra : {"z1^2", "z1*z2", "z2^2", "z1*zb1 + z2*zb2"}) {
    auto with = span;
    with.push_back(vec(P(extra)));
    EXPECT_EQ(oracle::dense_rank(with), 4u) << extra;
  }

  auto one = cr_homogeneous_basis(q, 1);
  EXPECT_EQ(one.dim(), 2u);
  for (const auto& b : one.basis) EXPECT_FALSE(b.contains_zbar());

  auto lin = cr_homogeneous_basis(Q("zb1*z2"), 1);
  EXPECT_EQ(lin.dim(), 3u);
  EXPECT_EQ(lin.monomials, 4u);
  EXPECT_EQ(lin.rank, 1u);
}

TEST(CRBasis, BasisElementsAreCR) {
  Sampler s(52);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned n = 2 + trial % 2;
    Quadric q = s.quadric(n);
    for (unsigned d = 1; d <= 3; ++d) {
      auto space = cr_homogeneous_basis(q, d);
      EXPECT_EQ(space.dim() + space.rank, space.monomials);
      for (const auto& b : space.basis) EXPECT_TRUE(is_cr(Manifold(q), b).is_cr);
    }
  }
}

TEST(CRBasis, DimensionForRankTwoInTwoVariables) {
  Sampler s(53);
  for (int trial = 0; trial < 25; ++trial) {
    Quadric q = s.quadric_rank2(2);
    for (unsigned d = 1; d <= 5; ++d)
      EXPECT_EQ(cr_homogeneous_basis(q, d).dim(), (d + 2) * (d + 2) / 4)
          << format_poly(q.poly()) << " d=" << d;
  }
}

TEST(Extend, Examples) {
  Sampler s(54);
  for (int trial = 0; trial < 10; ++trial) {
    Quadric q = s.quadric(2 + trial % 2);
    auto r = extend_homogeneous(q, q.poly(), 2);
    EXPECT_EQ(r.F, Poly::variable(q.n(), Var::w()));
    EXPECT_TRUE(r.residual.is_zero());
  }

  Quadric ball = Q("z1*zb1 + z2*zb2");
  auto r = extend_homogeneous(ball, P("z1^2 + 3*z1*zb1 + 3*z2*zb2"), 2);
  EXPECT_EQ(r.F, P("z1^2 + 3*w"));
  EXPECT_TRUE(r.unique);

  EXPECT_CRSING_ERROR(extend_homogeneous(Q("zb1*z2"), P("zb1"), 1), ErrorCode::NoExtension);
  EXPECT_CRSING_ERROR(extend_homogeneous(ball, P("zb1"), 1), ErrorCode::NotCR);
  EXPECT_CRSING_ERROR(extend_homogeneous(ball, P("z1 + z1^2"), 1), ErrorCode::InvalidArgument);
}

TEST(Extend, PolynomialExamples) {
  Quadric sq = Q("zb1^2 + zb2^2");
  EXPECT_EQ(extend_polynomial(sq, P("zb1^2 + zb2^2 + z1")).F, P("w + z1"));
  Quadric ball = Q("z1*zb1 + z2*zb2");
  EXPECT_EQ(extend_polynomial(ball, ball.poly().pow(2)).F, P("w^2"));
  try {
    extend_polynomial(Q("z1*zb1 + zb1^2"), P("zb1"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoExtension);
    EXPECT_EQ(e.degree(), 1u);
  }
  try {
    extend_polynomial(ball, P("z1 + zb1^3"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCR);
    EXPECT_EQ(e.degree(), 3u);
  }
  EXPECT_CRSING_ERROR(extend_polynomial(Q("zb1*z2"), P("z1"), true), ErrorCode::RankTooLow);
  EXPECT_CRSING_ERROR(extend_polynomial(Q("z1*z2"), P("z1"), true),
                      ErrorCode::DegenerateQuadric);
}

TEST(Extend, RoundtripOnRankTwo) {
  Sampler s(55);
  oracle::Points rnd(55);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned n = 2 + trial % 2;
    Quadric q = s.quadric_rank2(n);
    Poly F = s.holomorphic(n, 5, 6);
    Poly f = substitute_w(F, q.poly());
    auto r = extend_polynomial(q, f, true);
    EXPECT_EQ(r.F, F);
    EXPECT_TRUE(r.unique);
    EXPECT_TRUE(r.residual.is_zero());
    if (!f.is_zero()) {
      EXPECT_EQ(r.F.weighted_degree(), f.total_degree());
    }
    // Independent check: F(z, Q) = f at a random point.
    auto pt = rnd.point(n);
    auto at = pt;
    at[2 * n] = oracle::eval(q.poly(), pt);
    EXPECT_EQ(oracle::eval(F, at), oracle::eval(f, pt));
  }
}

TEST(Extend, MatchingMatrixInjectiveForRankTwo) {
  Sampler s(56);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned n = 2 + trial % 2;
    Quadric q = s.quadric_rank2(n);
    for (unsigned d = 1; d <= 5; ++d)
      EXPECT_EQ(matching_rank(q, d), oracle::weighted_count(n, d));
  }
  EXPECT_EQ(matching_system(Q("zb1*z2"), 4).holomorphic.size(), oracle::weighted_count(2, 4));
}

TEST(Extend, BatchAgreesWithSingle) {
  Quadric q = Q("zb1*z2");
  auto space = cr_homogeneous_basis(q, 2);
  auto batch = extend_homogeneous_batch(q, space.basis, 2);
  ASSERT_EQ(batch.size(), space.basis.size());
  for (std::size_t k = 0; k < batch.size(); ++k) {
    if (batch[k]) {
      EXPECT_EQ(extend_homogeneous(q, space.basis[k], 2).F, batch[k]->F);
    } else {
      EXPECT_CRSING_ERROR(extend_homogeneous(q, space.basis[k], 2), ErrorCode::NoExtension);
    }
  }
  EXPECT_TRUE(std::any_of(batch.begin(), batch.end(), [](auto& b) { return !b; }));
}

TEST(Counterexample, Examples) {
  auto cx = counterexample_linear(Q("zb1*z2"));
  ASSERT_TRUE(cx.has_value());
  EXPECT_FALSE(cx->v[0].is_zero());
  EXPECT_TRUE(cx->v[1].is_zero());
  EXPECT_TRUE(cx->is_cr);
  EXPECT_TRUE(cx->extension_fails);
  EXPECT_FALSE(counterexample_linear(Q("z1*zb1 + z2*zb2")).has_value());
  EXPECT_CRSING_ERROR(counterexample_linear(Quadric::zero(2)), ErrorCode::DegenerateQuadric);
}

TEST(Counterexample, EveryRankOneQuadric) {
  Sampler s(57);
  int seen = 0;
  for (int trial = 0; trial < 150 && seen < 25; ++trial) {
    const unsigned n = 2 + trial % 2;
    Quadric q = s.quadric(n);
    if (rank_condition(q) != 1) continue;
    ++seen;
    auto cx = counterexample_linear(q);
    ASSERT_TRUE(cx.has_value());
    EXPECT_TRUE(cx->is_cr);
    EXPECT_TRUE(cx->extension_fails);
    EXPECT_FALSE(std::all_of(cx->v.begin(), cx->v.end(), [](auto& x) { return x.is_zero(); }));
  }
  EXPECT_GE(seen, 10);
}
