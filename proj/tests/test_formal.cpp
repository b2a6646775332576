#include <gtest/gtest.h>

#include "crsing/extend.hpp"
#include "crsing/formal.hpp"
#include "crsing/suites.hpp"
#include "oracle.hpp"

using namespace crsing;
using oracle::P;

namespace {

Manifold M(const std::string& rho, unsigned n = 2) {
  return Manifold::from_rho(parse_poly(rho, n));
}

Poly weighted_truncate(const Poly& p, unsigned N) {
  Poly out(p.n());
  for (unsigned d = 0; d <= N; ++d) out += homogeneous_part(p, d, true);
  return out;
}

bool all_terms_above(const Poly& p, unsigned N) {
  for (const auto& [m, c] : p.terms())
    if (m.total_degree() <= N) return false;
  return true;
}

}  // namespace

TEST(Formal, RestrictionRoundtripOnCubicPerturbation) {
  Manifold m = M("zb1*z2 + zb2^3");
  Poly F = P("w^2 + z1");
  auto ext = formal_extend(m, substitute_w(F, m.rho()), 8);
  EXPECT_EQ(ext.F, F);
  EXPECT_GT(ext.residual_order, 8u);
  EXPECT_EQ(ext.order, 8u);
}

TEST(Formal, Errors) {
  Poly norm2 = P("z1*zb1 + z2*zb2");
  EXPECT_CRSING_ERROR(formal_extend(Manifold::from_rho(norm2.pow(2)), norm2, 8),
                      ErrorCode::DegenerateQuadric);
  try {
    formal_extend(M("zb1*z2 + zb2^3"), P("zb1"), 8);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCRAtDegree);
    EXPECT_EQ(e.degree(), 1u);
  }
  // On the quadric z̄1 z2 itself, z̄1 is CR but has no extension.
  EXPECT_CRSING_ERROR(formal_extend(M("zb1*z2"), P("zb1"), 8), ErrorCode::NoExtension);
  EXPECT_CRSING_ERROR(formal_extend(M("zb1*z2"), P("z1"), 8, RankPolicy::RequireRankTwo),
                      ErrorCode::RankTooLow);
  EXPECT_CRSING_ERROR(formal_extend(M("zb1*z2"), P("w"), 8), ErrorCode::ContainsW);
}

TEST(Formal, NotCRAtHigherDegree) {
  // f = Q + zb1^3 on the ball: the quadratic stage extends, the cubic does not.
  Manifold m = M("z1*zb1 + z2*zb2 + z1^2*zb2");
  try {
    formal_extend(m, P("z1*zb1 + z2*zb2 + zb1^3"), 6);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCRAtDegree);
    EXPECT_EQ(e.degree(), 3u);
  }
}

TEST(Formal, Uniqueness) {
  Manifold sq = M("zb1^2 + zb2^2");
  EXPECT_TRUE(check_formal_uniqueness(sq, sq.rho(), 6));
  EXPECT_EQ(formal_extend(sq, sq.rho(), 6).F, P("w"));
  EXPECT_CRSING_ERROR(check_formal_uniqueness(M("zb1*z2"), P("z1"), 6), ErrorCode::RankTooLow);

  Sampler s(61);
  for (int trial = 0; trial < 15; ++trial) {
    const unsigned n = 2 + trial % 2;
    Manifold m(s.quadric_rank2(n), s.zzbar(n, 3, 4, 3));
    Poly F = s.holomorphic(n, 4, 4);
    EXPECT_TRUE(check_formal_uniqueness(m, substitute_w(F, m.rho()), 6));
  }
}

TEST(Formal, AgreesWithPolynomialExtensionOnQuadrics) {
  Sampler s(62);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned n = 2 + trial % 2;
    Quadric q = s.quadric_rank2(n);
    Poly F = s.holomorphic(n, 5, 5);
    Poly f = substitute_w(F, q.poly());
    auto formal = formal_extend(Manifold(q), f, 10);
    auto poly = extend_polynomial(q, f, true);
    EXPECT_EQ(formal.F, poly.F);
    EXPECT_EQ(formal.residual_order, kInfiniteOrder);
  }
}

TEST(Formal, IndependentOfTruncationOrder) {
  Sampler s(63);
  for (int trial = 0; trial < 12; ++trial) {
    const unsigned n = 2 + trial % 2;
    Manifold m(s.quadric_rank2(n), s.zzbar(n, 3, 4, 3));
    // A CR function that is not a finite restriction: truncate one.
    Poly f = truncate(substitute_w(s.holomorphic(n, 4, 4), m.rho()), 6);
    auto hi = formal_extend(m, f, 6);
    for (unsigned N = 2; N < 6; ++N) {
      auto lo = formal_extend(m, truncate(f, N), N);
      EXPECT_EQ(lo.F, weighted_truncate(hi.F, N)) << "N=" << N;
      EXPECT_TRUE(all_terms_above(lo.residual, N));
    }
  }
}

TEST(Formal, CertificateCheckedByEvaluation) {
  Sampler s(64);
  oracle::Points rnd(64);
  for (int trial = 0; trial < 10; ++trial) {
    Manifold m(s.quadric_rank2(2), s.zzbar(2, 3, 4, 3));
    Poly f = truncate(substitute_w(s.holomorphic(2, 5, 5), m.rho()), 7);
    auto ext = formal_extend(m, f, 7);
    EXPECT_TRUE(all_terms_above(ext.residual, 7));
    auto pt = rnd.point(2);
    auto at = pt;
    at[4] = oracle::eval(m.rho(), pt);
    EXPECT_EQ(oracle::eval(ext.residual, pt), oracle::eval(f, pt) - oracle::eval(ext.F, at));
  }
}
