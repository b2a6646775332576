#include <gtest/gtest.h>

#include "crsing/manifold.hpp"
#include "crsing/polyio.hpp"
#include "oracle.hpp"

using namespace crsing;
using oracle::P;

namespace {

Monomial mono(std::vector<Monomial::Exponent> z, std::vector<Monomial::Exponent> zb,
              Monomial::Exponent w) {
  return Monomial(z, zb, w);
}

const char* kZeros = R"([["0","0"],["0","0"]])";

std::string doc(const std::string& a, const std::string& b, const std::string& e = "") {
  std::string s = R"({"n":2,"A":)" + a + R"(,"B":)" + b + R"(,"C":)" + kZeros;
  if (!e.empty()) s += R"(,"E":")" + e + "\"";
  return s + "}";
}

}  // namespace

TEST(Parse, Examples) {
  Poly p = parse_poly("zb1*z2 + zb2^3", 2);
  Poly expected(2);
  expected.add_term(mono({0, 1}, {1, 0}, 0), 1);
  expected.add_term(mono({0, 0}, {0, 3}, 0), 1);
  EXPECT_EQ(p, expected);

  Poly c = parse_poly("(1/2+3/4i)*z1^2*w", 2);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.coefficient(mono({2, 0}, {0, 0}, 1)),
            GaussRational(Rational(1, 2), Rational(3, 4)));

  EXPECT_EQ(parse_poly("3i*zb1", 2).coefficient(mono({0, 0}, {1, 0}, 0)),
            GaussRational(0, 3));
  EXPECT_EQ(parse_poly("  - z1 +  2 * z1 ", 2), parse_poly("z1", 2));
}

TEST(Parse, Errors) {
  EXPECT_CRSING_ERROR(parse_poly("z3", 2), ErrorCode::IndexOutOfRange);
  EXPECT_CRSING_ERROR(parse_poly("z0", 2), ErrorCode::IndexOutOfRange);
  EXPECT_CRSING_ERROR(parse_poly("z1 +", 2), ErrorCode::Syntax);
  EXPECT_CRSING_ERROR(parse_poly("z1 ** 2", 2), ErrorCode::Syntax);
  EXPECT_CRSING_ERROR(parse_poly("x1", 2), ErrorCode::Syntax);
  EXPECT_CRSING_ERROR(parse_poly("1/0*z1", 2), ErrorCode::MalformedNumber);
  try {
    parse_poly("z1 + + z2", 2);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("offset"), std::string::npos);
  }
}

TEST(Format, Examples) {
  EXPECT_EQ(format_poly(P("zb1*z2")), "zb1*z2");
  EXPECT_EQ(format_poly(Poly(2)), "0");
  EXPECT_EQ(format_poly(P("w - z1")), "-z1 + w");
  EXPECT_EQ(format_poly(P("i*z1")), "i*z1");
  EXPECT_EQ(format_scalar(GaussRational(Rational(-1, 2), Rational(1))), "-1/2+i");
}

TEST(Format, RoundtripRandom) {
  oracle::Points rnd(21);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = 1 + trial % 3;
    Poly p = rnd.poly(n, 6, 3);
    const std::string text = format_poly(p);
    EXPECT_EQ(parse_poly(text, n), p) << text;
    EXPECT_EQ(format_poly(parse_poly(text, n)), text);
  }
}

TEST(Format, NamedVariables) {
  std::vector<std::string> names = {"s", "x", "t", "y", "w"};
  EXPECT_EQ(format_poly_named(P("z1*zb2"), names), "s*y");
  EXPECT_CRSING_ERROR(format_poly_named(P("z1"), {"a"}), ErrorCode::InvalidArgument);
}

TEST(Scalar, Grammar) {
  EXPECT_EQ(parse_scalar("1/2+3/4i"), GaussRational(Rational(1, 2), Rational(3, 4)));
  EXPECT_EQ(parse_scalar("-i"), GaussRational(0, -1));
  EXPECT_EQ(parse_scalar("4/6"), GaussRational(Rational(2, 3)));
  EXPECT_CRSING_ERROR(parse_scalar("abc"), ErrorCode::MalformedNumber);
  EXPECT_CRSING_ERROR(parse_scalar("1.5"), ErrorCode::MalformedNumber);
}

TEST(LoadManifold, Examples) {
  Manifold m = load_manifold(doc(R"([["0","1"],["0","0"]])", kZeros));
  EXPECT_EQ(m.quadric().poly(), P("zb1*z2"));
  EXPECT_TRUE(m.higher_order().is_zero());

  EXPECT_CRSING_ERROR(load_manifold(doc(kZeros, R"([["0","1"],["0","0"]])")),
                      ErrorCode::AsymmetricB);
  EXPECT_CRSING_ERROR(load_manifold(doc(R"([["0","1"],["0","0"]])", kZeros, "zb1^2")),
                      ErrorCode::EOrderTooLow);
  EXPECT_CRSING_ERROR(load_manifold(doc(R"([["0","x"],["0","0"]])", kZeros)),
                      ErrorCode::MalformedNumber);
  EXPECT_CRSING_ERROR(load_manifold("{\"n\":2}"), ErrorCode::Schema);
  EXPECT_CRSING_ERROR(load_manifold("not json"), ErrorCode::Schema);
  EXPECT_CRSING_ERROR(load_manifold(doc(kZeros, kZeros, "w*z1^2")), ErrorCode::ContainsW);
}

TEST(LoadManifold, AsymmetricC) {
  std::string s = R"({"n":2,"A":[["1","0"],["0","1"]],"B":[["0","0"],["0","0"]],)"
                  R"("C":[["0","1"],["2","0"]]})";
  EXPECT_CRSING_ERROR(load_manifold(s), ErrorCode::AsymmetricC);
}

TEST(LoadManifold, JsonRoundtrip) {
  Manifold m = load_manifold(doc(R"([["1","1/2+i"],["0","-1"]])",
                                 R"([["i","2"],["2","0"]])", "zb1^3 + z1*z2*zb2"));
  Manifold back = manifold_from_json(manifold_to_json(m));
  EXPECT_EQ(back.quadric(), m.quadric());
  EXPECT_EQ(back.higher_order(), m.higher_order());
  EXPECT_EQ(back.rho(), m.rho());
}
