#include <gtest/gtest.h>

#include "fpa/errors.hpp"
#include "fpa/random.hpp"
#include "fpa/serialize.hpp"
#include "fpa/text.hpp"
#include "oracles.hpp"

using namespace fpa;

namespace {

std::size_t error_offset(const std::string& s, int n = 2) {
  try {
    parse_expr(s, n);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "parsed " << s;
  return 0;
}

}  // namespace

TEST(Parse, Examples) {
  EXPECT_EQ(format_expr(parse_expr("{x1,x2}", 2)), "[x1,x2]");
  const PoissonPoly f = parse_expr("2*x1^2 - 1/3*{x1,{x1,x2}}", 2);
  const PoissonPoly x1 = PoissonPoly::generator(1), x2 = PoissonPoly::generator(2);
  EXPECT_EQ(f, Rational(2) * x1 * x1 - Rational(1, 3) * poisson_bracket(x1, poisson_bracket(x1, x2)));
  EXPECT_EQ(format_expr(f), "2*x1^2 - 1/3*[x1,[x1,x2]]");
  EXPECT_EQ(error_offset("{x1,"), 4u);
}

TEST(Parse, Grammar) {
  EXPECT_EQ(parse_expr("[x1,x2]", 2), parse_expr("{x1,x2}", 2));
  EXPECT_EQ(parse_expr(" - x1 + -x2 ", 2), parse_expr("-(x1 + x2)", 2));
  EXPECT_EQ(parse_expr("(x1 + x2)^2", 2), parse_expr("x1^2 + 2*x1*x2 + x2^2", 2));
  EXPECT_EQ(parse_expr("x1^0", 2), parse_expr("1", 2));
  EXPECT_EQ(parse_expr("6/4", 2), parse_expr("3/2", 2));
  EXPECT_EQ(parse_expr("x3*x10", 10), parse_expr("x10*x3", 10));
  EXPECT_EQ(parse_expr("{x1*x2, x1}", 2), parse_expr("-x1*[x1,x2]", 2));
}

TEST(Parse, Errors) {
  EXPECT_EQ(error_offset("x1 x2"), 3u);
  EXPECT_EQ(error_offset("x3"), 1u);
  EXPECT_EQ(error_offset("1/0"), 2u);
  EXPECT_EQ(error_offset("x1 +"), 4u);
  EXPECT_EQ(error_offset("{x1;x2}"), 3u);
  EXPECT_EQ(error_offset("y"), 0u);
  EXPECT_EQ(error_offset("(x1"), 3u);
  EXPECT_EQ(error_offset(""), 0u);
  try {
    parse_expr("{x1,", 2);
  } catch (const ParseError& e) {
    const auto& ex = e.expected();
    EXPECT_NE(std::find(ex.begin(), ex.end(), "variable"), ex.end());
    EXPECT_NE(std::find(ex.begin(), ex.end(), "'{'"), ex.end());
  }
}

TEST(Format, Examples) {
  EXPECT_EQ(format_expr(PoissonPoly()), "0");
  EXPECT_EQ(format_expr(parse_expr("[x1,x2]*x2", 2)), "x2*[x1,x2]");
  EXPECT_EQ(format_expr(parse_expr("-x1 + x1", 2)), "0");
  EXPECT_EQ(format_expr(parse_expr("x2 + x1 - 1", 2)), "-1 + x1 + x2");
  EXPECT_EQ(format_expr(parse_expr("x1*x1*[x1,x2]*[x1,x2]", 2)), "x1^2*[x1,x2]^2");
}

TEST(Format, RoundTripOnRandomElements) {
  Rng rng(2024);
  for (int t = 0; t < 500; ++t) {
    PolyShape s;
    s.n = 2 + t % 3;
    s.max_deg = 5;
    s.max_terms = 5;
    s.coeff_bound = 7;
    s.allow_constant = true;
    PoissonPoly f = random_poly(rng, s);
    if (t % 5 == 0) f = Rational(rng.nonzero(-9, 9)) / Rational(rng.uniform(1, 9)) * f;
    const std::string text = format_expr(f);
    ASSERT_EQ(parse_expr(text, s.n), f) << text;
    ASSERT_EQ(format_expr(parse_expr(text, s.n)), text);
  }
}

TEST(Derivations, ParseAndFormat) {
  const Derivation d = parse_derivation("x2*{x1,x2} ; 0", 2);
  EXPECT_EQ(format_derivation(d), "x2*[x1,x2] d/dx1 + 0 d/dx2");
  EXPECT_EQ(format_derivation(parse_derivation("x1 + 1 ; -x2", 2)), "(1 + x1) d/dx1 + (-x2) d/dx2");
  EXPECT_THROW(parse_derivation("x1", 2), ParseError);
  try {
    parse_derivation("x1 ; x2 +", 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 9u);
  }
}

TEST(Endomorphisms, ParseAndFormat) {
  const Endomorphism theta = parse_endomorphism("x2 -> x1; x1 -> x2 + x1^2", 2);
  EXPECT_EQ(format_endomorphism(theta), "x1 -> x2 + x1^2; x2 -> x1");
  EXPECT_THROW(parse_endomorphism("x1 -> x2", 2), ParseError);
  EXPECT_THROW(parse_endomorphism("x1 -> x2; x1 -> x1", 2), ParseError);
  EXPECT_THROW(parse_endomorphism("x1 = x2; x2 -> x1", 2), ParseError);
  EXPECT_THROW(parse_endomorphism("x3 -> x2; x2 -> x1", 2), ParseError);
}

TEST(Json, PolynomialRoundTrip) {
  const PoissonPoly f = parse_expr("2*x1^2 - 1/3*[x1,[x1,x2]]*[x1,x2]^2 + 5", 2);
  const Json j = to_json(f);
  EXPECT_EQ(j[0]["coeff"], "5");
  EXPECT_TRUE(j[0]["factors"].empty());
  EXPECT_EQ(poly_from_json(j, 2), f);
  EXPECT_EQ(poly_from_json(Json::parse(j.dump()), 2), f);
  EXPECT_THROW(poly_from_json(Json::parse(R"([{"coeff": 1, "factors": []}])"), 2), UsageError);
}

TEST(Json, DerivationAndDecomposition) {
  const Derivation d = parse_derivation("x2*{x1,x2} ; 1/2", 2);
  EXPECT_EQ(derivation_from_json(to_json(d), 2), d);
  const TameDecomposition phi = TameDecomposition::from_factors(
      {TameFactor::linear(Rational(0), Rational(1), Rational(1), Rational(0)),
       TameFactor::elementary(2, Rational(-1, 2), UnivariatePoly({Rational(1), Rational(0), Rational(3)}))});
  const Json j = to_json(phi);
  EXPECT_EQ(j[0]["kind"], "linear");
  EXPECT_EQ(j[1]["kind"], "elementary");
  const TameDecomposition back = decomposition_from_json(j);
  EXPECT_FALSE(back.verified());
  EXPECT_EQ(back.factors(), phi.factors());
}
