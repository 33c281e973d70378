#include <gtest/gtest.h>

#include "fpa/automorphism.hpp"
#include "fpa/errors.hpp"
#include "fpa/random.hpp"
#include "oracles.hpp"

using namespace fpa;
using oracle::P;

namespace {

Endomorphism E(const std::string& s) { return parse_endomorphism(s, 2); }

CommutativePoly C(const std::string& s) { return split_commutative(P(s)).first; }

UnivariatePoly U(std::vector<int> c) {
  std::vector<Rational> r;
  for (int x : c) r.emplace_back(x);
  return UnivariatePoly(r);
}

NotAutomorphism::Reason reason_of(const Endomorphism& theta) {
  try {
    is_automorphism(theta);
  } catch (const NotAutomorphism& e) {
    return e.reason();
  }
  ADD_FAILURE() << "accepted " << format_endomorphism(theta);
  return NotAutomorphism::Reason::BracketComponent;
}

// Jacobian determinant of a plane map, computed coefficientwise.
CommutativePoly jacobian(const PlaneMap& m) {
  return m.first.derivative(1) * m.second.derivative(2) - m.first.derivative(2) * m.second.derivative(1);
}

}  // namespace

TEST(Endomorphism, ApplyAndCompose) {
  const PoissonPoly f = P("x1*[x1,x2] - 3*x2^2 + 1/2");
  EXPECT_EQ(apply_endo(Endomorphism::identity(2), f), f);
  EXPECT_EQ(apply_endo(E("x1 -> x1 + x2^2; x2 -> x2"), P("{x1,x2}")), P("[x1,x2]"));
  const Endomorphism swap = E("x1 -> x2; x2 -> x1");
  EXPECT_EQ(compose(swap, swap), Endomorphism::identity(2));
  EXPECT_EQ(apply_endo(swap, P("[x1,x2]")), P("-[x1,x2]"));
}

TEST(Endomorphism, CompositionOrder) {
  const Endomorphism a = E("x1 -> x1 + x2^2; x2 -> x2");
  const Endomorphism b = E("x1 -> x2; x2 -> x1");
  // compose(a, b)(x1) = a(b(x1)) = a(x2) = x2
  EXPECT_EQ(compose(a, b).image(1), P("x2"));
  EXPECT_EQ(compose(a, b).image(2), P("x1 + x2^2"));
}

TEST(Endomorphism, HomomorphismLaw) {
  Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    PolyShape s;
    s.max_deg = 2;
    s.max_terms = 2;
    s.allow_constant = true;
    const Endomorphism theta({random_poly(rng, s), random_poly(rng, s)});
    s.max_deg = 3;
    const PoissonPoly f = random_poly(rng, s), g = random_poly(rng, s);
    ASSERT_EQ(apply_endo(theta, poisson_bracket(f, g)), poisson_bracket(apply_endo(theta, f), apply_endo(theta, g)));
    ASSERT_EQ(apply_endo(theta, f * g), apply_endo(theta, f) * apply_endo(theta, g));
    ASSERT_EQ(apply_endo(theta, f + g), apply_endo(theta, f) + apply_endo(theta, g));
  }
}

TEST(Endomorphism, AutomorphismsAreInjectiveOnSamples) {
  Rng rng(12);
  for (int t = 0; t < 30; ++t) {
    const Endomorphism theta = random_tame(rng, TameShape{3, 3, 6}).compose();
    PolyShape s;
    s.max_deg = 3;
    s.max_terms = 3;
    const PoissonPoly f = random_poly(rng, s), g = random_poly(rng, s);
    if (f == g) continue;
    ASSERT_FALSE(apply_endo(theta, f - g).is_zero());
  }
}

TEST(Abelianize, Examples) {
  Abelianization a = abelianize(E("x1 -> x1 + x2*[x1,x2]; x2 -> x1^2"));
  EXPECT_EQ(a.plane.first, C("x1"));
  EXPECT_EQ(a.remainder[0], P("x2*[x1,x2]"));
  EXPECT_EQ(a.plane.second, C("x1^2"));
  EXPECT_TRUE(a.remainder[1].is_zero());
  EXPECT_FALSE(a.commutative());

  Rng rng(4);
  for (int t = 0; t < 10; ++t) EXPECT_TRUE(abelianize(random_tame(rng, TameShape{}).compose()).commutative());
}

TEST(Jung, Examples) {
  EXPECT_TRUE(jung_decompose(PlaneMap::identity()).factors().empty());

  auto phi = jung_decompose({C("x1 + x2^3"), C("x2")});
  ASSERT_EQ(phi.factors().size(), 1u);
  EXPECT_EQ(phi.factors()[0], TameFactor::elementary(1, Rational(1), U({0, 0, 0, 1})));

  const PlaneMap psi{C("x2"), C("x1 + x2^2")};
  phi = jung_decompose(psi);
  EXPECT_TRUE(phi.verified());
  EXPECT_EQ(phi.plane(), psi);
  EXPECT_EQ(phi.factors().size(), 2u);

  EXPECT_THROW(jung_decompose({C("x1^2"), C("x2")}), NotAutomorphism);
}

TEST(Jung, TieBreakUsesFirstImageAsPivot) {
  // Equal degrees: the second image is reduced against the first.
  const PlaneMap psi{C("x1 + x2^2"), C("2*x1 + x2 + 2*x2^2")};
  const TameDecomposition phi = jung_decompose(psi);
  EXPECT_EQ(phi.plane(), psi);
  const TameDecomposition again = jung_decompose(psi);
  EXPECT_EQ(phi.factors(), again.factors());
}

TEST(Jung, RandomRoundTripsHaveUnitJacobian) {
  Rng rng(8);
  for (int t = 0; t < 50; ++t) {
    const TameDecomposition src = random_tame(rng, TameShape{});
    const PlaneMap psi = src.plane();
    const TameDecomposition phi = jung_decompose(psi);
    ASSERT_EQ(phi.plane(), psi);
    const CommutativePoly j = jacobian(psi);
    ASSERT_EQ(j.degree(), 0);
    ASSERT_EQ(j.coefficient(0, 0), src.multiplier());
  }
}

TEST(IsAutomorphism, Examples) {
  EXPECT_EQ(reason_of(E("x1 -> x1 + {x1,x2}; x2 -> x2")), NotAutomorphism::Reason::BracketComponent);
  EXPECT_EQ(reason_of(E("x1 -> x1^2; x2 -> x2")), NotAutomorphism::Reason::PlaneMapNotInvertible);

  const Endomorphism theta = E("x1 -> 2*x1 + x2^2; x2 -> x2");
  TameDecomposition phi = is_automorphism(theta);
  EXPECT_TRUE(phi.verified());
  EXPECT_EQ(phi.compose(), theta);

  const auto f1 = TameFactor::elementary(1, Rational(1), U({0, 0, 1}));
  const auto f2 = TameFactor::elementary(2, Rational(1), U({0, 0, 0, 1}));
  const Endomorphism built = TameDecomposition::from_factors({f1, f2}).compose();
  EXPECT_EQ(built, E("x1 -> x1 + x2^2; x2 -> x2 + (x1 + x2^2)^3"));
  phi = is_automorphism(built);
  EXPECT_EQ(phi.compose(), built);
  EXPECT_EQ(phi.factors().size(), 2u);

  try {
    is_automorphism(E("x1 -> x1 + {x1,x2}; x2 -> x2"));
    FAIL();
  } catch (const NotAutomorphism& e) {
    EXPECT_EQ(e.reason_code(), "bracket-component");
  }
  try {
    is_automorphism(E("x1 -> x1 + x2; x2 -> 2*x1 + 2*x2"));
    FAIL();
  } catch (const NotAutomorphism& e) {
    EXPECT_EQ(e.reason_code(), "plane-map-not-invertible");
  }
  EXPECT_THROW(is_automorphism(parse_endomorphism("x1 -> x1; x2 -> x2; x3 -> x3", 3)), UsageError);
}

TEST(Invert, Examples) {
  EXPECT_EQ(invert(TameDecomposition()), Endomorphism::identity(2));
  const auto e = TameDecomposition::from_factors({TameFactor::elementary(1, Rational(1), U({1, 0, 3}))});
  EXPECT_EQ(invert(e), E("x1 -> x1 - 1 - 3*x2^2; x2 -> x2"));
  Rng rng(21);
  for (int t = 0; t < 20; ++t) {
    const TameDecomposition phi = random_tame(rng, TameShape{3, 4, 16});
    ASSERT_EQ(compose(phi.compose(), invert(phi)), Endomorphism::identity(2));
    ASSERT_EQ(compose(invert(phi), phi.compose()), Endomorphism::identity(2));
  }
  EXPECT_THROW(invert(TameDecomposition(e.factors())), UnverifiedDecomposition);
}

TEST(TameFactor, Validation) {
  EXPECT_THROW(TameFactor::linear(Rational(1), Rational(2), Rational(2), Rational(4)), UsageError);
  EXPECT_THROW(TameFactor::elementary(1, Rational(0), U({1})), UsageError);
  EXPECT_THROW(TameFactor::elementary(3, Rational(1), U({1})), UsageError);
}

TEST(BracketMultiplier, Examples) {
  EXPECT_EQ(bracket_multiplier(E("x1 -> x1 + x2^3 - x2; x2 -> x2")), Rational(1));
  const int a = 2, b = -1, c = 3, d = 5;
  EXPECT_EQ(bracket_multiplier(E("x1 -> 2*x1 - x2; x2 -> 3*x1 + 5*x2")), Rational(a * d - b * c));
  EXPECT_FALSE(bracket_multiplier(E("x1 -> x1^2; x2 -> x2")));
  EXPECT_EQ(bracket_multiplier(E("x1 -> x1 + x2; x2 -> x1 + x2")), Rational(0));
}

TEST(PreservesBracket, Examples) {
  EXPECT_TRUE(preserves_bracket(Endomorphism::identity(2)));
  EXPECT_TRUE(preserves_bracket(E("x1 -> x1; x2 -> x2 + x1^4")));
  EXPECT_FALSE(preserves_bracket(E("x1 -> 2*x1; x2 -> x2")));
  EXPECT_FALSE(preserves_bracket(E("x1 -> x1 + x2*[x1,x2]; x2 -> x2")));
}

TEST(BracketMultiplier, EqualsProductOfFactorMultipliers) {
  Rng rng(13);
  for (int t = 0; t < 40; ++t) {
    const TameDecomposition phi = random_tame(rng, TameShape{});
    const auto alpha = bracket_multiplier(phi.compose());
    ASSERT_TRUE(alpha);
    ASSERT_NE(sgn(*alpha), 0);
    ASSERT_EQ(*alpha, phi.multiplier());
  }
}
