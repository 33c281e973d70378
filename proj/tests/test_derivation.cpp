#include <gtest/gtest.h>

#include "fpa/automorphism.hpp"
#include "fpa/derivation.hpp"
#include "fpa/errors.hpp"
#include "fpa/random.hpp"
#include "oracles.hpp"

using namespace fpa;
using oracle::P;

namespace {

Derivation D(const std::string& s, int n = 2) { return parse_derivation(s, n); }

LieMonomial lie(const std::string& s) { return P(s).terms()[0].first.factors()[0].first; }

}  // namespace

TEST(Derivation, ApplyExamples) {
  const Derivation d = D("x2 ; 0");
  EXPECT_TRUE(apply(d, P("[x1,x2]")).is_zero());
  EXPECT_EQ(apply(d, P("x1^2")), P("2*x1*x2"));
  EXPECT_EQ(apply(d, P("[x1,[x1,x2]]")), P("-[[x1,x2],x2]"));
}

TEST(Derivation, ApplyOnBracketMatchesOracle) {
  // D = x2 d/dx1 acts on the free Lie algebra by substituting x2 for one x1
  // at a time; compare in the associative envelope.
  const Derivation d = D("x2 ; 0");
  const PoissonPoly image = apply(d, P("[x1,[x1,x2]]"));
  oracle::Words got;
  for (const auto& [m, c] : image.terms()) oracle::add(got, oracle::expand(m.factors()[0].first), c);
  oracle::Words expected;
  const oracle::Words a{{"a", Rational(1)}}, b{{"b", Rational(1)}};
  oracle::add(expected, oracle::commutator(b, oracle::commutator(a, b)), Rational(1));
  oracle::add(expected, oracle::commutator(a, oracle::commutator(b, b)), Rational(1));
  EXPECT_EQ(got, expected);
}

TEST(Derivation, ScaleExamples) {
  EXPECT_EQ(scale(P("x2"), Derivation::partial(2, 1)), D("x2 ; 0"));
  EXPECT_TRUE(scale(PoissonPoly(), D("x1 ; [x1,x2]")).is_zero());
  EXPECT_EQ(apply(scale(P("x1"), D("0 ; x2")), P("x2^2")), P("2*x1*x2^2"));
}

TEST(Derivation, DegreeExamples) {
  auto r = der_degrees(D("x2 ; 0"));
  ASSERT_TRUE(r.report.mdeg);
  EXPECT_EQ(*r.report.mdeg, (std::vector<int>{-1, 1}));
  EXPECT_EQ(r.report.pdeg, 0);
  ASSERT_EQ(r.support.size(), 1u);
  EXPECT_EQ(r.support.begin()->to_string(), "x2");

  r = der_degrees(D("[x1,x2] ; 0"));
  EXPECT_EQ(*r.report.mdeg, (std::vector<int>{0, 1}));
  EXPECT_EQ(r.report.pdeg, 0);
  EXPECT_EQ(r.support.begin()->to_string(), "[x1,x2]");

  const auto parts = homogeneous_components(D("x1 + x2^2 ; 0"), Grading::by_weight({1, 1}));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts.at({0}), D("x1 ; 0"));
  EXPECT_EQ(parts.at({1}), D("x2^2 ; 0"));

  EXPECT_THROW(der_degrees(Derivation::zero(2)), DegreeOfZero);
}

TEST(Derivation, LeadingDerivationExamples) {
  const LieMonomial x2 = LieMonomial::generator(2);
  auto l = leading_der(D("x2^3 ; 0"), x2);
  EXPECT_EQ(l.pdeg, 3);
  EXPECT_EQ(l.lead, Derivation::partial(2, 1));
  l = leading_der(Derivation::partial(2, 1), lie("[x1,x2]"));
  EXPECT_EQ(l.pdeg, 0);
  EXPECT_EQ(l.lead, Derivation::partial(2, 1));
  l = leading_der(D("x2 ; x2^2*[x1,x2]"), x2);
  EXPECT_EQ(l.pdeg, 2);
  EXPECT_EQ(l.lead, D("0 ; [x1,x2]"));
  EXPECT_THROW(leading_der(Derivation::zero(2), x2), DegreeOfZero);
}

TEST(Derivation, Triangularity) {
  EXPECT_TRUE(is_triangular(D("x2 ; 0")));
  EXPECT_FALSE(is_triangular(D("0 ; x1")));
  EXPECT_TRUE(is_triangular(D("[x2,x3] ; x3^2 ; 0", 3)));
  EXPECT_FALSE(is_triangular(D("0 ; 0 ; 1", 3) + D("x1 ; 0 ; 0", 3)));
}

TEST(Derivation, NilpotencyExamples) {
  auto v = nilpotency_check(D("x2 ; 0"), 4);
  EXPECT_TRUE(v.nilpotent());
  EXPECT_EQ(v.bounds, (std::vector<int>{2, 1}));
  EXPECT_FALSE(nilpotency_check(D("x1 ; 0"), 8).nilpotent());
  v = nilpotency_check(D("[x1,x2] ; 0"), 10);
  EXPECT_EQ(v.status, NilpotencyVerdict::Status::ExceededCap);
  EXPECT_EQ(v.cap, 10);
  // The iterates are left-normed brackets [..[[x1,x2],x2]..]: nonzero each time.
  const Derivation d = D("[x1,x2] ; 0");
  PoissonPoly cur = P("x1");
  PoissonPoly expected = P("x1");
  for (int k = 1; k <= 10; ++k) {
    cur = apply(d, cur);
    expected = poisson_bracket(expected, P("x2"));
    ASSERT_EQ(cur, expected) << k;
    ASSERT_FALSE(cur.is_zero());
  }
  EXPECT_THROW(nilpotency_check(d, 0), UsageError);
}

TEST(Derivation, ConjugationExamples) {
  const Derivation d = D("x2 + [x1,x2] ; x1");
  EXPECT_EQ(conjugate(TameDecomposition(), d), d);

  const auto phi = TameDecomposition::from_factors(
      {TameFactor::elementary(1, Rational(1), UnivariatePoly({Rational(0), Rational(0), Rational(1)}))});
  EXPECT_EQ(conjugate(phi, Derivation::partial(2, 1)), Derivation::partial(2, 1));

  const auto swap = TameDecomposition::from_factors({TameFactor::linear(Rational(0), Rational(1), Rational(1), Rational(0))});
  EXPECT_EQ(conjugate(swap, D("x2 ; 0")), D("0 ; x1"));

  EXPECT_THROW(conjugate(TameDecomposition(phi.factors()), d), UnverifiedDecomposition);
}

TEST(Derivation, ConjugationMatchesDirectSubstitution) {
  Rng rng(77);
  for (int t = 0; t < 20; ++t) {
    const TameDecomposition phi = random_tame(rng, TameShape{3, 3, 6});
    PolyShape s;
    s.max_deg = 2;
    s.max_terms = 2;
    s.allow_constant = true;
    const Derivation d({random_poly(rng, s), random_poly(rng, s)});
    const Endomorphism forward = phi.compose();
    const Endomorphism backward = invert(phi);
    std::vector<PoissonPoly> images;
    for (int i = 1; i <= 2; ++i) images.push_back(apply_endo(backward, apply(d, forward.image(i))));
    ASSERT_EQ(conjugate(phi, d), Derivation(images));
  }
}

TEST(Derivation, ConjugationIsAGroupAction) {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const TameDecomposition a = random_tame(rng, TameShape{2, 2, 4});
    const TameDecomposition b = random_tame(rng, TameShape{2, 2, 4});
    std::vector<TameFactor> ab = a.factors();
    ab.insert(ab.end(), b.factors().begin(), b.factors().end());
    const Derivation d = D("x2^2 ; 1");
    ASSERT_EQ(conjugate(TameDecomposition::from_factors(ab), d), conjugate(b, conjugate(a, d)));
  }
}

TEST(Derivation, BracketKillCheck) {
  EXPECT_TRUE(bracket_kill_check(D("x2^3 - 2*x2 + 1 ; 0")).is_zero());
  EXPECT_EQ(bracket_kill_check(D("x1 ; 0")), P("[x1,x2]"));
  Rng rng(9);
  for (int t = 0; t < 10; ++t) {
    const TameDecomposition phi = random_tame(rng, TameShape{3, 3, 6});
    EXPECT_TRUE(bracket_kill_check(conjugate(phi, D("x2 ; 0"))).is_zero());
  }
}

TEST(Derivation, LeibnizAndJacobiOnRandomInputs) {
  Rng rng(31);
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + t % 2;
    PolyShape s;
    s.n = n;
    s.max_deg = 3;
    s.max_terms = 3;
    s.allow_constant = true;
    std::vector<PoissonPoly> images;
    for (int i = 0; i < n; ++i) images.push_back(random_poly(rng, s));
    const Derivation d(images);
    const PoissonPoly f = random_poly(rng, s), g = random_poly(rng, s);
    ASSERT_EQ(apply(d, f * g), apply(d, f) * g + f * apply(d, g));
    ASSERT_EQ(apply(d, poisson_bracket(f, g)), poisson_bracket(apply(d, f), g) + poisson_bracket(f, apply(d, g)));
    ASSERT_EQ(apply(d, f + g), apply(d, f) + apply(d, g));
  }
}
