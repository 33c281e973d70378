#include <gtest/gtest.h>

#include "fpa/errors.hpp"
#include "fpa/lie_basis.hpp"
#include "oracles.hpp"

using namespace fpa;

namespace {

LieMonomial x(int i) { return LieMonomial::generator(i); }

LieMonomial single(const LieElement& e) {
  EXPECT_EQ(e.size(), 1u);
  return e.terms().begin()->first;
}

std::vector<std::string> names(const std::vector<LieMonomial>& v) {
  std::vector<std::string> out;
  for (auto m : v) out.push_back(m.to_string());
  return out;
}

oracle::Words relabel(const AssocPoly& p) {
  oracle::Words out;
  for (const auto& [w, c] : p) {
    std::string s;
    for (char ch : w) s += static_cast<char>('a' + ch - 1);
    out[s] = c;
  }
  return out;
}

}  // namespace

TEST(LieBasis, SmallBases) {
  EXPECT_EQ(names(generate_basis(2, 1)), (std::vector<std::string>{"x1", "x2"}));
  EXPECT_EQ(names(generate_basis(2, 2)), (std::vector<std::string>{"x1", "x2", "[x1,x2]"}));
}

TEST(LieBasis, DegreeCountsTwoGenerators) {
  std::vector<int> per(6, 0);
  for (auto m : generate_basis(2, 5)) ++per[m.degree()];
  EXPECT_EQ(std::vector<int>(per.begin() + 1, per.end()), (std::vector<int>{2, 1, 2, 3, 6}));
}

TEST(LieBasis, CountsMatchWittAndBruteForce) {
  for (int n = 1; n <= 3; ++n) {
    const int top = n == 3 ? 6 : 8;
    std::vector<long long> per(top + 1, 0);
    for (auto m : generate_basis(n, top)) ++per[m.degree()];
    for (int d = 1; d <= top; ++d) {
      EXPECT_EQ(per[d], oracle::witt(n, d)) << "n=" << n << " d=" << d;
      EXPECT_EQ(per[d], static_cast<long long>(oracle::lyndon_count_brute(n, d))) << "n=" << n << " d=" << d;
    }
  }
}

TEST(LieBasis, OrderIsDegreeGradedAndIndicesStable) {
  const auto small = generate_basis(3, 3);
  const auto big = generate_basis(3, 5);
  ASSERT_GE(big.size(), small.size());
  for (std::size_t i = 0; i < small.size(); ++i) EXPECT_EQ(small[i], big[i]);
  for (std::size_t i = 0; i + 1 < big.size(); ++i) {
    EXPECT_LE(big[i].degree(), big[i + 1].degree());
    EXPECT_TRUE(big[i] < big[i + 1]);
    EXPECT_EQ(big[i].index(3), i + 1);
  }
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(big[i - 1], x(i));
}

TEST(LieBasis, MdegIsAdditive) {
  for (auto m : generate_basis(3, 5)) {
    const auto md = m.mdeg(3);
    EXPECT_EQ(md[0] + md[1] + md[2], m.degree());
    if (!m.is_generator()) {
      const auto l = m.left().mdeg(3);
      const auto r = m.right().mdeg(3);
      for (int i = 0; i < 3; ++i) EXPECT_EQ(md[i], l[i] + r[i]);
    }
  }
}

TEST(LieBasis, CapacityCeiling) {
  const std::size_t old = basis_capacity();
  set_basis_capacity(50);
  EXPECT_THROW(generate_basis(2, 12), CapacityError);
  set_basis_capacity(old);
  EXPECT_NO_THROW(generate_basis(2, 6));
}

TEST(LieBasis, RejectsNonLyndonWords) {
  EXPECT_THROW(LieMonomial::from_lyndon(Word{2, 1}), std::invalid_argument);
  EXPECT_THROW(LieMonomial::from_lyndon(Word{}), std::invalid_argument);
  EXPECT_EQ(LieMonomial::from_lyndon(Word{1, 1, 2}).to_string(), "[x1,[x1,x2]]");
}

TEST(NormalizeBracket, Generators) {
  const auto b = normalize_bracket(x(1), x(2));
  EXPECT_EQ(single(*b).to_string(), "[x1,x2]");
  EXPECT_EQ(b->coefficient(single(*b)), 1);
  const auto c = normalize_bracket(x(2), x(1));
  EXPECT_EQ(c->coefficient(single(*b)), -1);
  EXPECT_TRUE(normalize_bracket(x(1), x(1))->is_zero());
}

TEST(NormalizeBracket, DegreeFiveAgainstCommutatorOracle) {
  const LieMonomial a = single(*normalize_bracket(x(1), x(2)));
  const LieMonomial b = single(*normalize_bracket(x(1), a));
  const auto r = normalize_bracket(a, b);
  EXPECT_FALSE(r->is_zero());
  for (const auto& [m, c] : r->terms()) EXPECT_EQ(m.mdeg(2), (std::vector<int>{3, 2}));
  EXPECT_EQ(oracle::expand(*r), oracle::commutator(oracle::expand(a), oracle::expand(b)));
}

TEST(NormalizeBracket, AllPairsUpToDegreeSix) {
  for (int n = 2; n <= 3; ++n) {
    const auto basis = generate_basis(n, 5);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const LieMonomial a = basis[i], b = basis[j];
        if (a.degree() + b.degree() > 6) continue;
        const auto ab = normalize_bracket(a, b);
        const auto ba = normalize_bracket(b, a);
        ASSERT_EQ(*ab, Rational(-1) * *ba) << a.to_string() << " " << b.to_string();
        ASSERT_EQ(oracle::expand(*ab), oracle::commutator(oracle::expand(a), oracle::expand(b)))
            << a.to_string() << " " << b.to_string();
        if (i < j) {
          for (const auto& [m, c] : ab->terms()) ASSERT_GT(m.index(n), j + 1);
        }
      }
    }
  }
}

TEST(NormalizeBracket, JacobiOnBasisTriples) {
  const auto basis = generate_basis(2, 4);
  for (auto a : basis) {
    for (auto b : basis) {
      for (auto c : basis) {
        if (a.degree() + b.degree() + c.degree() > 6) continue;
        const LieElement A(a), B(b), C(c);
        const LieElement sum = bracket(A, bracket(B, C)) + bracket(B, bracket(C, A)) + bracket(C, bracket(A, B));
        ASSERT_TRUE(sum.is_zero()) << a.to_string() << " " << b.to_string() << " " << c.to_string();
      }
    }
  }
}

TEST(AssocExpand, Examples) {
  EXPECT_EQ(relabel(assoc_expand(x(1))), (oracle::Words{{"a", Rational(1)}}));
  const LieMonomial a = single(*normalize_bracket(x(1), x(2)));
  EXPECT_EQ(relabel(assoc_expand(a)), (oracle::Words{{"ab", Rational(1)}, {"ba", Rational(-1)}}));
  const LieMonomial b = single(*normalize_bracket(x(1), a));
  EXPECT_EQ(relabel(assoc_expand(b)),
            (oracle::Words{{"aab", Rational(1)}, {"aba", Rational(-2)}, {"baa", Rational(1)}}));
}

TEST(AssocExpand, AgreesWithTreeWalk) {
  for (auto m : generate_basis(3, 5)) EXPECT_EQ(relabel(assoc_expand(m)), oracle::expand(m)) << m.to_string();
}
