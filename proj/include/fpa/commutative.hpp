#pragma once

// Commutative polynomials in two variables, the image of P<x1,x2> modulo the
// ideal generated by {x1,x2}, and univariate polynomials used by elementary
// automorphisms.

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fpa/poisson_poly.hpp"
#include "fpa/rational.hpp"

namespace fpa {

/// Dense univariate polynomial; coeffs[k] multiplies t^k. No trailing zeros.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<Rational> coeffs);
  static UnivariatePoly monomial(const Rational& c, int k);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(int k) const;

  UnivariatePoly& operator+=(const UnivariatePoly& o);
  friend UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b) { return a += b; }
  friend UnivariatePoly operator*(const Rational& c, const UnivariatePoly& p);
  friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) { return a.coeffs_ == b.coeffs_; }

  /// p(x_var) as an element of P.
  PoissonPoly evaluate_at(const PoissonPoly& x) const;
  std::string to_string(const std::string& var) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Sparse polynomial in k[x1,x2]; keys are exponent pairs (a, b) for x1^a x2^b.
class CommutativePoly {
 public:
  using Exponent = std::array<int, 2>;
  using Terms = std::map<Exponent, Rational>;

  CommutativePoly() = default;
  explicit CommutativePoly(const Rational& c);
  static CommutativePoly x1() { return monomial(Rational(1), 1, 0); }
  static CommutativePoly x2() { return monomial(Rational(1), 0, 1); }
  static CommutativePoly monomial(const Rational& c, int a, int b);
  static CommutativePoly variable(int i) { return i == 1 ? x1() : x2(); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(int a, int b) const;
  void add_term(const Exponent& e, const Rational& c);

  /// Total degree; -1 for zero.
  int degree() const;
  int degree_in(int var) const;
  /// Homogeneous component of the top total degree.
  CommutativePoly top_form() const;
  /// Greatest term in the canonical monomial order (degree, then x1 before x2).
  std::pair<Exponent, Rational> leading_term() const;

  CommutativePoly derivative(int var) const;
  /// Substitutes x1 -> p, x2 -> q.
  CommutativePoly substitute(const CommutativePoly& p, const CommutativePoly& q) const;

  CommutativePoly& operator+=(const CommutativePoly& o);
  CommutativePoly& operator-=(const CommutativePoly& o);
  CommutativePoly operator-() const { return Rational(-1) * *this; }
  friend CommutativePoly operator+(CommutativePoly a, const CommutativePoly& b) { return a += b; }
  friend CommutativePoly operator-(CommutativePoly a, const CommutativePoly& b) { return a -= b; }
  friend CommutativePoly operator*(const CommutativePoly& a, const CommutativePoly& b);
  friend CommutativePoly operator*(const Rational& c, const CommutativePoly& a);
  friend bool operator==(const CommutativePoly& a, const CommutativePoly& b) { return a.terms_ == b.terms_; }

  PoissonPoly lift() const;
  std::string to_string() const;

 private:
  Terms terms_;
};

CommutativePoly pow(const CommutativePoly& p, unsigned k);

/// Splits f into the part lying in k[x1,x2] (monomials whose factors are all
/// generators) and the remainder lying in the ideal generated by {x1,x2}.
/// Requires f to involve at most x1, x2.
std::pair<CommutativePoly, PoissonPoly> split_commutative(const PoissonPoly& f);

}  // namespace fpa
