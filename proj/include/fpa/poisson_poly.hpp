#pragma once

// The free Poisson algebra P<x1,...,xn> as the polynomial algebra on the
// Lyndon basis of the free Lie algebra. A monomial is a sorted product of
// basis Lie monomials; a PoissonPoly is a canonical sparse sum of monomials.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fpa/lie_basis.hpp"
#include "fpa/rational.hpp"

namespace fpa {

class PoissonMonomial {
 public:
  /// (basis element, exponent > 0), sorted ascending in the global Lie order.
  using Factor = std::pair<LieMonomial, unsigned>;

  /// The unit monomial 1.
  PoissonMonomial() = default;
  explicit PoissonMonomial(LieMonomial m);
  /// Accepts factors in any order and with repeated entries.
  static PoissonMonomial from_factors(std::vector<Factor> factors);
  /// A non-decreasing (or arbitrary) sequence of basis elements.
  static PoissonMonomial from_sequence(const std::vector<LieMonomial>& seq);

  const std::vector<Factor>& factors() const { return factors_; }
  /// Factors with repetition, non-decreasing.
  std::vector<LieMonomial> sequence() const;

  int deg() const { return deg_; }
  int pdeg() const { return pdeg_; }
  int letter_count(int i) const { return i >= 1 && i <= static_cast<int>(mdeg_.size()) ? mdeg_[i - 1] : 0; }
  std::vector<int> mdeg(int n) const;
  int max_letter() const { return static_cast<int>(mdeg_.size()); }
  bool is_one() const { return factors_.empty(); }
  /// True when every factor is a generator, i.e. the monomial lies in k[x1..xn].
  bool is_commutative() const;

  unsigned exponent(LieMonomial x) const;
  /// Monomial with every occurrence of x removed.
  PoissonMonomial without(LieMonomial x) const;
  /// Monomial with the exponent of factors()[pos] lowered by one.
  PoissonMonomial reduced(std::size_t pos) const;

  friend PoissonMonomial operator*(const PoissonMonomial& a, const PoissonMonomial& b);
  friend bool operator==(const PoissonMonomial& a, const PoissonMonomial& b) {
    return a.factors_ == b.factors_;
  }

  std::string to_string() const;

 private:
  void recompute();

  std::vector<Factor> factors_;
  int deg_ = 0;
  int pdeg_ = 0;
  std::vector<int> mdeg_;  // length = largest letter present
};

/// Canonical monomial order: degree ascending, then multidegree
/// lexicographically descending (x1 before x2), then factor sequences
/// lexicographically in the global Lie order. Returns <0, 0, >0.
int compare(const PoissonMonomial& a, const PoissonMonomial& b);

struct MonomialLess {
  bool operator()(const PoissonMonomial& a, const PoissonMonomial& b) const { return compare(a, b) < 0; }
};

class PoissonPoly {
 public:
  using Term = std::pair<PoissonMonomial, Rational>;

  PoissonPoly() = default;
  explicit PoissonPoly(const Rational& c);
  explicit PoissonPoly(LieMonomial m);
  explicit PoissonPoly(const LieElement& e);
  PoissonPoly(const PoissonMonomial& m, const Rational& c);

  static PoissonPoly generator(int i) { return PoissonPoly(LieMonomial::generator(i)); }
  /// Sorts, merges like terms and drops zeros.
  static PoissonPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  Rational constant_term() const;
  Rational coefficient(const PoissonMonomial& m) const;
  /// Largest generator index occurring anywhere in the element.
  int max_letter() const;

  PoissonPoly& operator+=(const PoissonPoly& o);
  PoissonPoly& operator-=(const PoissonPoly& o);
  PoissonPoly& operator*=(const PoissonPoly& o) { return *this = *this * o; }
  PoissonPoly operator-() const;

  friend PoissonPoly operator+(PoissonPoly a, const PoissonPoly& b) { return a += b; }
  friend PoissonPoly operator-(PoissonPoly a, const PoissonPoly& b) { return a -= b; }
  friend PoissonPoly operator*(const PoissonPoly& a, const PoissonPoly& b);
  friend PoissonPoly operator*(const Rational& c, const PoissonPoly& a);
  friend bool operator==(const PoissonPoly& a, const PoissonPoly& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Term> terms_;  // strictly increasing in the canonical order
};

PoissonPoly add(const PoissonPoly& f, const PoissonPoly& g);
PoissonPoly mul(const PoissonPoly& f, const PoissonPoly& g);
PoissonPoly scale(const Rational& c, const PoissonPoly& f);
PoissonPoly pow(const PoissonPoly& f, unsigned k);

/// The Poisson bracket: Lie bracket on basis elements, extended by the
/// Leibniz rule in each argument.
PoissonPoly poisson_bracket(const PoissonPoly& f, const PoissonPoly& g);

/// Bracket of two monomials, before collection into canonical form.
void bracket_monomials(const PoissonMonomial& u, const PoissonMonomial& v, const Rational& c,
                       std::vector<PoissonPoly::Term>& out);

struct DegreeReport {
  int deg = 0;
  std::vector<int> deg_x;  // per-generator degrees
  int pdeg = 0;
  std::optional<std::vector<int>> mdeg;  // present iff multihomogeneous
  std::optional<int> wdeg;               // present iff a weight was supplied
};

/// Degree data of a nonzero element on n generators. Degrees of
/// inhomogeneous elements are maxima over monomials. Throws DegreeOfZero.
DegreeReport degrees(const PoissonPoly& f, int n, const std::optional<std::vector<int>>& weight = {});

/// S(f): the basis Lie monomials f depends on.
std::set<LieMonomial> support(const PoissonPoly& f);

/// Degree in the basis element x (0 when x does not occur).
int pdeg_in(const PoissonPoly& f, LieMonomial x);

struct LeadingPart {
  int pdeg = 0;       // pdeg_x(f)
  PoissonPoly lead;   // l_x(f), free of x
};

/// f = f_0 + x f_1 + ... + x^m f_m with x not in S(f_i); returns (m, f_m).
/// Throws DegreeOfZero for f = 0.
LeadingPart leading_part(const PoissonPoly& f, LieMonomial x);

using GradeKey = std::vector<int>;

/// One of the three gradings of P: by multidegree, by weight <mdeg, w>, or by
/// the polynomial degree in basis elements.
struct Grading {
  enum class Kind { Multi, Weight, Polynomial };

  Kind kind = Kind::Multi;
  std::vector<int> weight;

  static Grading multi() { return {Kind::Multi, {}}; }
  static Grading by_weight(std::vector<int> w);
  static Grading polynomial() { return {Kind::Polynomial, {}}; }

  /// Key of a monomial; multidegree keys have length n, the others length 1.
  GradeKey key(const PoissonMonomial& m, int n) const;
};

std::map<GradeKey, PoissonPoly> homogeneous_components(const PoissonPoly& f, const Grading& grading, int n);

}  // namespace fpa
