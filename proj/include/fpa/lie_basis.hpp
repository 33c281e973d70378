#pragma once

// Lyndon basis of the free Lie algebra on generators x1, x2, ... .
//
// Every basis element is a Lyndon word over the letters 1..n together with
// its standard (Chen-Fox-Lyndon) bracketing. Elements are interned in a
// process-wide registry, so a LieMonomial is a cheap handle and equality is
// pointer equality. The global order is (degree, then lexicographic on the
// word), which places generators first and makes every bracket {e_i, e_j}
// with i < j a combination of strictly later elements.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fpa/rational.hpp"

namespace fpa {

/// Letters are 1-based generator indices stored as bytes.
using Word = std::string;

namespace detail {
struct LieNode;
}

class LieMonomial {
 public:
  /// The generator x_i, i >= 1.
  static LieMonomial generator(int i);

  /// Interns a Lyndon word (letters 1-based). Throws std::invalid_argument if
  /// the word is empty or not Lyndon.
  static LieMonomial from_lyndon(const Word& word);

  const Word& word() const;
  int degree() const;
  bool is_generator() const;
  /// Index of the generator when is_generator().
  int generator_index() const;
  /// Largest letter occurring in the word.
  int max_letter() const;

  /// Standard factorization; precondition !is_generator().
  LieMonomial left() const;
  LieMonomial right() const;

  /// Per-generator degree vector of length n (entries beyond max_letter are 0).
  std::vector<int> mdeg(int n) const;
  /// Number of occurrences of letter i.
  int letter_count(int i) const;

  /// 1-based position in the global basis order for n generators.
  std::size_t index(int n) const;

  /// Standard bracketing, e.g. "[x1,[x1,x2]]".
  std::string to_string() const;

  friend bool operator==(LieMonomial a, LieMonomial b) { return a.node_ == b.node_; }
  friend std::strong_ordering operator<=>(LieMonomial a, LieMonomial b);

  const detail::LieNode* node() const { return node_; }

 private:
  explicit LieMonomial(const detail::LieNode* node) : node_(node) {}
  friend class LieRegistry;

  const detail::LieNode* node_;
};

/// Lexicographic comparison of words (a proper prefix is smaller).
bool lex_less(const Word& a, const Word& b);
bool is_lyndon(const Word& word);

/// Rational linear combination of basis elements. Zero coefficients are never
/// stored; the empty combination is 0.
class LieElement {
 public:
  using Terms = std::map<LieMonomial, Rational>;

  LieElement() = default;
  explicit LieElement(LieMonomial m) { terms_.emplace(m, Rational(1)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(LieMonomial m) const;

  void add_term(LieMonomial m, const Rational& c);
  void add_scaled(const LieElement& other, const Rational& c);

  LieElement& operator+=(const LieElement& o) { add_scaled(o, Rational(1)); return *this; }
  LieElement& operator-=(const LieElement& o) { add_scaled(o, Rational(-1)); return *this; }
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rational& c, const LieElement& a);
  friend bool operator==(const LieElement& a, const LieElement& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Basis elements of degree <= max_degree on n generators in global order.
/// Layers are generated lazily and cached, so indices are stable when the
/// degree is extended later. Throws CapacityError when the basis would exceed
/// basis_capacity().
std::vector<LieMonomial> generate_basis(int n, int max_degree);

std::size_t basis_capacity();
void set_basis_capacity(std::size_t ceiling);

/// [a, b] expressed in the Lyndon basis. Results are memoized.
std::shared_ptr<const LieElement> normalize_bracket(LieMonomial a, LieMonomial b);

/// [x, y] extended bilinearly.
LieElement bracket(const LieElement& x, const LieElement& y);

/// Element of the free associative algebra: words with rational coefficients.
using AssocPoly = std::map<Word, Rational>;

/// Image under the embedding [a,b] -> ab - ba.
AssocPoly assoc_expand(const LieElement& e);
AssocPoly assoc_expand(LieMonomial m);
AssocPoly assoc_commutator(const AssocPoly& a, const AssocPoly& b);
std::string to_string(const AssocPoly& p);

}  // namespace fpa

template <>
struct std::hash<fpa::LieMonomial> {
  std::size_t operator()(fpa::LieMonomial m) const noexcept {
    return std::hash<const void*>{}(m.node());
  }
};
