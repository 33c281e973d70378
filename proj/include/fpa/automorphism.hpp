#pragma once

// Endomorphisms of P<x1,...,xn> and tame automorphisms of P<x1,x2>.
//
// An endomorphism is given by generator images and acts by substitution
// through products and brackets. Composition follows function composition:
// compose(a, b) = a o b, so compose(a, b)(x_i) = a(b(x_i)). A tame
// decomposition [F1, ..., Fk] stands for F1 o F2 o ... o Fk.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "fpa/commutative.hpp"
#include "fpa/errors.hpp"
#include "fpa/poisson_poly.hpp"

namespace fpa {

class Endomorphism {
 public:
  Endomorphism() = default;
  explicit Endomorphism(std::vector<PoissonPoly> images);
  static Endomorphism identity(int n);

  int n() const { return static_cast<int>(images_.size()); }
  const std::vector<PoissonPoly>& images() const { return images_; }
  const PoissonPoly& image(int i) const { return images_.at(i - 1); }

  friend bool operator==(const Endomorphism& a, const Endomorphism& b) { return a.images_ == b.images_; }

 private:
  std::vector<PoissonPoly> images_;
};

/// Evaluates a fixed endomorphism on many elements, caching images of basis
/// Lie monomials and their powers.
class EndomorphismApplier {
 public:
  explicit EndomorphismApplier(const Endomorphism& theta) : theta_(theta) {}

  PoissonPoly operator()(const PoissonPoly& f);
  const PoissonPoly& on_basis(LieMonomial m);

 private:
  const PoissonPoly& power(LieMonomial m, unsigned e);

  const Endomorphism& theta_;
  std::unordered_map<LieMonomial, PoissonPoly> cache_;
  std::map<std::pair<const void*, unsigned>, PoissonPoly> powers_;
};

/// A Poisson homomorphism: preserves sums, products and brackets.
PoissonPoly apply_endo(const Endomorphism& theta, const PoissonPoly& f);
Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner);

/// Images of x1 and x2 in k[x1,x2].
struct PlaneMap {
  CommutativePoly first;
  CommutativePoly second;

  static PlaneMap identity() { return {CommutativePoly::x1(), CommutativePoly::x2()}; }
  const CommutativePoly& image(int i) const { return i == 1 ? first : second; }
  Endomorphism lift() const { return Endomorphism({first.lift(), second.lift()}); }

  friend bool operator==(const PlaneMap& a, const PlaneMap& b) = default;
};

/// outer o inner on k[x1,x2].
PlaneMap compose(const PlaneMap& outer, const PlaneMap& inner);

struct Abelianization {
  PlaneMap plane;
  /// Parts of the images lying in the ideal generated by {x1,x2}.
  std::array<PoissonPoly, 2> remainder;

  bool commutative() const { return remainder[0].is_zero() && remainder[1].is_zero(); }
};

Abelianization abelianize(const Endomorphism& theta);

/// x1 -> a x1 + b x2, x2 -> c x1 + d x2 with matrix ((a, b), (c, d)).
struct LinearFactor {
  std::array<std::array<Rational, 2>, 2> m;

  Rational det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
  friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
};

/// x_target -> alpha x_target + f(x_other), x_other -> x_other.
struct ElementaryFactor {
  int target = 1;
  Rational alpha{1};
  UnivariatePoly f;

  int other() const { return 3 - target; }
  friend bool operator==(const ElementaryFactor&, const ElementaryFactor&) = default;
};

class TameFactor {
 public:
  /// Throws UsageError for a singular matrix.
  static TameFactor linear(Rational a, Rational b, Rational c, Rational d);
  /// Throws UsageError for alpha = 0 or target outside {1,2}.
  static TameFactor elementary(int target, Rational alpha, UnivariatePoly f);

  bool is_linear() const { return std::holds_alternative<LinearFactor>(data_); }
  const LinearFactor& as_linear() const { return std::get<LinearFactor>(data_); }
  const ElementaryFactor& as_elementary() const { return std::get<ElementaryFactor>(data_); }

  /// Scalar by which the factor multiplies {x1,x2}: alpha or the determinant.
  Rational multiplier() const;
  TameFactor inverse() const;
  PlaneMap plane() const;
  bool is_identity() const;
  std::string to_string() const;

  friend bool operator==(const TameFactor&, const TameFactor&) = default;

 private:
  explicit TameFactor(std::variant<LinearFactor, ElementaryFactor> d) : data_(std::move(d)) {}
  std::variant<LinearFactor, ElementaryFactor> data_;
};

/// acc o factor on k[x1,x2].
PlaneMap compose(const PlaneMap& acc, const TameFactor& factor);

class TameDecomposition {
 public:
  /// The identity: no factors, verified.
  TameDecomposition() : verified_(true) {}
  /// Unverified until verify_against succeeds.
  explicit TameDecomposition(std::vector<TameFactor> factors) : factors_(std::move(factors)) {}
  /// Marks the decomposition verified against its own composition.
  static TameDecomposition from_factors(std::vector<TameFactor> factors);

  const std::vector<TameFactor>& factors() const { return factors_; }
  bool verified() const { return verified_; }

  /// Composes the factors and compares with source exactly; sets verified().
  bool verify_against(const Endomorphism& source);

  PlaneMap plane() const;
  Endomorphism compose() const { return plane().lift(); }
  /// Product of the factor multipliers.
  Rational multiplier() const;
  /// Factor-wise inverse in reverse order. Throws UnverifiedDecomposition.
  TameDecomposition inverse() const;

 private:
  std::vector<TameFactor> factors_;
  bool verified_ = false;
};

class NotAutomorphism : public MathNegative {
 public:
  enum class Reason { BracketComponent, PlaneMapNotInvertible };

  NotAutomorphism(Reason reason, const std::string& detail);
  Reason reason() const { return reason_; }
  /// "bracket-component" or "plane-map-not-invertible".
  std::string reason_code() const;

 private:
  Reason reason_;
};

std::string to_string(NotAutomorphism::Reason reason);

/// Leading-form cancellation on a plane map. Returns a verified decomposition
/// or throws NotAutomorphism(PlaneMapNotInvertible).
TameDecomposition jung_decompose(const PlaneMap& psi);

/// Decides whether theta is an automorphism of P<x1,x2>; on success the
/// returned decomposition recomposes to theta exactly.
TameDecomposition is_automorphism(const Endomorphism& theta);

/// Throws UnverifiedDecomposition.
Endomorphism invert(const TameDecomposition& phi);

/// alpha with theta({x1,x2}) = alpha {x1,x2}, or nullopt when the image is not
/// proportional to {x1,x2}.
std::optional<Rational> bracket_multiplier(const Endomorphism& theta);

/// theta({x1,x2}) = {x1,x2} exactly.
bool preserves_bracket(const Endomorphism& theta);

}  // namespace fpa
