#pragma once

// Derivations of P<x1,...,xn> as a Poisson algebra. A derivation is fixed by
// the images of the generators; it acts on products by the Leibniz rule and
// on brackets by the Jacobi-Leibniz rule D{a,b} = {Da,b} + {a,Db}.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "fpa/poisson_poly.hpp"

namespace fpa {

class TameDecomposition;

class Derivation {
 public:
  Derivation() = default;
  /// images[i] = D(x_{i+1}).
  explicit Derivation(std::vector<PoissonPoly> images);
  static Derivation zero(int n) { return Derivation(std::vector<PoissonPoly>(n)); }
  /// d/dx_i on n generators.
  static Derivation partial(int n, int i);

  int n() const { return static_cast<int>(images_.size()); }
  const std::vector<PoissonPoly>& images() const { return images_; }
  /// D(x_i), 1-based.
  const PoissonPoly& image(int i) const { return images_.at(i - 1); }
  bool is_zero() const;

  Derivation& operator+=(const Derivation& o);
  Derivation& operator-=(const Derivation& o);
  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
  friend Derivation operator*(const Rational& c, const Derivation& d);
  friend bool operator==(const Derivation& a, const Derivation& b) { return a.images_ == b.images_; }

 private:
  std::vector<PoissonPoly> images_;
};

/// Applies a fixed derivation repeatedly, caching its values on basis Lie
/// monomials.
class DerivationApplier {
 public:
  explicit DerivationApplier(const Derivation& d) : d_(d) {}

  PoissonPoly operator()(const PoissonPoly& f);
  const PoissonPoly& on_basis(LieMonomial m);

 private:
  const Derivation& d_;
  std::unordered_map<LieMonomial, PoissonPoly> cache_;
};

PoissonPoly apply(const Derivation& d, const PoissonPoly& f);

/// fD: images multiplied by f.
Derivation scale(const PoissonPoly& f, const Derivation& d);

struct DerivationDegrees {
  DegreeReport report;
  std::set<LieMonomial> support;  // S(D)
};

/// Degrees read off the expansion in the basis u d/dx_i, where such a term has
/// mdeg(u) - e_i and pdeg(u) - 1. Throws DegreeOfZero for D = 0.
DerivationDegrees der_degrees(const Derivation& d, const std::optional<std::vector<int>>& weight = {});

/// S(D) = union of S(D(x_i)).
std::set<LieMonomial> support(const Derivation& d);

/// D = sum of components D_k with D_k(P_m) in P_{m+k}.
std::map<GradeKey, Derivation> homogeneous_components(const Derivation& d, const Grading& grading);

struct LeadingDerivation {
  int pdeg = 0;
  Derivation lead;
};

/// D = D_0 + x D_1 + ... + x^m D_m with x not in S(D_i); returns (m, D_m).
LeadingDerivation leading_der(const Derivation& d, LieMonomial x);

/// D(x_i) lies in P<x_{i+1},...,x_n> for every i.
bool is_triangular(const Derivation& d);

struct NilpotencyVerdict {
  enum class Status { Nilpotent, ExceededCap };

  Status status = Status::ExceededCap;
  /// Minimal m_i with D^{m_i}(x_i) = 0; filled when Nilpotent.
  std::vector<int> bounds;
  int cap = 0;

  bool nilpotent() const { return status == Status::Nilpotent; }
};

inline constexpr int kDefaultNilpotencyCap = 32;

/// Iterates D on each generator. Vanishing of every D^{m_i}(x_i) within the
/// cap certifies local nilpotency on all of P; otherwise the answer is
/// inconclusive (ExceededCap), never a disproof.
NilpotencyVerdict nilpotency_check(const Derivation& d, int cap = kDefaultNilpotencyCap);

/// E with E(x_i) = phi^{-1}(D(phi(x_i))). Throws UnverifiedDecomposition.
Derivation conjugate(const TameDecomposition& phi, const Derivation& d);

/// D({x1,x2}); zero for every locally nilpotent D on two generators.
PoissonPoly bracket_kill_check(const Derivation& d);

}  // namespace fpa
