#pragma once

// Triangulation of locally nilpotent derivations of P<x1,x2>: a verified tame
// automorphism phi and f in k[x2] with phi^{-1} D phi = f(x2) d/dx1.

#include <array>
#include <optional>

#include "fpa/automorphism.hpp"
#include "fpa/commutative.hpp"
#include "fpa/derivation.hpp"
#include "fpa/errors.hpp"

namespace fpa {

/// A derivation of k[x1,x2], given by the images of x1 and x2.
struct PlaneDerivation {
  CommutativePoly first;
  CommutativePoly second;

  const CommutativePoly& image(int i) const { return i == 1 ? first : second; }
  bool is_zero() const { return first.is_zero() && second.is_zero(); }
  /// Largest total degree of the two images; -1 for zero.
  int degree() const { return std::max(first.degree(), second.degree()); }
  CommutativePoly operator()(const CommutativePoly& p) const;

  friend bool operator==(const PlaneDerivation&, const PlaneDerivation&) = default;
};

struct InducedPlane {
  PlaneDerivation plane;
  /// Parts of D(x1), D(x2) lying in the ideal generated by {x1,x2}.
  std::array<PoissonPoly, 2> remainder;
};

InducedPlane induce_plane(const Derivation& d);

class NotNilpotentEvidence : public MathNegative {
 public:
  using MathNegative::MathNegative;
};

class NotCoordinate : public MathNegative {
 public:
  using MathNegative::MathNegative;
};

class NotCertifiedNilpotent : public MathNegative {
 public:
  using MathNegative::MathNegative;
};

/// The pipeline produced something other than f(x2) d/dx1. Indicates a defect,
/// not a property of the input.
class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (deg D' + 1)^2 + 2.
int default_sweep_bound(const PlaneDerivation& d);

/// Nonconstant p without constant term, of minimal total degree, with
/// D'(p) = 0, scaled so that its leading term has coefficient 1. Throws
/// NotNilpotentEvidence when no such p has degree <= bound.
CommutativePoly kernel_generator(const PlaneDerivation& d, std::optional<int> bound = {});

/// psi with psi(x2) = p and psi(x1) = q of least degree solving
/// q_x1 p_x2 - q_x2 p_x1 = 1. Throws NotCoordinate.
TameDecomposition coordinate_reduce(const CommutativePoly& p);

struct TriangulationResult {
  TameDecomposition phi;
  UnivariatePoly f;  // in x2
  bool verified = false;
};

/// Throws NotCertifiedNilpotent when nilpotency_check(d, cap) is inconclusive.
TriangulationResult triangulate(const Derivation& d, int cap = kDefaultNilpotencyCap);

}  // namespace fpa
