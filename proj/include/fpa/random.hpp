#pragma once

// Seeded generators for property suites. Draws go through std::mt19937_64
// with explicit range reduction, so a seed gives the same stream everywhere.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "fpa/automorphism.hpp"
#include "fpa/derivation.hpp"
#include "fpa/poisson_poly.hpp"

namespace fpa {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  int uniform(int lo, int hi);
  bool coin() { return uniform(0, 1) == 1; }
  /// Uniform in [lo, hi] \ {0}.
  int nonzero(int lo, int hi);

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

struct PolyShape {
  int n = 2;
  int max_deg = 4;
  int max_terms = 4;
  int coeff_bound = 3;  // coefficients in [-bound, bound]
  bool allow_constant = false;
  std::optional<int> fixed_deg;   // every monomial of this degree
  std::optional<int> fixed_pdeg;  // every monomial with this many factors
};

/// Random monomial of the given degree built from basis Lie monomials.
PoissonMonomial random_monomial(Rng& rng, int n, int deg);
/// Degree-deg monomial with exactly k factors; nullopt when k > deg.
std::optional<PoissonMonomial> random_monomial_with_factors(Rng& rng, int n, int deg, int k);
/// Nonzero unless every drawn coefficient happened to cancel.
PoissonPoly random_poly(Rng& rng, const PolyShape& shape);

/// Coefficients in [-2, 2], degree <= max_deg, leading coefficient nonzero
/// when min_deg >= 0 is reached.
UnivariatePoly random_univariate(Rng& rng, int min_deg, int max_deg);

struct TameShape {
  int max_factors = 4;
  int max_elementary_deg = 4;
  /// Upper bound on the product of the elementary degrees (>= 1 each).
  int degree_product_cap = 16;
};

TameFactor random_factor(Rng& rng, int max_elementary_deg);
/// Verified decomposition with 1..max_factors factors.
TameDecomposition random_tame(Rng& rng, const TameShape& shape);

struct LndShape {
  TameShape conjugator{3, 4, 6};
  int max_f_deg = 4;
  bool add_x2_shift = false;  // f(x2) d/dx1 + c d/dx2
};

struct RandomLnd {
  TameDecomposition phi;
  UnivariatePoly f;
  Rational c;           // coefficient of d/dx2 before conjugation
  Derivation triangular;
  Derivation d;         // conjugate(phi, triangular)
};

RandomLnd random_lnd(Rng& rng, const LndShape& shape);

/// f(x2) d/dx1 + c d/dx2 on two generators.
Derivation triangular_plane(const UnivariatePoly& f, const Rational& c = Rational(0));

}  // namespace fpa
