#include "fpa/random.hpp"

#include <map>
#include <mutex>

namespace fpa {

int Rng::uniform(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

int Rng::nonzero(int lo, int hi) {
  while (true) {
    const int v = uniform(lo, hi);
    if (v != 0) return v;
  }
}

namespace {

// Basis elements on n generators grouped by degree.
const std::vector<LieMonomial>& layer(int n, int deg) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<LieMonomial>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(n, deg);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<LieMonomial> out;
  for (const auto& m : generate_basis(n, deg)) {
    if (m.degree() == deg) out.push_back(m);
  }
  return cache.emplace(key, std::move(out)).first->second;
}

// Random composition of deg into k positive parts.
std::vector<int> random_parts(Rng& rng, int deg, int k) {
  std::vector<int> parts(k, 1);
  for (int extra = deg - k; extra > 0; --extra) ++parts[rng.uniform(0, k - 1)];
  return parts;
}

PoissonMonomial from_parts(Rng& rng, int n, const std::vector<int>& parts) {
  std::vector<LieMonomial> seq;
  for (int p : parts) seq.push_back(rng.pick(layer(n, p)));
  return PoissonMonomial::from_sequence(seq);
}

}  // namespace

PoissonMonomial random_monomial(Rng& rng, int n, int deg) {
  if (deg == 0) return PoissonMonomial();
  return from_parts(rng, n, random_parts(rng, deg, rng.uniform(1, deg)));
}

std::optional<PoissonMonomial> random_monomial_with_factors(Rng& rng, int n, int deg, int k) {
  if (k > deg || k < 0 || (k == 0 && deg > 0)) return std::nullopt;
  if (k == 0) return PoissonMonomial();
  return from_parts(rng, n, random_parts(rng, deg, k));
}

PoissonPoly random_poly(Rng& rng, const PolyShape& shape) {
  std::vector<PoissonPoly::Term> terms;
  const int count = rng.uniform(1, shape.max_terms);
  for (int t = 0; t < count; ++t) {
    const int lo_pdeg = shape.fixed_pdeg.value_or(0);
    const int lo = std::max(shape.allow_constant ? 0 : 1, lo_pdeg);
    const int deg = shape.fixed_deg.value_or(rng.uniform(lo, std::max(lo, shape.max_deg)));
    std::optional<PoissonMonomial> m;
    if (shape.fixed_pdeg) {
      m = random_monomial_with_factors(rng, shape.n, deg, *shape.fixed_pdeg);
      if (!m) continue;
    } else {
      m = random_monomial(rng, shape.n, deg);
    }
    terms.emplace_back(*m, Rational(rng.nonzero(-shape.coeff_bound, shape.coeff_bound)));
  }
  return PoissonPoly::from_terms(std::move(terms));
}

UnivariatePoly random_univariate(Rng& rng, int min_deg, int max_deg) {
  const int deg = rng.uniform(min_deg, max_deg);
  std::vector<Rational> c(deg + 1, Rational(0));
  for (int k = 0; k < deg; ++k) c[k] = rng.uniform(-2, 2);
  c[deg] = rng.nonzero(-2, 2);
  return UnivariatePoly(std::move(c));
}

TameFactor random_factor(Rng& rng, int max_elementary_deg) {
  if (rng.uniform(0, 3) == 0) {
    while (true) {
      const int a = rng.uniform(-2, 2), b = rng.uniform(-2, 2), c = rng.uniform(-2, 2), d = rng.uniform(-2, 2);
      if (a * d - b * c != 0) return TameFactor::linear(Rational(a), Rational(b), Rational(c), Rational(d));
    }
  }
  const int target = rng.uniform(1, 2);
  const int alpha = rng.pick(std::vector<int>{-2, -1, 1, 1, 2});
  return TameFactor::elementary(target, Rational(alpha), random_univariate(rng, 1, max_elementary_deg));
}

TameDecomposition random_tame(Rng& rng, const TameShape& shape) {
  std::vector<TameFactor> factors;
  const int k = rng.uniform(1, shape.max_factors);
  int product = 1;
  for (int i = 0; i < k; ++i) {
    const int room = std::min(shape.max_elementary_deg, shape.degree_product_cap / product);
    if (room < 1) break;
    TameFactor f = random_factor(rng, std::max(1, room));
    if (!f.is_linear()) product *= std::max(1, f.as_elementary().f.degree());
    factors.push_back(std::move(f));
  }
  return TameDecomposition::from_factors(std::move(factors));
}

Derivation triangular_plane(const UnivariatePoly& f, const Rational& c) {
  return Derivation({f.evaluate_at(PoissonPoly::generator(2)), PoissonPoly(c)});
}

RandomLnd random_lnd(Rng& rng, const LndShape& shape) {
  RandomLnd out;
  out.phi = random_tame(rng, shape.conjugator);
  out.f = random_univariate(rng, 0, shape.max_f_deg);
  out.c = shape.add_x2_shift ? Rational(rng.uniform(-2, 2)) : Rational(0);
  out.triangular = triangular_plane(out.f, out.c);
  out.d = conjugate(out.phi, out.triangular);
  return out;
}

}  // namespace fpa
