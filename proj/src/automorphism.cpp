#include "fpa/automorphism.hpp"

#include <sstream>

namespace fpa {

namespace {

void require_plane(int n, const char* what) {
  if (n != 2) throw UsageError(std::string(what) + " is defined for two generators only");
}

}  // namespace

// ---------------------------------------------------------------------------
// Endomorphism

Endomorphism::Endomorphism(std::vector<PoissonPoly> images) : images_(std::move(images)) {
  if (images_.empty()) throw UsageError("an endomorphism needs at least one generator");
  for (const auto& f : images_) {
    if (f.max_letter() > n()) throw UsageError("image involves a generator beyond x" + std::to_string(n()));
  }
}

Endomorphism Endomorphism::identity(int n) {
  std::vector<PoissonPoly> images;
  for (int i = 1; i <= n; ++i) images.push_back(PoissonPoly::generator(i));
  return Endomorphism(std::move(images));
}

const PoissonPoly& EndomorphismApplier::on_basis(LieMonomial m) {
  if (auto it = cache_.find(m); it != cache_.end()) return it->second;
  PoissonPoly value;
  if (m.is_generator()) {
    const int i = m.generator_index();
    if (i > theta_.n()) throw UsageError("element involves x" + std::to_string(i) + " beyond the endomorphism");
    value = theta_.image(i);
  } else {
    PoissonPoly l = on_basis(m.left());
    value = poisson_bracket(l, on_basis(m.right()));
  }
  return cache_.emplace(m, std::move(value)).first->second;
}

const PoissonPoly& EndomorphismApplier::power(LieMonomial m, unsigned e) {
  if (e == 1) return on_basis(m);
  const auto key = std::pair<const void*, unsigned>{m.node(), e};
  if (auto it = powers_.find(key); it != powers_.end()) return it->second;
  PoissonPoly value = power(m, e - 1) * on_basis(m);
  return powers_.emplace(key, std::move(value)).first->second;
}

PoissonPoly EndomorphismApplier::operator()(const PoissonPoly& f) {
  PoissonPoly out;
  for (const auto& [mono, c] : f.terms()) {
    PoissonPoly term(c);
    for (const auto& [m, e] : mono.factors()) {
      term *= power(m, e);
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

PoissonPoly apply_endo(const Endomorphism& theta, const PoissonPoly& f) {
  EndomorphismApplier a(theta);
  return a(f);
}

Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner) {
  if (outer.n() != inner.n()) throw UsageError("generator counts differ");
  EndomorphismApplier a(outer);
  std::vector<PoissonPoly> images;
  for (const auto& f : inner.images()) images.push_back(a(f));
  return Endomorphism(std::move(images));
}

// ---------------------------------------------------------------------------
// Plane maps and factors

PlaneMap compose(const PlaneMap& outer, const PlaneMap& inner) {
  return {inner.first.substitute(outer.first, outer.second),
          inner.second.substitute(outer.first, outer.second)};
}

Abelianization abelianize(const Endomorphism& theta) {
  require_plane(theta.n(), "abelianization");
  auto [p1, r1] = split_commutative(theta.image(1));
  auto [p2, r2] = split_commutative(theta.image(2));
  return {{std::move(p1), std::move(p2)}, {std::move(r1), std::move(r2)}};
}

TameFactor TameFactor::linear(Rational a, Rational b, Rational c, Rational d) {
  LinearFactor l{{{{std::move(a), std::move(b)}, {std::move(c), std::move(d)}}}};
  if (sgn(l.det()) == 0) throw UsageError("linear factor must be invertible");
  return TameFactor(l);
}

TameFactor TameFactor::elementary(int target, Rational alpha, UnivariatePoly f) {
  if (target != 1 && target != 2) throw UsageError("elementary target must be 1 or 2");
  if (sgn(alpha) == 0) throw UsageError("elementary scalar must be nonzero");
  return TameFactor(ElementaryFactor{target, std::move(alpha), std::move(f)});
}

Rational TameFactor::multiplier() const {
  return is_linear() ? as_linear().det() : as_elementary().alpha;
}

TameFactor TameFactor::inverse() const {
  if (is_linear()) {
    const auto& m = as_linear().m;
    const Rational det = as_linear().det();
    return linear(m[1][1] / det, -m[0][1] / det, -m[1][0] / det, m[0][0] / det);
  }
  const auto& e = as_elementary();
  const Rational inv = 1 / e.alpha;
  return elementary(e.target, inv, Rational(-inv) * e.f);
}

PlaneMap TameFactor::plane() const {
  if (is_linear()) {
    const auto& m = as_linear().m;
    return {m[0][0] * CommutativePoly::x1() + m[0][1] * CommutativePoly::x2(),
            m[1][0] * CommutativePoly::x1() + m[1][1] * CommutativePoly::x2()};
  }
  const auto& e = as_elementary();
  CommutativePoly other = CommutativePoly::variable(e.other());
  CommutativePoly f;
  for (int k = 0; k <= e.f.degree(); ++k) {
    f += e.target == 1 ? CommutativePoly::monomial(e.f.coefficient(k), 0, k)
                       : CommutativePoly::monomial(e.f.coefficient(k), k, 0);
  }
  CommutativePoly moved = e.alpha * CommutativePoly::variable(e.target) + f;
  return e.target == 1 ? PlaneMap{moved, other} : PlaneMap{other, moved};
}

bool TameFactor::is_identity() const {
  if (is_linear()) {
    const auto& m = as_linear().m;
    return m[0][0] == 1 && m[0][1] == 0 && m[1][0] == 0 && m[1][1] == 1;
  }
  return as_elementary().alpha == 1 && as_elementary().f.is_zero();
}

std::string TameFactor::to_string() const {
  std::ostringstream os;
  if (is_linear()) {
    const auto& m = as_linear().m;
    os << "linear((" << m[0][0].get_str() << ", " << m[0][1].get_str() << "), (" << m[1][0].get_str()
       << ", " << m[1][1].get_str() << "))";
    return os.str();
  }
  const auto& e = as_elementary();
  const std::string t = "x" + std::to_string(e.target);
  os << "elementary(" << t << " -> ";
  if (e.alpha != 1) os << e.alpha.get_str() << "*";
  os << t;
  if (!e.f.is_zero()) os << " + (" << e.f.to_string("x" + std::to_string(e.other())) << ")";
  os << ")";
  return os.str();
}

PlaneMap compose(const PlaneMap& acc, const TameFactor& factor) {
  if (factor.is_linear()) {
    const auto& m = factor.as_linear().m;
    return {m[0][0] * acc.first + m[0][1] * acc.second, m[1][0] * acc.first + m[1][1] * acc.second};
  }
  const auto& e = factor.as_elementary();
  const CommutativePoly& other = acc.image(e.other());
  // Horner evaluation of f at the other image.
  CommutativePoly f_other;
  for (int k = e.f.degree(); k >= 0; --k) f_other = f_other * other + CommutativePoly(e.f.coefficient(k));
  CommutativePoly moved = e.alpha * acc.image(e.target) + f_other;
  return e.target == 1 ? PlaneMap{std::move(moved), acc.second} : PlaneMap{acc.first, std::move(moved)};
}

// ---------------------------------------------------------------------------
// TameDecomposition

TameDecomposition TameDecomposition::from_factors(std::vector<TameFactor> factors) {
  TameDecomposition d(std::move(factors));
  d.verified_ = true;
  return d;
}

PlaneMap TameDecomposition::plane() const {
  PlaneMap acc = PlaneMap::identity();
  for (const auto& f : factors_) acc = fpa::compose(acc, f);
  return acc;
}

bool TameDecomposition::verify_against(const Endomorphism& source) {
  verified_ = source.n() == 2 && compose() == source;
  return verified_;
}

Rational TameDecomposition::multiplier() const {
  Rational out(1);
  for (const auto& f : factors_) out *= f.multiplier();
  return out;
}

TameDecomposition TameDecomposition::inverse() const {
  if (!verified_) throw UnverifiedDecomposition();
  std::vector<TameFactor> inv;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) inv.push_back(it->inverse());
  return from_factors(std::move(inv));
}

NotAutomorphism::NotAutomorphism(Reason reason, const std::string& detail)
    : MathNegative("not an automorphism (" + fpa::to_string(reason) + "): " + detail), reason_(reason) {}

std::string NotAutomorphism::reason_code() const { return fpa::to_string(reason_); }

std::string to_string(NotAutomorphism::Reason reason) {
  switch (reason) {
    case NotAutomorphism::Reason::BracketComponent:
      return "bracket-component";
    case NotAutomorphism::Reason::PlaneMapNotInvertible:
      return "plane-map-not-invertible";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Jung - van der Kulk decomposition

namespace {

// c with a = c * b when the two nonzero polynomials are proportional.
std::optional<Rational> proportionality(const CommutativePoly& a, const CommutativePoly& b) {
  if (a.size() != b.size()) return std::nullopt;
  const auto [eb, cb] = b.leading_term();
  const Rational c = a.coefficient(eb[0], eb[1]) / cb;
  if (sgn(c) == 0 || !(a == c * b)) return std::nullopt;
  return c;
}

// Adjacent factors L o E and E o E' on the same target collapse into one
// elementary factor.
std::vector<TameFactor> merge_factors(std::vector<TameFactor> in) {
  std::vector<TameFactor> out;
  for (auto& f : in) {
    if (f.is_identity()) continue;
    if (!out.empty() && !f.is_linear()) {
      const TameFactor& prev = out.back();
      const auto& e = f.as_elementary();
      if (!prev.is_linear() && prev.as_elementary().target == e.target) {
        // x_t -> a1 x_t + f1 then x_t -> a2 x_t + f2 : x_t -> a1 a2 x_t + a2 f1 + f2
        const auto& p = prev.as_elementary();
        TameFactor merged = TameFactor::elementary(e.target, p.alpha * e.alpha, e.alpha * p.f + e.f);
        out.pop_back();
        if (!merged.is_identity()) out.push_back(std::move(merged));
        continue;
      }
      if (prev.is_linear()) {
        const auto& m = prev.as_linear().m;
        const int t = e.target - 1;
        const int o = 1 - t;
        if (m[0][1] == 0 && m[1][0] == 0 && m[o][o] == 1) {
          TameFactor merged = TameFactor::elementary(e.target, m[t][t] * e.alpha, e.f);
          out.pop_back();
          if (!merged.is_identity()) out.push_back(std::move(merged));
          continue;
        }
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

[[noreturn]] void not_invertible(const std::string& why) {
  throw NotAutomorphism(NotAutomorphism::Reason::PlaneMapNotInvertible, why);
}

}  // namespace

TameDecomposition jung_decompose(const PlaneMap& psi) {
  PlaneMap cur = psi;
  std::vector<TameFactor> peeled;  // psi = cur o peeled[last] o ... o peeled[0]
  while (true) {
    const int d1 = cur.first.degree();
    const int d2 = cur.second.degree();
    if (d1 < 1 || d2 < 1) not_invertible("a component reduced to a constant");
    if (d1 == 1 && d2 == 1) break;
    if (d1 == d2) {
      // Tie: cancel the leading form of the second image against the first.
      auto c = proportionality(cur.second.top_form(), cur.first.top_form());
      if (!c) not_invertible("leading forms of equal degree are not proportional");
      cur.second -= *c * cur.first;
      peeled.push_back(TameFactor::linear(Rational(1), Rational(0), *c, Rational(1)));
      continue;
    }
    const int hi = d1 > d2 ? 1 : 2;
    const int lo = 3 - hi;
    const int dh = std::max(d1, d2);
    const int dl = std::min(d1, d2);
    if (dh % dl != 0) not_invertible("degrees " + std::to_string(d1) + " and " + std::to_string(d2) +
                                     " do not divide one another");
    const unsigned k = static_cast<unsigned>(dh / dl);
    const CommutativePoly& low = cur.image(lo);
    const CommutativePoly low_pow = pow(low, k);
    auto c = proportionality(cur.image(hi).top_form(), low_pow.top_form());
    if (!c) not_invertible("leading form is not a power of the other leading form");
    CommutativePoly& high = hi == 1 ? cur.first : cur.second;
    high -= *c * low_pow;
    peeled.push_back(TameFactor::elementary(hi, Rational(1), UnivariatePoly::monomial(*c, static_cast<int>(k))));
  }

  // Affine remainder: cur = L o T with T a translation.
  const Rational a = cur.first.coefficient(1, 0);
  const Rational b = cur.first.coefficient(0, 1);
  const Rational c = cur.second.coefficient(1, 0);
  const Rational d = cur.second.coefficient(0, 1);
  if (sgn(a * d - b * c) == 0) not_invertible("linear part is singular");
  std::vector<TameFactor> factors;
  factors.push_back(TameFactor::linear(a, b, c, d));
  factors.push_back(TameFactor::elementary(1, Rational(1), UnivariatePoly({cur.first.coefficient(0, 0)})));
  factors.push_back(TameFactor::elementary(2, Rational(1), UnivariatePoly({cur.second.coefficient(0, 0)})));
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) factors.push_back(*it);

  TameDecomposition out(merge_factors(std::move(factors)));
  if (!(out.plane() == psi)) {
    throw std::logic_error("tame decomposition does not recompose to its input");
  }
  return TameDecomposition::from_factors(out.factors());
}

TameDecomposition is_automorphism(const Endomorphism& theta) {
  require_plane(theta.n(), "automorphism decision");
  const Abelianization ab = abelianize(theta);
  if (!ab.commutative()) {
    const int i = ab.remainder[0].is_zero() ? 2 : 1;
    throw NotAutomorphism(NotAutomorphism::Reason::BracketComponent,
                          "image of x" + std::to_string(i) + " has a component in the bracket ideal");
  }
  TameDecomposition phi(jung_decompose(ab.plane).factors());
  if (!phi.verify_against(theta)) throw std::logic_error("decomposition does not reproduce the endomorphism");
  return phi;
}

Endomorphism invert(const TameDecomposition& phi) { return phi.inverse().compose(); }

std::optional<Rational> bracket_multiplier(const Endomorphism& theta) {
  require_plane(theta.n(), "bracket multiplier");
  const LieMonomial b = normalize_bracket(LieMonomial::generator(1), LieMonomial::generator(2))->terms().begin()->first;
  const PoissonPoly image = apply_endo(theta, PoissonPoly(b));
  if (image.is_zero()) return Rational(0);
  if (image.size() != 1 || !(image.terms()[0].first == PoissonMonomial(b))) return std::nullopt;
  return image.terms()[0].second;
}

bool preserves_bracket(const Endomorphism& theta) {
  auto alpha = bracket_multiplier(theta);
  return alpha && *alpha == 1;
}

}  // namespace fpa
