#include "fpa/commutative.hpp"

#include <sstream>

#include "fpa/errors.hpp"

namespace fpa {

namespace {

void append_signed(std::ostringstream& os, bool first, const Rational& c, const std::string& mono) {
  if (first) {
    if (sgn(c) < 0) os << "-";
  } else {
    os << (sgn(c) < 0 ? " - " : " + ");
  }
  Rational mag = abs(c);
  if (mono.empty()) {
    os << mag.get_str();
  } else if (mag == 1) {
    os << mono;
  } else {
    os << mag.get_str() << "*" << mono;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// UnivariatePoly

UnivariatePoly::UnivariatePoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UnivariatePoly UnivariatePoly::monomial(const Rational& c, int k) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return UnivariatePoly(std::move(v));
}

void UnivariatePoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UnivariatePoly::coefficient(int k) const {
  return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : Rational(0);
}

UnivariatePoly& UnivariatePoly::operator+=(const UnivariatePoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UnivariatePoly operator*(const Rational& c, const UnivariatePoly& p) {
  std::vector<Rational> v = p.coeffs_;
  for (auto& x : v) x *= c;
  return UnivariatePoly(std::move(v));
}

PoissonPoly UnivariatePoly::evaluate_at(const PoissonPoly& x) const {
  // Horner
  PoissonPoly out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * x + PoissonPoly(*it);
  return out;
}

std::string UnivariatePoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    std::string mono = k == 0 ? "" : k == 1 ? var : var + "^" + std::to_string(k);
    append_signed(os, first, coeffs_[k], mono);
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// CommutativePoly

CommutativePoly::CommutativePoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Exponent{0, 0}, c);
}

CommutativePoly CommutativePoly::monomial(const Rational& c, int a, int b) {
  CommutativePoly p;
  p.add_term({a, b}, c);
  return p;
}

Rational CommutativePoly::coefficient(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Rational(0) : it->second;
}

void CommutativePoly::add_term(const Exponent& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int CommutativePoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1]);
  return d;
}

int CommutativePoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var - 1]);
  return d;
}

CommutativePoly CommutativePoly::top_form() const {
  const int d = degree();
  CommutativePoly out;
  for (const auto& [e, c] : terms_) {
    if (e[0] + e[1] == d) out.terms_.emplace(e, c);
  }
  return out;
}

std::pair<CommutativePoly::Exponent, Rational> CommutativePoly::leading_term() const {
  if (terms_.empty()) throw DegreeOfZero();
  // Greatest in the printing order: highest degree, then smallest x1 exponent
  // (x1^a x2^b with larger a prints first within a degree).
  const auto* best = &*terms_.begin();
  for (const auto& t : terms_) {
    const int dt = t.first[0] + t.first[1];
    const int db = best->first[0] + best->first[1];
    if (dt > db || (dt == db && t.first[0] < best->first[0])) best = &t;
  }
  return *best;
}

CommutativePoly CommutativePoly::derivative(int var) const {
  CommutativePoly out;
  const int k = var - 1;
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponent f = e;
    --f[k];
    out.add_term(f, c * e[k]);
  }
  return out;
}

CommutativePoly CommutativePoly::substitute(const CommutativePoly& p, const CommutativePoly& q) const {
  std::map<int, CommutativePoly> pp;
  std::map<int, CommutativePoly> qq;
  auto power = [](std::map<int, CommutativePoly>& cache, const CommutativePoly& base, int k) -> const CommutativePoly& {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    CommutativePoly value = k == 0 ? CommutativePoly(Rational(1)) : pow(base, static_cast<unsigned>(k));
    return cache.emplace(k, std::move(value)).first->second;
  };
  CommutativePoly out;
  for (const auto& [e, c] : terms_) {
    out += c * (power(pp, p, e[0]) * power(qq, q, e[1]));
  }
  return out;
}

CommutativePoly& CommutativePoly::operator+=(const CommutativePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CommutativePoly& CommutativePoly::operator-=(const CommutativePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

CommutativePoly operator*(const CommutativePoly& a, const CommutativePoly& b) {
  CommutativePoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term({ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
  }
  return out;
}

CommutativePoly operator*(const Rational& c, const CommutativePoly& a) {
  CommutativePoly out;
  if (sgn(c) == 0) return out;
  for (const auto& [e, x] : a.terms_) out.terms_.emplace(e, c * x);
  return out;
}

CommutativePoly pow(const CommutativePoly& p, unsigned k) {
  CommutativePoly result(Rational(1));
  CommutativePoly base = p;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

PoissonPoly CommutativePoly::lift() const {
  const LieMonomial g1 = LieMonomial::generator(1);
  const LieMonomial g2 = LieMonomial::generator(2);
  std::vector<PoissonPoly::Term> t;
  t.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    t.emplace_back(PoissonMonomial::from_factors({{g1, static_cast<unsigned>(e[0])},
                                                  {g2, static_cast<unsigned>(e[1])}}),
                   c);
  }
  return PoissonPoly::from_terms(std::move(t));
}

std::string CommutativePoly::to_string() const {
  const PoissonPoly lifted = lift();
  if (lifted.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : lifted.terms()) {
    append_signed(os, first, c, m.is_one() ? "" : m.to_string());
    first = false;
  }
  return os.str();
}

std::pair<CommutativePoly, PoissonPoly> split_commutative(const PoissonPoly& f) {
  if (f.max_letter() > 2) throw UsageError("abelianization is defined for two generators");
  CommutativePoly plane;
  std::vector<PoissonPoly::Term> rest;
  for (const auto& [m, c] : f.terms()) {
    if (m.is_commutative()) {
      plane.add_term({m.letter_count(1), m.letter_count(2)}, c);
    } else {
      rest.emplace_back(m, c);
    }
  }
  return {std::move(plane), PoissonPoly::from_terms(std::move(rest))};
}

}  // namespace fpa
