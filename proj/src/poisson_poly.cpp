#include "fpa/poisson_poly.hpp"

#include <algorithm>
#include <sstream>

#include "fpa/errors.hpp"

namespace fpa {

// ---------------------------------------------------------------------------
// PoissonMonomial

PoissonMonomial::PoissonMonomial(LieMonomial m) : factors_{{m, 1u}} { recompute(); }

PoissonMonomial PoissonMonomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  PoissonMonomial out;
  for (const auto& [m, e] : factors) {
    if (e == 0) continue;
    if (!out.factors_.empty() && out.factors_.back().first == m) {
      out.factors_.back().second += e;
    } else {
      out.factors_.emplace_back(m, e);
    }
  }
  out.recompute();
  return out;
}

PoissonMonomial PoissonMonomial::from_sequence(const std::vector<LieMonomial>& seq) {
  std::vector<Factor> f;
  f.reserve(seq.size());
  for (LieMonomial m : seq) f.emplace_back(m, 1u);
  return from_factors(std::move(f));
}

void PoissonMonomial::recompute() {
  deg_ = 0;
  pdeg_ = 0;
  int letters = 0;
  for (const auto& [m, e] : factors_) letters = std::max(letters, m.max_letter());
  mdeg_.assign(letters, 0);
  for (const auto& [m, e] : factors_) {
    deg_ += static_cast<int>(e) * m.degree();
    pdeg_ += static_cast<int>(e);
    for (int i = 1; i <= m.max_letter(); ++i) mdeg_[i - 1] += static_cast<int>(e) * m.letter_count(i);
  }
}

std::vector<LieMonomial> PoissonMonomial::sequence() const {
  std::vector<LieMonomial> out;
  for (const auto& [m, e] : factors_) out.insert(out.end(), e, m);
  return out;
}

std::vector<int> PoissonMonomial::mdeg(int n) const {
  std::vector<int> out(n, 0);
  for (int i = 0; i < std::min<int>(n, static_cast<int>(mdeg_.size())); ++i) out[i] = mdeg_[i];
  return out;
}

bool PoissonMonomial::is_commutative() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const Factor& f) { return f.first.is_generator(); });
}

unsigned PoissonMonomial::exponent(LieMonomial x) const {
  for (const auto& [m, e] : factors_) {
    if (m == x) return e;
  }
  return 0;
}

PoissonMonomial PoissonMonomial::without(LieMonomial x) const {
  PoissonMonomial out;
  for (const auto& f : factors_) {
    if (f.first != x) out.factors_.push_back(f);
  }
  out.recompute();
  return out;
}

PoissonMonomial PoissonMonomial::reduced(std::size_t pos) const {
  PoissonMonomial out = *this;
  auto& [m, e] = out.factors_[pos];
  out.deg_ -= m.degree();
  --out.pdeg_;
  for (int i = 1; i <= m.max_letter(); ++i) out.mdeg_[i - 1] -= m.letter_count(i);
  while (!out.mdeg_.empty() && out.mdeg_.back() == 0) out.mdeg_.pop_back();
  if (--e == 0) out.factors_.erase(out.factors_.begin() + static_cast<std::ptrdiff_t>(pos));
  return out;
}

PoissonMonomial operator*(const PoissonMonomial& a, const PoissonMonomial& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  PoissonMonomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first == j->first) {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    } else if (i->first < j->first) {
      out.factors_.push_back(*i++);
    } else {
      out.factors_.push_back(*j++);
    }
  }
  out.factors_.insert(out.factors_.end(), i, a.factors_.end());
  out.factors_.insert(out.factors_.end(), j, b.factors_.end());
  out.deg_ = a.deg_ + b.deg_;
  out.pdeg_ = a.pdeg_ + b.pdeg_;
  out.mdeg_.assign(std::max(a.mdeg_.size(), b.mdeg_.size()), 0);
  for (std::size_t k = 0; k < a.mdeg_.size(); ++k) out.mdeg_[k] += a.mdeg_[k];
  for (std::size_t k = 0; k < b.mdeg_.size(); ++k) out.mdeg_[k] += b.mdeg_[k];
  return out;
}

std::string PoissonMonomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [m, e] : factors_) {
    if (!out.empty()) out += "*";
    out += m.to_string();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

int compare(const PoissonMonomial& a, const PoissonMonomial& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
  const int letters = std::max(a.max_letter(), b.max_letter());
  for (int i = 1; i <= letters; ++i) {
    const int ca = a.letter_count(i);
    const int cb = b.letter_count(i);
    if (ca != cb) return ca > cb ? -1 : 1;
  }
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (true) {
    if (i == fa.size() && j == fb.size()) return 0;
    if (i == fa.size()) return -1;
    if (j == fb.size()) return 1;
    if (fa[i].first != fb[j].first) return fa[i].first < fb[j].first ? -1 : 1;
    const unsigned ea = fa[i].second;
    const unsigned eb = fb[j].second;
    if (ea == eb) {
      ++i;
      ++j;
    } else if (ea < eb) {
      return i + 1 == fa.size() ? -1 : 1;
    } else {
      return j + 1 == fb.size() ? 1 : -1;
    }
  }
}

// ---------------------------------------------------------------------------
// PoissonPoly

PoissonPoly::PoissonPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace_back(PoissonMonomial(), c);
}

PoissonPoly::PoissonPoly(LieMonomial m) { terms_.emplace_back(PoissonMonomial(m), Rational(1)); }

PoissonPoly::PoissonPoly(const LieElement& e) {
  std::vector<Term> t;
  for (const auto& [m, c] : e.terms()) t.emplace_back(PoissonMonomial(m), c);
  *this = from_terms(std::move(t));
}

PoissonPoly::PoissonPoly(const PoissonMonomial& m, const Rational& c) {
  if (sgn(c) != 0) terms_.emplace_back(m, c);
}

PoissonPoly PoissonPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return compare(a.first, b.first) < 0; });
  PoissonPoly out;
  out.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
    } else {
      if (!out.terms_.empty() && sgn(out.terms_.back().second) == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && sgn(out.terms_.back().second) == 0) out.terms_.pop_back();
  return out;
}

Rational PoissonPoly::constant_term() const {
  if (!terms_.empty() && terms_.front().first.is_one()) return terms_.front().second;
  return Rational(0);
}

Rational PoissonPoly::coefficient(const PoissonMonomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const PoissonMonomial& key) { return compare(t.first, key) < 0; });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

int PoissonPoly::max_letter() const {
  int out = 0;
  for (const auto& [m, c] : terms_) out = std::max(out, m.max_letter());
  return out;
}

namespace {

std::vector<PoissonPoly::Term> merge_terms(const std::vector<PoissonPoly::Term>& a,
                                           const std::vector<PoissonPoly::Term>& b, bool subtract) {
  std::vector<PoissonPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    const int c = i == a.end() ? 1 : j == b.end() ? -1 : compare(i->first, j->first);
    if (c < 0) {
      out.push_back(*i++);
    } else if (c > 0) {
      out.emplace_back(j->first, subtract ? Rational(-j->second) : j->second);
      ++j;
    } else {
      Rational s = subtract ? Rational(i->second - j->second) : Rational(i->second + j->second);
      if (sgn(s) != 0) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

PoissonPoly& PoissonPoly::operator+=(const PoissonPoly& o) {
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

PoissonPoly& PoissonPoly::operator-=(const PoissonPoly& o) {
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

PoissonPoly PoissonPoly::operator-() const {
  PoissonPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

PoissonPoly operator*(const PoissonPoly& a, const PoissonPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<PoissonPoly::Term> t;
  t.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) t.emplace_back(ma * mb, ca * cb);
  }
  return PoissonPoly::from_terms(std::move(t));
}

PoissonPoly operator*(const Rational& c, const PoissonPoly& a) {
  if (sgn(c) == 0) return {};
  PoissonPoly out = a;
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

PoissonPoly add(const PoissonPoly& f, const PoissonPoly& g) { return f + g; }
PoissonPoly mul(const PoissonPoly& f, const PoissonPoly& g) { return f * g; }
PoissonPoly scale(const Rational& c, const PoissonPoly& f) { return c * f; }

PoissonPoly pow(const PoissonPoly& f, unsigned k) {
  PoissonPoly result(Rational(1));
  PoissonPoly base = f;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

void bracket_monomials(const PoissonMonomial& u, const PoissonMonomial& v, const Rational& c,
                       std::vector<PoissonPoly::Term>& out) {
  const auto& fu = u.factors();
  const auto& fv = v.factors();
  for (std::size_t i = 0; i < fu.size(); ++i) {
    const PoissonMonomial ui = u.reduced(i);
    for (std::size_t j = 0; j < fv.size(); ++j) {
      if (fu[i].first == fv[j].first) continue;
      const auto lie = normalize_bracket(fu[i].first, fv[j].first);
      if (lie->is_zero()) continue;
      const PoissonMonomial base = ui * v.reduced(j);
      const Rational coeff = c * fu[i].second * fv[j].second;
      for (const auto& [m, cm] : lie->terms()) out.emplace_back(base * PoissonMonomial(m), coeff * cm);
    }
  }
}

PoissonPoly poisson_bracket(const PoissonPoly& f, const PoissonPoly& g) {
  std::vector<PoissonPoly::Term> out;
  for (const auto& [u, cu] : f.terms()) {
    for (const auto& [v, cv] : g.terms()) bracket_monomials(u, v, cu * cv, out);
  }
  return PoissonPoly::from_terms(std::move(out));
}

// ---------------------------------------------------------------------------
// Degrees and leading parts

DegreeReport degrees(const PoissonPoly& f, int n, const std::optional<std::vector<int>>& weight) {
  if (f.is_zero()) throw DegreeOfZero();
  if (weight) {
    if (static_cast<int>(weight->size()) != n) throw UsageError("weight vector length must equal n");
    if (std::all_of(weight->begin(), weight->end(), [](int x) { return x == 0; })) {
      throw UsageError("weight vector must be nonzero");
    }
  }
  DegreeReport r;
  r.deg_x.assign(n, 0);
  bool first = true;
  bool homogeneous = true;
  std::vector<int> md0;
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> md = m.mdeg(n);
    int wd = 0;
    if (weight) {
      for (int i = 0; i < n; ++i) wd += md[i] * (*weight)[i];
    }
    if (first) {
      r.deg = m.deg();
      r.pdeg = m.pdeg();
      r.deg_x = md;
      md0 = md;
      if (weight) r.wdeg = wd;
      first = false;
      continue;
    }
    r.deg = std::max(r.deg, m.deg());
    r.pdeg = std::max(r.pdeg, m.pdeg());
    for (int i = 0; i < n; ++i) r.deg_x[i] = std::max(r.deg_x[i], md[i]);
    if (md != md0) homogeneous = false;
    if (weight) r.wdeg = std::max(*r.wdeg, wd);
  }
  if (homogeneous) r.mdeg = md0;
  return r;
}

std::set<LieMonomial> support(const PoissonPoly& f) {
  std::set<LieMonomial> out;
  for (const auto& [m, c] : f.terms()) {
    for (const auto& [lie, e] : m.factors()) out.insert(lie);
  }
  return out;
}

int pdeg_in(const PoissonPoly& f, LieMonomial x) {
  unsigned out = 0;
  for (const auto& [m, c] : f.terms()) out = std::max(out, m.exponent(x));
  return static_cast<int>(out);
}

LeadingPart leading_part(const PoissonPoly& f, LieMonomial x) {
  if (f.is_zero()) throw DegreeOfZero();
  LeadingPart out;
  out.pdeg = pdeg_in(f, x);
  std::vector<PoissonPoly::Term> t;
  for (const auto& [m, c] : f.terms()) {
    if (static_cast<int>(m.exponent(x)) == out.pdeg) t.emplace_back(m.without(x), c);
  }
  out.lead = PoissonPoly::from_terms(std::move(t));
  return out;
}

Grading Grading::by_weight(std::vector<int> w) {
  if (w.empty() || std::all_of(w.begin(), w.end(), [](int x) { return x == 0; })) {
    throw UsageError("weight vector must be nonzero");
  }
  return {Kind::Weight, std::move(w)};
}

GradeKey Grading::key(const PoissonMonomial& m, int n) const {
  switch (kind) {
    case Kind::Multi:
      return m.mdeg(n);
    case Kind::Weight: {
      int s = 0;
      for (std::size_t i = 0; i < weight.size(); ++i) s += weight[i] * m.letter_count(static_cast<int>(i) + 1);
      return {s};
    }
    case Kind::Polynomial:
      return {m.pdeg()};
  }
  return {};
}

std::map<GradeKey, PoissonPoly> homogeneous_components(const PoissonPoly& f, const Grading& grading, int n) {
  if (grading.kind == Grading::Kind::Weight && static_cast<int>(grading.weight.size()) != n) {
    throw UsageError("weight vector length must equal n");
  }
  std::map<GradeKey, std::vector<PoissonPoly::Term>> buckets;
  for (const auto& t : f.terms()) buckets[grading.key(t.first, n)].push_back(t);
  std::map<GradeKey, PoissonPoly> out;
  for (auto& [k, t] : buckets) out.emplace(k, PoissonPoly::from_terms(std::move(t)));
  return out;
}

}  // namespace fpa
