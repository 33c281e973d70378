#include "fpa/derivation.hpp"

#include <algorithm>

#include "fpa/automorphism.hpp"
#include "fpa/errors.hpp"

namespace fpa {

Derivation::Derivation(std::vector<PoissonPoly> images) : images_(std::move(images)) {
  for (const auto& f : images_) {
    if (f.max_letter() > n()) throw UsageError("image involves a generator beyond x" + std::to_string(n()));
  }
}

Derivation Derivation::partial(int n, int i) {
  if (i < 1 || i > n) throw UsageError("partial derivative index out of range");
  std::vector<PoissonPoly> images(n);
  images[i - 1] = PoissonPoly(Rational(1));
  return Derivation(std::move(images));
}

bool Derivation::is_zero() const {
  return std::all_of(images_.begin(), images_.end(), [](const PoissonPoly& f) { return f.is_zero(); });
}

Derivation& Derivation::operator+=(const Derivation& o) {
  if (o.n() != n()) throw UsageError("generator counts differ");
  for (int i = 0; i < n(); ++i) images_[i] += o.images_[i];
  return *this;
}

Derivation& Derivation::operator-=(const Derivation& o) {
  if (o.n() != n()) throw UsageError("generator counts differ");
  for (int i = 0; i < n(); ++i) images_[i] -= o.images_[i];
  return *this;
}

Derivation operator*(const Rational& c, const Derivation& d) {
  Derivation out = d;
  for (auto& f : out.images_) f = c * f;
  return out;
}

// ---------------------------------------------------------------------------
// Application

const PoissonPoly& DerivationApplier::on_basis(LieMonomial m) {
  if (auto it = cache_.find(m); it != cache_.end()) return it->second;
  PoissonPoly value;
  if (m.is_generator()) {
    const int i = m.generator_index();
    if (i > d_.n()) throw UsageError("element involves x" + std::to_string(i) + " beyond the derivation");
    value = d_.image(i);
  } else {
    const LieMonomial l = m.left();
    const LieMonomial r = m.right();
    PoissonPoly dl = on_basis(l);
    const PoissonPoly& dr = on_basis(r);
    value = poisson_bracket(dl, PoissonPoly(r)) + poisson_bracket(PoissonPoly(l), dr);
  }
  return cache_.emplace(m, std::move(value)).first->second;
}

PoissonPoly DerivationApplier::operator()(const PoissonPoly& f) {
  std::vector<PoissonPoly::Term> acc;
  for (const auto& [mono, c] : f.terms()) {
    const auto& fs = mono.factors();
    for (std::size_t k = 0; k < fs.size(); ++k) {
      const auto& [m, e] = fs[k];
      const PoissonPoly& dm = on_basis(m);
      if (dm.is_zero()) continue;
      const PoissonMonomial rest = mono.reduced(k);
      const Rational coef = c * e;
      for (const auto& [dmono, dc] : dm.terms()) acc.emplace_back(rest * dmono, coef * dc);
    }
  }
  return PoissonPoly::from_terms(std::move(acc));
}

PoissonPoly apply(const Derivation& d, const PoissonPoly& f) {
  DerivationApplier a(d);
  return a(f);
}

Derivation scale(const PoissonPoly& f, const Derivation& d) {
  std::vector<PoissonPoly> images;
  for (const auto& g : d.images()) images.push_back(f * g);
  return Derivation(std::move(images));
}

// ---------------------------------------------------------------------------
// Degrees and gradings

DerivationDegrees der_degrees(const Derivation& d, const std::optional<std::vector<int>>& weight) {
  if (d.is_zero()) throw DegreeOfZero();
  const int n = d.n();
  if (weight) {
    if (static_cast<int>(weight->size()) != n) throw UsageError("weight vector length must equal n");
    if (std::all_of(weight->begin(), weight->end(), [](int x) { return x == 0; })) {
      throw UsageError("weight vector must be nonzero");
    }
  }
  DerivationDegrees out;
  DegreeReport& r = out.report;
  bool first = true;
  bool homogeneous = true;
  std::vector<int> md0;
  for (int i = 1; i <= n; ++i) {
    for (const auto& [m, c] : d.image(i).terms()) {
      std::vector<int> md = m.mdeg(n);
      md[i - 1] -= 1;
      int wd = 0;
      if (weight) {
        for (int j = 0; j < n; ++j) wd += md[j] * (*weight)[j];
      }
      const int dg = m.deg() - 1;
      const int pd = m.pdeg() - 1;
      if (first) {
        r.deg = dg;
        r.pdeg = pd;
        r.deg_x = md;
        md0 = md;
        if (weight) r.wdeg = wd;
        first = false;
        continue;
      }
      r.deg = std::max(r.deg, dg);
      r.pdeg = std::max(r.pdeg, pd);
      for (int j = 0; j < n; ++j) r.deg_x[j] = std::max(r.deg_x[j], md[j]);
      if (md != md0) homogeneous = false;
      if (weight) r.wdeg = std::max(*r.wdeg, wd);
    }
  }
  if (homogeneous) r.mdeg = md0;
  out.support = support(d);
  return out;
}

std::set<LieMonomial> support(const Derivation& d) {
  std::set<LieMonomial> out;
  for (const auto& f : d.images()) out.merge(support(f));
  return out;
}

std::map<GradeKey, Derivation> homogeneous_components(const Derivation& d, const Grading& grading) {
  const int n = d.n();
  if (grading.kind == Grading::Kind::Weight && static_cast<int>(grading.weight.size()) != n) {
    throw UsageError("weight vector length must equal n");
  }
  std::map<GradeKey, std::vector<std::vector<PoissonPoly::Term>>> buckets;
  for (int i = 1; i <= n; ++i) {
    const GradeKey shift = grading.key(PoissonMonomial(LieMonomial::generator(i)), n);
    for (const auto& t : d.image(i).terms()) {
      GradeKey k = grading.key(t.first, n);
      for (std::size_t j = 0; j < k.size(); ++j) k[j] -= shift[j];
      auto& slot = buckets[k];
      slot.resize(n);
      slot[i - 1].push_back(t);
    }
  }
  std::map<GradeKey, Derivation> out;
  for (auto& [k, per_image] : buckets) {
    std::vector<PoissonPoly> images;
    for (auto& t : per_image) images.push_back(PoissonPoly::from_terms(std::move(t)));
    out.emplace(k, Derivation(std::move(images)));
  }
  return out;
}

LeadingDerivation leading_der(const Derivation& d, LieMonomial x) {
  if (d.is_zero()) throw DegreeOfZero();
  LeadingDerivation out;
  for (const auto& f : d.images()) out.pdeg = std::max(out.pdeg, pdeg_in(f, x));
  std::vector<PoissonPoly> images;
  for (const auto& f : d.images()) {
    std::vector<PoissonPoly::Term> t;
    for (const auto& [m, c] : f.terms()) {
      if (static_cast<int>(m.exponent(x)) == out.pdeg) t.emplace_back(m.without(x), c);
    }
    images.push_back(PoissonPoly::from_terms(std::move(t)));
  }
  out.lead = Derivation(std::move(images));
  return out;
}

bool is_triangular(const Derivation& d) {
  for (int i = 1; i <= d.n(); ++i) {
    for (const auto& [m, c] : d.image(i).terms()) {
      for (int j = 1; j <= i; ++j) {
        if (m.letter_count(j) > 0) return false;
      }
    }
  }
  return true;
}

NilpotencyVerdict nilpotency_check(const Derivation& d, int cap) {
  if (cap < 1) throw UsageError("nilpotency cap must be positive");
  NilpotencyVerdict v;
  v.cap = cap;
  DerivationApplier a(d);
  for (int i = 1; i <= d.n(); ++i) {
    PoissonPoly cur = PoissonPoly::generator(i);
    int bound = 0;
    for (int k = 1; k <= cap; ++k) {
      cur = a(cur);
      if (cur.is_zero()) {
        bound = k;
        break;
      }
    }
    if (bound == 0) {
      v.status = NilpotencyVerdict::Status::ExceededCap;
      v.bounds.clear();
      return v;
    }
    v.bounds.push_back(bound);
  }
  v.status = NilpotencyVerdict::Status::Nilpotent;
  return v;
}

// ---------------------------------------------------------------------------
// Conjugation

namespace {

// F^{-1} D F for a single tame factor.
Derivation conjugate_factor(const TameFactor& factor, const Derivation& d) {
  const Endomorphism forward = factor.plane().lift();
  const Endomorphism backward = factor.inverse().plane().lift();
  DerivationApplier da(d);
  EndomorphismApplier back(backward);
  std::vector<PoissonPoly> images;
  for (int i = 1; i <= 2; ++i) images.push_back(back(da(forward.image(i))));
  return Derivation(std::move(images));
}

}  // namespace

Derivation conjugate(const TameDecomposition& phi, const Derivation& d) {
  if (!phi.verified()) throw UnverifiedDecomposition();
  if (d.n() != 2) throw UsageError("conjugation by a tame map needs two generators");
  // (F1 o ... o Fk)^{-1} D (F1 o ... o Fk), one factor at a time.
  Derivation out = d;
  for (const auto& f : phi.factors()) out = conjugate_factor(f, out);
  return out;
}

PoissonPoly bracket_kill_check(const Derivation& d) {
  if (d.n() != 2) throw UsageError("bracket check needs two generators");
  return apply(d, poisson_bracket(PoissonPoly::generator(1), PoissonPoly::generator(2)));
}

}  // namespace fpa
