#include "fpa/suites.hpp"

#include <functional>
#include <map>

#include "fpa/automorphism.hpp"
#include "fpa/derivation.hpp"
#include "fpa/errors.hpp"
#include "fpa/random.hpp"
#include "fpa/text.hpp"
#include "fpa/triangulation.hpp"

namespace fpa {

std::string SuiteReport::summary() const {
  return name + ": " + std::to_string(passed) + "/" + std::to_string(total) + " passed";
}

namespace {

// A case returns an empty string on success, otherwise a description.
using Case = std::function<std::string(Rng&, int)>;

constexpr std::size_t kMaxFailures = 5;

const PoissonPoly& bracket12() {
  static const PoissonPoly b = poisson_bracket(PoissonPoly::generator(1), PoissonPoly::generator(2));
  return b;
}

LieMonomial lie12() { return bracket12().terms().front().first.factors().front().first; }

// pdeg_x of a possibly zero element; -1 stands for minus infinity.
int pdeg_or_minus(const PoissonPoly& f, LieMonomial x) { return f.is_zero() ? -1 : pdeg_in(f, x); }

PoissonPoly x_power(LieMonomial x, int k) {
  return k == 0 ? PoissonPoly(Rational(1)) : PoissonPoly(PoissonMonomial::from_factors({{x, static_cast<unsigned>(k)}}), Rational(1));
}

// Random polynomial over an explicit alphabet of basis elements.
PoissonPoly random_over(Rng& rng, const std::vector<LieMonomial>& alphabet, int max_factors, int max_terms,
                        bool allow_constant) {
  std::vector<PoissonPoly::Term> terms;
  const int count = rng.uniform(1, max_terms);
  for (int t = 0; t < count; ++t) {
    const int k = rng.uniform(allow_constant ? 0 : 1, max_factors);
    std::vector<LieMonomial> seq;
    for (int i = 0; i < k; ++i) seq.push_back(rng.pick(alphabet));
    terms.emplace_back(PoissonMonomial::from_sequence(seq), Rational(rng.nonzero(-3, 3)));
  }
  return PoissonPoly::from_terms(std::move(terms));
}

std::string describe(const Derivation& d) { return format_derivation(d); }

// ---------------------------------------------------------------------------

std::string jacobi_case(Rng& rng, int) {
  PolyShape shape;
  shape.n = rng.uniform(2, 3);
  shape.max_deg = 4;
  shape.max_terms = 3;
  const PoissonPoly f = random_poly(rng, shape);
  const PoissonPoly g = random_poly(rng, shape);
  const PoissonPoly h = random_poly(rng, shape);
  const std::string where = " for f = " + format_expr(f) + ", g = " + format_expr(g) + ", h = " + format_expr(h);
  if (!(poisson_bracket(f, g) == -poisson_bracket(g, f))) return "antisymmetry" + where;
  const PoissonPoly cyclic = poisson_bracket(f, poisson_bracket(g, h)) + poisson_bracket(g, poisson_bracket(h, f)) +
                             poisson_bracket(h, poisson_bracket(f, g));
  if (!cyclic.is_zero()) return "Jacobi" + where;
  if (!(poisson_bracket(f, g * h) == poisson_bracket(f, g) * h + g * poisson_bracket(f, h))) return "Leibniz" + where;
  return {};
}

LndShape modest_lnd_shape() {
  LndShape s;
  s.conjugator = {3, 3, 6};
  s.max_f_deg = 2;
  s.add_x2_shift = true;
  return s;
}

std::string prop1_case(Rng& rng, int) {
  const RandomLnd lnd = random_lnd(rng, modest_lnd_shape());
  for (int t = 0; t < 3; ++t) {
    std::vector<int> w;
    do {
      w = {rng.uniform(-3, 3), rng.uniform(-3, 3)};
    } while (w[0] == 0 && w[1] == 0);
    if (lnd.d.is_zero()) continue;
    const auto parts = homogeneous_components(lnd.d, Grading::by_weight(w));
    const Derivation& top = parts.rbegin()->second;
    if (!nilpotency_check(top, kDefaultNilpotencyCap).nilpotent()) {
      return "top component for w = (" + std::to_string(w[0]) + "," + std::to_string(w[1]) +
             ") not certified: " + describe(top);
    }
  }
  return {};
}

std::string prop2_case(Rng& rng, int) {
  const int n = rng.uniform(2, 3);
  Derivation d;
  std::set<LieMonomial> s;
  do {
    PolyShape shape;
    shape.n = n;
    shape.max_deg = 3;
    shape.max_terms = 3;
    shape.allow_constant = true;
    std::vector<PoissonPoly> images;
    for (int i = 0; i < n; ++i) images.push_back(rng.coin() ? random_poly(rng, shape) : PoissonPoly());
    d = Derivation(std::move(images));
    s = support(d);
  } while (s.empty());
  const LieMonomial x = *s.begin();

  PolyShape fs;
  fs.n = n;
  fs.max_deg = 3;
  fs.max_terms = 3;
  fs.allow_constant = true;
  const PoissonPoly f = random_poly(rng, fs) + x_power(x, rng.uniform(1, 2)) * random_poly(rng, fs);
  if (f.is_zero()) return {};

  const LeadingDerivation ld = leading_der(d, x);
  const LeadingPart lf = leading_part(f, x);
  const PoissonPoly df = apply(d, f);
  const int lhs = pdeg_or_minus(df, x);
  const int rhs = ld.pdeg + lf.pdeg;
  const std::string where = " for D = " + describe(d) + ", f = " + format_expr(f) + ", x = " + x.to_string();
  if (lhs > rhs) return "inequality" + where;
  const PoissonPoly predicted = apply(ld.lead, lf.lead);
  const bool equality = !df.is_zero() && lhs == rhs;
  if (equality != !predicted.is_zero()) return "equality criterion" + where;
  if (equality && !(leading_part(df, x).lead == predicted)) return "leading-part law" + where;
  return {};
}

std::string prop3_case(Rng& rng, int) {
  const LieMonomial x = rng.coin() ? LieMonomial::generator(2) : lie12();
  std::vector<LieMonomial> above;  // basis elements greater than x
  std::vector<LieMonomial> no_x1;  // basis elements other than x1
  for (const auto& e : generate_basis(2, 3)) {
    if (x < e) above.push_back(e);
    if (e != LieMonomial::generator(1)) no_x1.push_back(e);
  }
  const int m = rng.uniform(1, 3);
  std::vector<Derivation> parts;
  Derivation d = Derivation::zero(2);
  for (int i = 0; i < m; ++i) {
    std::vector<PoissonPoly> images;
    for (int j = 0; j < 2; ++j) images.push_back(rng.coin() ? random_over(rng, above, 2, 2, true) : PoissonPoly());
    parts.emplace_back(images);
    d += scale(x_power(x, i), parts.back());
  }
  d += scale(x_power(x, m), Derivation::partial(2, 1));

  const PoissonPoly f = random_over(rng, no_x1, 3, 3, true) + x_power(x, rng.uniform(1, 2)) * random_over(rng, no_x1, 2, 2, true);
  if (f.is_zero()) return {};

  const Derivation dprime = parts[m - 1] + scale(Rational(m) * PoissonPoly(x), Derivation::partial(2, 1));
  const LeadingPart lf = leading_part(f, x);
  const PoissonPoly df = apply(d, f);
  const int lhs = pdeg_or_minus(df, x);
  const int rhs = m - 1 + lf.pdeg;
  const std::string where = " for D = " + describe(d) + ", f = " + format_expr(f) + ", x = " + x.to_string();
  if (lhs > rhs) return "inequality" + where;
  const PoissonPoly predicted = apply(dprime, lf.lead);
  const bool equality = !df.is_zero() && lhs == rhs;
  if (equality != !predicted.is_zero()) return "equality criterion" + where;
  if (equality && !(leading_part(df, x).lead == predicted)) return "leading-part law" + where;
  return {};
}

// Triangular derivation of P<x1,x2,x3>: D(x3) = c, D(x2) in k[x3], D(x1) in P<x2,x3>.
Derivation random_triangular3(Rng& rng) {
  std::vector<LieMonomial> upper;
  for (const auto& e : generate_basis(3, 3)) {
    if (e.letter_count(1) == 0) upper.push_back(e);
  }
  const PoissonPoly x3 = PoissonPoly::generator(3);
  PoissonPoly d2 = random_univariate(rng, 0, 2).evaluate_at(x3);
  PoissonPoly d1 = random_over(rng, upper, 2, 3, true);
  return Derivation({d1, d2, PoissonPoly(Rational(rng.uniform(-2, 2)))});
}

std::string lemma1_case(Rng& rng, int index) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    const Derivation d = index % 2 == 0 ? random_lnd(rng, modest_lnd_shape()).d : random_triangular3(rng);
    const std::set<LieMonomial> s = support(d);
    if (s.empty()) continue;
    if (!nilpotency_check(d, kDefaultNilpotencyCap).nilpotent()) continue;
    const LieMonomial x = *s.begin();
    const Derivation lead = leading_der(d, x).lead;
    if (!nilpotency_check(lead, kDefaultNilpotencyCap).nilpotent()) {
      return "l_x(D) not certified for D = " + describe(d) + ", x = " + x.to_string();
    }
    return {};
  }
  return "no certified derivation drawn";
}

std::vector<Derivation> lemma3_family() {
  const PoissonPoly x1 = PoissonPoly::generator(1);
  const PoissonPoly x2 = PoissonPoly::generator(2);
  const PoissonPoly b = bracket12();
  const std::vector<int> coeffs = {-1, 0, 1, 2};
  std::vector<Derivation> out;
  // mdeg (0,0): a x1 d/dx1 + b x2 d/dx2
  for (int a : coeffs) {
    for (int c : coeffs) {
      if (a || c) out.emplace_back(std::vector<PoissonPoly>{Rational(a) * x1, Rational(c) * x2});
    }
  }
  // mdeg (1,0) and (0,1): three-dimensional coefficient spaces.
  for (int a : coeffs) {
    for (int c : coeffs) {
      for (int e : coeffs) {
        if (!(a || c || e)) continue;
        out.emplace_back(std::vector<PoissonPoly>{Rational(a) * x1 * x1, Rational(c) * x1 * x2 + Rational(e) * b});
        out.emplace_back(std::vector<PoissonPoly>{Rational(a) * x1 * x2 + Rational(c) * b, Rational(e) * x2 * x2});
      }
    }
  }
  // Single terms with images of degree 3.
  const PoissonPoly b1 = poisson_bracket(x1, b);
  const PoissonPoly b2 = poisson_bracket(b, x2);
  const PoissonPoly zero;
  const std::vector<std::pair<PoissonPoly, PoissonPoly>> singles = {
      {x1 * x1 * x1, zero}, {zero, x1 * x1 * x2}, {zero, x1 * b}, {zero, b1},
      {x1 * x1 * x2, zero}, {x1 * b, zero},      {b1, zero},     {zero, x1 * x2 * x2},
      {zero, x2 * b},       {zero, b2},          {x1 * x2 * x2, zero}, {x2 * b, zero},
      {b2, zero},           {zero, x2 * x2 * x2}};
  for (const auto& [p, q] : singles) out.emplace_back(std::vector<PoissonPoly>{p, q});
  return out;
}

std::string lemma3_case(const Derivation& d) {
  const DerivationDegrees deg = der_degrees(d);
  if (!deg.report.mdeg || (*deg.report.mdeg)[0] < 0 || (*deg.report.mdeg)[1] < 0) {
    return "fixture is not multihomogeneous with nonnegative multidegree: " + describe(d);
  }
  if (nilpotency_check(d, 10).nilpotent()) return "D^k vanished on both generators by k = 10 for " + describe(d);
  return {};
}

std::string cor1_case(Rng& rng, int) {
  LndShape shape;
  shape.conjugator = {3, 4, 6};
  shape.max_f_deg = 4;
  shape.add_x2_shift = rng.coin();
  if (shape.add_x2_shift) shape = modest_lnd_shape();
  const RandomLnd lnd = random_lnd(rng, shape);
  if (!nilpotency_check(lnd.d, kDefaultNilpotencyCap).nilpotent()) return "corpus derivation not certified";
  const InducedPlane ip = induce_plane(lnd.d);
  if (!ip.remainder[0].is_zero() || !ip.remainder[1].is_zero()) return "bracket component in " + describe(lnd.d);
  if (!bracket_kill_check(lnd.d).is_zero()) return "D{x1,x2} != 0 for " + describe(lnd.d);
  return {};
}

std::string cor2_case(Rng& rng, int) {
  const TameDecomposition phi = random_tame(rng, TameShape{4, 4, 16});
  const Endomorphism theta = phi.compose();
  const auto alpha = bracket_multiplier(theta);
  if (!alpha) return "not proportional for " + format_endomorphism(theta);
  if (sgn(*alpha) == 0) return "zero multiplier for " + format_endomorphism(theta);
  if (*alpha != phi.multiplier()) return "multiplier mismatch for " + format_endomorphism(theta);
  const TameDecomposition found = is_automorphism(theta);
  if (found.multiplier() != *alpha) return "decomposed multiplier mismatch for " + format_endomorphism(theta);
  return {};
}

std::string decompose_case(Rng& rng, int) {
  const TameDecomposition source = random_tame(rng, TameShape{4, 4, 16});
  const Endomorphism theta = source.compose();
  const TameDecomposition phi = is_automorphism(theta);
  if (!phi.verified() || !(phi.compose() == theta)) return "recomposition differs for " + format_endomorphism(theta);
  // phi o F_k^{-1} o ... o F_1^{-1}, one factor at a time so degrees shrink.
  PlaneMap acc = phi.plane();
  const TameDecomposition inv = phi.inverse();
  for (const auto& f : inv.factors()) acc = compose(acc, f);
  if (!(acc == PlaneMap::identity())) {
    return "inverse does not cancel for " + format_endomorphism(theta);
  }
  return {};
}

std::string triangulate_case(Rng& rng, int) {
  LndShape shape;
  shape.conjugator = {3, 4, 6};
  shape.max_f_deg = 4;
  const RandomLnd lnd = random_lnd(rng, shape);
  const TriangulationResult r = triangulate(lnd.d);
  if (!r.verified) return "unverified result for " + describe(lnd.d);
  if (!(conjugate(r.phi, lnd.d) == triangular_plane(r.f))) return "conjugation identity fails for " + describe(lnd.d);
  return {};
}

const std::map<std::string, std::pair<Case, int>>& registry() {
  static const std::map<std::string, std::pair<Case, int>> r = {
      {"jacobi", {jacobi_case, 200}},
      {"prop1", {prop1_case, 50}},
      {"prop2", {prop2_case, 100}},
      {"prop3", {prop3_case, 100}},
      {"lemma1", {lemma1_case, 50}},
      {"cor1", {cor1_case, 50}},
      {"cor2", {cor2_case, 100}},
      {"roundtrip-decompose", {decompose_case, 100}},
      {"roundtrip-triangulate", {triangulate_case, 50}},
  };
  return r;
}

void record(SuiteReport& report, const std::string& outcome) {
  ++report.total;
  if (outcome.empty()) {
    ++report.passed;
  } else if (report.failures.size() < kMaxFailures) {
    report.failures.push_back("case " + std::to_string(report.total) + ": " + outcome);
  }
}

std::string guarded(const std::function<std::string()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"jacobi", "prop1",  "prop2", "prop3", "lemma1",
                                                 "lemma3", "cor1",   "cor2",  "roundtrip-decompose",
                                                 "roundtrip-triangulate"};
  return names;
}

int default_count(const std::string& name) {
  if (name == "lemma3") return static_cast<int>(lemma3_family().size());
  auto it = registry().find(name);
  if (it == registry().end()) throw UsageError("unknown suite: " + name);
  return it->second.second;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, int count) {
  if (count < 0) throw UsageError("count must be nonnegative");
  SuiteReport report;
  report.name = name;
  if (name == "lemma3") {
    // A fixed enumeration; the seed is not used.
    const std::vector<Derivation> family = lemma3_family();
    const int k = std::min(count, static_cast<int>(family.size()));
    for (int i = 0; i < k; ++i) record(report, guarded([&] { return lemma3_case(family[i]); }));
    return report;
  }
  auto it = registry().find(name);
  if (it == registry().end()) throw UsageError("unknown suite: " + name);
  Rng rng(seed);
  for (int i = 0; i < count; ++i) record(report, guarded([&] { return it->second.first(rng, i); }));
  return report;
}

}  // namespace fpa
