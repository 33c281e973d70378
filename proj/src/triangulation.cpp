#include "fpa/triangulation.hpp"

#include <algorithm>

#include "fpa/detail/linear_system.hpp"

namespace fpa {

CommutativePoly PlaneDerivation::operator()(const CommutativePoly& p) const {
  return first * p.derivative(1) + second * p.derivative(2);
}

InducedPlane induce_plane(const Derivation& d) {
  if (d.n() != 2) throw UsageError("the induced plane derivation needs two generators");
  auto [p1, r1] = split_commutative(d.image(1));
  auto [p2, r2] = split_commutative(d.image(2));
  return {{std::move(p1), std::move(p2)}, {std::move(r1), std::move(r2)}};
}

int default_sweep_bound(const PlaneDerivation& d) {
  const int e = std::max(d.degree(), 0);
  return (e + 1) * (e + 1) + 2;
}

namespace {

using Exponent = CommutativePoly::Exponent;

// Monomials x1^a x2^b with 1 <= a + b <= d, in canonical order.
std::vector<Exponent> nonconstant_monomials(int d) {
  std::vector<Exponent> out;
  for (int t = 1; t <= d; ++t) {
    for (int a = t; a >= 0; --a) out.push_back({a, t - a});
  }
  return out;
}

// Coefficient matrix of a linear map given by its values on the unknowns.
detail::Matrix coefficient_matrix(const std::vector<CommutativePoly>& values, std::vector<Exponent>& rows) {
  std::map<Exponent, std::size_t> index;
  for (const auto& v : values) {
    for (const auto& [e, c] : v.terms()) index.emplace(e, 0);
  }
  rows.clear();
  for (auto& [e, i] : index) {
    i = rows.size();
    rows.push_back(e);
  }
  detail::Matrix a(rows.size(), std::vector<Rational>(values.size(), Rational(0)));
  for (std::size_t j = 0; j < values.size(); ++j) {
    for (const auto& [e, c] : values[j].terms()) a[index.at(e)][j] = c;
  }
  return a;
}

CommutativePoly combine(const std::vector<Exponent>& monos, const std::vector<Rational>& v) {
  CommutativePoly p;
  for (std::size_t j = 0; j < monos.size(); ++j) p.add_term(monos[j], v[j]);
  return p;
}

}  // namespace

CommutativePoly kernel_generator(const PlaneDerivation& d, std::optional<int> bound) {
  if (d.is_zero()) throw UsageError("kernel generator of the zero derivation");
  const int limit = bound.value_or(default_sweep_bound(d));
  std::vector<CommutativePoly> values;
  std::vector<Exponent> monos;
  for (int deg = 1; deg <= limit; ++deg) {
    // Extend the unknowns by the monomials of degree deg.
    for (int a = deg; a >= 0; --a) {
      monos.push_back({a, deg - a});
      values.push_back(d(CommutativePoly::monomial(Rational(1), a, deg - a)));
    }
    std::vector<Exponent> rows;
    auto basis = detail::nullspace(coefficient_matrix(values, rows), monos.size());
    if (basis.empty()) continue;
    CommutativePoly p = combine(monos, basis.front());
    const Rational lc = p.leading_term().second;
    return Rational(1 / lc) * p;
  }
  throw NotNilpotentEvidence("no nonconstant kernel element of degree <= " + std::to_string(limit));
}

TameDecomposition coordinate_reduce(const CommutativePoly& p) {
  const int dp = p.degree();
  if (dp < 1) throw NotCoordinate("a constant is not a coordinate");
  const CommutativePoly px = p.derivative(1);
  const CommutativePoly py = p.derivative(2);
  const int limit = std::max(1, dp - 1);
  for (int deg = 1; deg <= limit; ++deg) {
    const std::vector<Exponent> monos = nonconstant_monomials(deg);
    std::vector<CommutativePoly> values;
    for (const auto& e : monos) {
      const CommutativePoly m = CommutativePoly::monomial(Rational(1), e[0], e[1]);
      values.push_back(m.derivative(1) * py - m.derivative(2) * px);
    }
    std::vector<Exponent> rows;
    detail::Matrix a = coefficient_matrix(values, rows);
    std::vector<Rational> b(rows.size(), Rational(0));
    auto one = std::find(rows.begin(), rows.end(), Exponent{0, 0});
    if (one == rows.end()) continue;
    b[one - rows.begin()] = 1;
    auto v = detail::solve(std::move(a), std::move(b), monos.size());
    if (!v) continue;
    try {
      return jung_decompose({combine(monos, *v), p});
    } catch (const NotAutomorphism& e) {
      throw NotCoordinate(std::string("no tame completion: ") + e.what());
    }
  }
  throw NotCoordinate(p.to_string() + " has no Jacobian complement of degree <= " + std::to_string(limit));
}

namespace {

// f when g = f(x_var) with f univariate, nullopt otherwise.
std::optional<UnivariatePoly> as_univariate(const PoissonPoly& g, int var) {
  std::vector<Rational> coeffs;
  for (const auto& [m, c] : g.terms()) {
    if (!m.is_commutative() || m.deg() != m.letter_count(var)) return std::nullopt;
    const auto k = static_cast<std::size_t>(m.deg());
    if (coeffs.size() <= k) coeffs.resize(k + 1, Rational(0));
    coeffs[k] = c;
  }
  return UnivariatePoly(std::move(coeffs));
}

}  // namespace

TriangulationResult triangulate(const Derivation& d, int cap) {
  if (d.n() != 2) throw UsageError("triangulation needs two generators");
  if (!nilpotency_check(d, cap).nilpotent()) {
    throw NotCertifiedNilpotent("local nilpotency not certified within cap " + std::to_string(cap));
  }
  TriangulationResult out;
  if (d.is_zero()) {
    out.verified = true;
    return out;
  }
  const InducedPlane induced = induce_plane(d);
  if (induced.plane.is_zero()) throw VerificationFailed("induced plane derivation vanishes for nonzero D");

  const CommutativePoly p = kernel_generator(induced.plane);
  TameDecomposition psi = coordinate_reduce(p);
  Derivation e = conjugate(psi, d);

  if (e.image(1).is_zero() && as_univariate(e.image(2), 1)) {
    std::vector<TameFactor> factors = psi.factors();
    factors.push_back(TameFactor::linear(Rational(0), Rational(1), Rational(1), Rational(0)));
    psi = TameDecomposition::from_factors(std::move(factors));
    e = conjugate(psi, d);
  }
  auto f = as_univariate(e.image(1), 2);
  if (!e.image(2).is_zero() || !f) {
    throw VerificationFailed("conjugated derivation is not of the form f(x2) d/dx1");
  }
  out.phi = std::move(psi);
  out.f = std::move(*f);
  out.verified = true;
  return out;
}

}  // namespace fpa
