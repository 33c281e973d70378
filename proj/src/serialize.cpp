#include "fpa/serialize.hpp"

#include "fpa/errors.hpp"
#include "fpa/text.hpp"

namespace fpa {

namespace {

Json coeff_list(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(c.get_str());
  return out;
}

Rational rational_field(const Json& j) {
  if (!j.is_string()) throw UsageError("coefficient must be a string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

Json to_json(const PoissonPoly& f) {
  Json out = Json::array();
  for (const auto& [m, c] : f.terms()) {
    Json factors = Json::array();
    for (const auto& lie : m.sequence()) factors.push_back(lie.to_string());
    out.push_back({{"coeff", c.get_str()}, {"factors", std::move(factors)}});
  }
  return out;
}

PoissonPoly poly_from_json(const Json& j, int n) {
  if (!j.is_array()) throw UsageError("polynomial must be a term list");
  PoissonPoly out;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("factors") || !t["factors"].is_array()) {
      throw UsageError("term needs \"coeff\" and \"factors\"");
    }
    PoissonPoly term(rational_field(t["coeff"]));
    for (const auto& f : t["factors"]) {
      if (!f.is_string()) throw UsageError("factor must be a string");
      try {
        term = term * parse_expr(f.get<std::string>(), n);
      } catch (const ParseError& e) {
        throw UsageError(e.what());
      }
    }
    out += term;
  }
  return out;
}

Json to_json(const Derivation& d) {
  Json out = Json::array();
  for (const auto& f : d.images()) out.push_back(to_json(f));
  return out;
}

Derivation derivation_from_json(const Json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw UsageError("derivation must list " + std::to_string(n) + " images");
  }
  std::vector<PoissonPoly> images;
  for (const auto& f : j) images.push_back(poly_from_json(f, n));
  return Derivation(std::move(images));
}

Json to_json(const Endomorphism& theta) {
  Json out = Json::array();
  for (const auto& f : theta.images()) out.push_back(to_json(f));
  return out;
}

Json to_json(const TameFactor& factor) {
  if (factor.is_linear()) {
    const auto& m = factor.as_linear().m;
    return {{"kind", "linear"},
            {"data", {{"matrix", Json::array({coeff_list({m[0][0], m[0][1]}), coeff_list({m[1][0], m[1][1]})})}}}};
  }
  const auto& e = factor.as_elementary();
  return {{"kind", "elementary"},
          {"data", {{"target", e.target}, {"alpha", e.alpha.get_str()}, {"f", coeff_list(e.f.coeffs())}}}};
}

Json to_json(const TameDecomposition& phi) {
  Json out = Json::array();
  for (const auto& f : phi.factors()) out.push_back(to_json(f));
  return out;
}

TameDecomposition decomposition_from_json(const Json& j) {
  if (!j.is_array()) throw UsageError("decomposition must be a factor list");
  std::vector<TameFactor> factors;
  for (const auto& f : j) {
    if (!f.is_object() || !f.contains("kind") || !f.contains("data")) {
      throw UsageError("factor needs \"kind\" and \"data\"");
    }
    const Json& data = f["data"];
    const std::string kind = f["kind"].is_string() ? f["kind"].get<std::string>() : "";
    if (kind == "linear") {
      const Json& m = data.at("matrix");
      if (!m.is_array() || m.size() != 2 || m[0].size() != 2 || m[1].size() != 2) {
        throw UsageError("linear factor needs a 2x2 matrix");
      }
      factors.push_back(TameFactor::linear(rational_field(m[0][0]), rational_field(m[0][1]),
                                           rational_field(m[1][0]), rational_field(m[1][1])));
    } else if (kind == "elementary") {
      std::vector<Rational> coeffs;
      for (const auto& c : data.at("f")) coeffs.push_back(rational_field(c));
      if (!data.at("target").is_number_integer()) throw UsageError("target must be 1 or 2");
      factors.push_back(TameFactor::elementary(data["target"].get<int>(), rational_field(data.at("alpha")),
                                               UnivariatePoly(std::move(coeffs))));
    } else {
      throw UsageError("unknown factor kind");
    }
  }
  return TameDecomposition(std::move(factors));
}

Json to_json(const DegreeReport& r) {
  Json out = {{"deg", r.deg}, {"deg_x", r.deg_x}, {"pdeg", r.pdeg}};
  out["mdeg"] = r.mdeg ? Json(*r.mdeg) : Json(nullptr);
  if (r.wdeg) out["wdeg"] = *r.wdeg;
  return out;
}

Json to_json(const NilpotencyVerdict& v) {
  Json out = {{"status", v.nilpotent() ? "nilpotent" : "exceeded-cap"}, {"cap", v.cap}};
  if (v.nilpotent()) out["bounds"] = v.bounds;
  return out;
}

Json to_json(const TriangulationResult& r) {
  return {{"factors", to_json(r.phi)}, {"f", coeff_list(r.f.coeffs())}, {"verified", r.verified}};
}

}  // namespace fpa
