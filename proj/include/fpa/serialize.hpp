#pragma once

// JSON forms. A polynomial is a term list
//   [{"coeff": "p/q", "factors": ["x1", "[x1,x2]", "[x1,x2]"]}, ...]
// with factors repeated according to their exponent; a derivation is the list
// of its image term lists; a decomposition is [{"kind": ..., "data": ...}].

#include <json.hpp>

#include "fpa/automorphism.hpp"
#include "fpa/derivation.hpp"
#include "fpa/poisson_poly.hpp"
#include "fpa/triangulation.hpp"

namespace fpa {

using Json = nlohmann::json;

Json to_json(const PoissonPoly& f);
/// Throws UsageError on malformed input or generators beyond x_n.
PoissonPoly poly_from_json(const Json& j, int n);

Json to_json(const Derivation& d);
Derivation derivation_from_json(const Json& j, int n);

Json to_json(const Endomorphism& theta);

Json to_json(const TameFactor& factor);
Json to_json(const TameDecomposition& phi);
/// The result is unverified.
TameDecomposition decomposition_from_json(const Json& j);

Json to_json(const DegreeReport& r);
Json to_json(const NilpotencyVerdict& v);
Json to_json(const TriangulationResult& r);

}  // namespace fpa
