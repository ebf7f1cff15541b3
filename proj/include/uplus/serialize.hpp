#pragma once

#include <string>

#include <json.hpp>

#include "uplus/equivariant.hpp"
#include "uplus/fingen.hpp"
#include "uplus/free_poly.hpp"
#include "uplus/fusion.hpp"
#include "uplus/invariant.hpp"
#include "uplus/orbit.hpp"

namespace uplus {

/// Field order is insertion order, so serialized output is stable.
using Json = nlohmann::ordered_json;

/// "1", "-2/3".
std::string rational_string(const Rational& q);
/// Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

/// Word-keyed objects list their keys in string order.
Json to_json(const FreePoly& p);
Json to_json(const FusionElement& f);
Json to_json(const StarVector& v);
Json to_json(const GenerationReport& r);
Json to_json(const EquivariantClass& e);
Json to_json(const OrbitReport& r);
Json to_json(const CompactnessReport& r);
Json to_json(const HypercubeGraph& g);

/// Each parser throws ParseError on schema violations.
FreePoly free_poly_from_json(const Json& j);
FusionElement fusion_element_from_json(const Json& j);
StarVector star_vector_from_json(const Json& j);
EquivariantClass equivariant_class_from_json(const Json& j);

}  // namespace uplus
