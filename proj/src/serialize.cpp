#include "uplus/serialize.hpp"

#include <limits>
#include <map>

#include "uplus/errors.hpp"

namespace uplus {

std::string rational_string(const Rational& q) { return q.str(); }

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_integer = [&](const std::string& part) {
    const std::size_t start = !part.empty() && (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (part.size() == start || part.find_first_not_of("0123456789", start) != std::string::npos)
      throw ParseError("malformed rational \"" + text + "\"");
    return Integer(part[0] == '+' ? part.substr(1) : part);
  };
  if (slash == std::string::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in \"" + text + "\"");
  return Rational(num, den);
}

namespace {

template <class Map, class Fn>
Json word_object(const Map& terms, Fn&& value) {
  std::map<std::string, Json> sorted;
  for (const auto& [w, c] : terms) sorted.emplace(w.str(), value(c));
  Json out = Json::object();
  for (auto& [key, v] : sorted) out[key] = std::move(v);
  return out;
}

void require_object(const Json& j, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be a JSON object");
}

Integer json_integer(const Json& v) {
  if (v.is_number_integer()) return v.is_number_unsigned() ? Integer(v.get<std::uint64_t>()) : Integer(v.get<std::int64_t>());
  if (v.is_string()) {
    const Rational q = parse_rational(v.get<std::string>());
    if (denominator(q) != 1) throw ParseError("expected an integer multiplicity");
    return numerator(q);
  }
  throw ParseError("expected an integer multiplicity");
}

Json integer_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return Json(c.convert_to<std::int64_t>());
  return Json(c.str());
}

}  // namespace

Json to_json(const FreePoly& p) {
  return word_object(p.terms(), [](const Rational& q) { return Json(rational_string(q)); });
}

Json to_json(const FusionElement& f) {
  return word_object(f.terms(), [](const Integer& c) { return integer_json(c); });
}

Json to_json(const StarVector& v) {
  Json out = Json::object();
  out["degree"] = v.degree();
  std::map<std::string, std::string> sorted;
  for (const auto& [c, q] : v.coeffs()) sorted.emplace(c.rep().str(), rational_string(q));
  for (const auto& [key, value] : sorted) out[key] = value;
  return out;
}

Json to_json(const GenerationReport& r) {
  Json out = Json::object();
  out["k"] = r.k;
  out["component_dim"] = r.component_dim;
  out["span_rank"] = r.span_rank;
  out["generated"] = r.generated;
  out["witness"] = r.witness ? Json(r.witness->rep().str()) : Json(nullptr);
  out["witness_invariant"] = rational_string(r.witness_invariant);
  return out;
}

Json to_json(const EquivariantClass& e) {
  Json out = Json::object();
  if (e.kind() == EquivariantClass::Kind::FreeOrbit) {
    out["kind"] = "free_orbit";
    out["rep"] = e.rep().str();
  } else {
    out["kind"] = "fixed_point";
    out["rep"] = "e";
    out["sign"] = e.sign();
  }
  return out;
}

Json to_json(const OrbitReport& r) {
  Json out = Json::object();
  out["seed"] = r.seed.str();
  Json words = Json::array();
  for (const auto& w : r.orbit) words.push_back(w.str());
  out["orbit"] = std::move(words);
  out["size"] = r.size;
  out["truncated"] = r.truncated;
  return out;
}

Json to_json(const CompactnessReport& r) {
  Json out = Json::object();
  out["all_orbits_finite"] = r.all_orbits_finite;
  out["max_orbit_size"] = r.max_orbit_size;
  out["words_checked"] = r.words_checked;
  Json histogram = Json::object();
  for (const auto& [size, count] : r.size_histogram) histogram[std::to_string(size)] = count;
  out["size_histogram"] = std::move(histogram);
  return out;
}

Json to_json(const HypercubeGraph& g) {
  Json out = Json::object();
  out["k"] = g.k();
  Json vertices = Json::array();
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    Json vertex = Json::object();
    vertex["rep"] = g.vertices()[v].rep().str();
    vertex["color"] = g.color(v) == Color::Black ? "black" : "white";
    vertices.push_back(std::move(vertex));
  }
  out["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (auto [u, v] : g.graph().edges())
    edges.push_back(Json::array({g.vertices()[u].rep().str(), g.vertices()[v].rep().str()}));
  out["edges"] = std::move(edges);
  return out;
}

FreePoly free_poly_from_json(const Json& j) {
  require_object(j, "polynomial");
  FreePoly p;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw ParseError("coefficient of \"" + key + "\" must be a string");
    p.add(Word::parse(key), parse_rational(value.get<std::string>()));
  }
  return p;
}

FusionElement fusion_element_from_json(const Json& j) {
  require_object(j, "fusion element");
  FusionElement f;
  for (const auto& [key, value] : j.items()) f.add(Word::parse(key), json_integer(value));
  return f;
}

StarVector star_vector_from_json(const Json& j) {
  require_object(j, "star vector");
  if (!j.contains("degree") || !j["degree"].is_number_unsigned())
    throw ParseError("star vector needs a positive integer \"degree\"");
  const auto degree = j["degree"].get<std::size_t>();
  if (degree == 0) throw ParseError("star vector degree must be positive");
  StarVector v(degree);
  for (const auto& [key, value] : j.items()) {
    if (key == "degree") continue;
    if (!value.is_string()) throw ParseError("coefficient of \"" + key + "\" must be a string");
    const Word w = Word::parse(key);
    if (w.empty()) throw ParseError("star vector keys must be nonempty words");
    const StarClass c(w);
    if (c.rep() != w) throw ParseError("\"" + key + "\" is not a canonical representative");
    try {
      v.add(c, parse_rational(value.get<std::string>()));
    } catch (const DegreeMismatchError& e) {
      throw ParseError(e.what());
    }
  }
  return v;
}

EquivariantClass equivariant_class_from_json(const Json& j) {
  require_object(j, "equivariant class");
  if (!j.contains("kind") || !j["kind"].is_string()) throw ParseError("equivariant class needs \"kind\"");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "fixed_point") {
    if (!j.contains("sign") || !j["sign"].is_number_integer()) throw ParseError("fixed point needs \"sign\"");
    const int sign = j["sign"].get<int>();
    if (sign != 1 && sign != -1) throw ParseError("sign must be +1 or -1");
    return EquivariantClass::fixed_point(sign);
  }
  if (kind == "free_orbit") {
    if (!j.contains("rep") || !j["rep"].is_string()) throw ParseError("free orbit needs \"rep\"");
    const Word w = Word::parse(j["rep"].get<std::string>());
    if (w.empty()) throw ParseError("free orbit representative must be nonempty");
    return EquivariantClass::free_orbit(StarClass(w));
  }
  throw ParseError("unknown kind \"" + kind + "\"");
}

}  // namespace uplus
