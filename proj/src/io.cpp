#include "cubal/io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cubal {

namespace {

[[noreturn]] void parse_error(const std::string& detail) {
  throw std::invalid_argument("parse-error: " + detail);
}

const Json& require_key(const Json& j, const char* key, const char* context) {
  if (!j.is_object() || !j.contains(key))
    parse_error(std::string(context) + " needs a \"" + key + "\" key");
  return j.at(key);
}

std::string require_string(const Json& j, const char* context) {
  if (!j.is_string()) parse_error(std::string(context) + " must be a string");
  return j.get<std::string>();
}

int require_int(const Json& j, const char* context) {
  if (!j.is_number_integer()) parse_error(std::string(context) + " must be an integer");
  return j.get<int>();
}

}  // namespace

Json polynomial_to_json(const Polynomial& p) {
  Json out = Json::array();
  constexpr long long lo = std::numeric_limits<std::int64_t>::min();
  constexpr long long hi = std::numeric_limits<std::int64_t>::max();
  for (const Coeff& c : p.coeffs()) {
    if (c >= lo && c <= hi)
      out.push_back(static_cast<std::int64_t>(c));
    else
      out.push_back(c.str());
  }
  return out;
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) parse_error("a polynomial must be an array of integer coefficients");
  std::vector<Coeff> coeffs;
  for (const Json& c : j) {
    if (c.is_number_integer()) {
      coeffs.emplace_back(c.get<std::int64_t>());
    } else if (c.is_string()) {
      try {
        coeffs.emplace_back(Coeff(c.get<std::string>()));
      } catch (const std::exception&) {
        parse_error("coefficient \"" + c.get<std::string>() + "\" is not a decimal integer");
      }
    } else {
      parse_error("a polynomial coefficient must be an integer or a decimal string");
    }
  }
  return Polynomial(std::move(coeffs));
}

Json poset_to_json(const Poset& p) {
  Json out = Json::object();
  out["elements"] = p.elements();
  Json covers = Json::array();
  for (const auto& [lo, hi] : p.cover_pairs()) covers.push_back(Json::array({lo, hi}));
  out["covers"] = std::move(covers);
  return out;
}

Poset poset_from_json(const Json& j) {
  const Json& elems = require_key(j, "elements", "a poset");
  if (!elems.is_array()) parse_error("\"elements\" must be an array of ids");
  std::vector<std::string> elements;
  for (const Json& e : elems) elements.push_back(require_string(e, "a poset element"));

  const Json& cov = require_key(j, "covers", "a poset");
  if (!cov.is_array()) parse_error("\"covers\" must be an array of [lo, hi] pairs");
  std::vector<std::pair<std::string, std::string>> covers;
  for (const Json& c : cov) {
    if (!c.is_array() || c.size() != 2) parse_error("each cover must be a [lo, hi] pair");
    covers.emplace_back(require_string(c.at(0), "a cover endpoint"),
                        require_string(c.at(1), "a cover endpoint"));
  }
  Poset p = Poset::from_covers(std::move(elements), covers);

  if (j.contains("ranks")) {
    const Json& ranks = j.at("ranks");
    if (!ranks.is_object()) parse_error("\"ranks\" must map element ids to integers");
    for (const auto& [id, value] : ranks.items()) {
      const int declared = require_int(value, "a rank override");
      const int derived = p.rank(p.index_of(id));
      if (declared != derived)
        parse_error("rank-override-mismatch: element '" + id + "' declares rank " +
                    std::to_string(declared) + " but the cover relation gives " +
                    std::to_string(derived));
    }
  }
  return p;
}

Json complex_to_json(const FaceComplex& k) {
  Json out = Json::object();
  out["kind"] = k.kind() == ComplexKind::cubical ? "cubical" : "simplicial";
  Json faces = Json::array();
  for (int f : k.nonempty_faces()) {
    Json face = Json::object();
    face["id"] = k.id_of(f);
    face["dim"] = k.dim(f);
    Json covers = Json::array();
    if (k.dim(f) >= 1)
      for (int c : k.poset().lower_covers(f)) covers.push_back(k.id_of(c));
    face["covers"] = std::move(covers);
    if (k.cube_code(f).has_value()) face["code"] = *k.cube_code(f);
    faces.push_back(std::move(face));
  }
  out["faces"] = std::move(faces);
  return out;
}

FaceComplex complex_from_json(const Json& j) {
  const std::string kind = require_string(require_key(j, "kind", "a complex"), "\"kind\"");
  ComplexKind ck;
  if (kind == "cubical")
    ck = ComplexKind::cubical;
  else if (kind == "simplicial")
    ck = ComplexKind::simplicial;
  else
    parse_error("\"kind\" must be \"cubical\" or \"simplicial\", got \"" + kind + "\"");

  const Json& faces = require_key(j, "faces", "a complex");
  if (!faces.is_array()) parse_error("\"faces\" must be an array");
  std::vector<FaceSpec> specs;
  for (const Json& face : faces) {
    FaceSpec spec;
    spec.id = require_string(require_key(face, "id", "a face"), "a face id");
    spec.dim = require_int(require_key(face, "dim", "a face"), "a face dimension");
    const Json& covers = require_key(face, "covers", "a face");
    if (!covers.is_array()) parse_error("face \"covers\" must be an array of ids");
    for (const Json& c : covers) spec.covers.push_back(require_string(c, "a cover id"));
    if (face.contains("code")) spec.code = require_string(face.at("code"), "a face code");
    specs.push_back(std::move(spec));
  }
  return FaceComplex::from_faces(ck, specs);
}

Json subdivision_to_json(const SubdivisionMap& s) {
  Json out = Json::object();
  out["source"] = complex_to_json(s.source());
  out["target"] = complex_to_json(s.target());
  Json carrier = Json::object();
  for (int f : s.source().nonempty_faces())
    carrier[s.source().id_of(f)] = s.target().id_of(s.carrier(f));
  out["carrier"] = std::move(carrier);
  return out;
}

SubdivisionMap subdivision_from_json(const Json& j) {
  FaceComplex source = complex_from_json(require_key(j, "source", "a subdivision"));
  FaceComplex target = complex_from_json(require_key(j, "target", "a subdivision"));
  const Json& carrier = require_key(j, "carrier", "a subdivision");
  if (!carrier.is_object()) parse_error("\"carrier\" must map source face ids to target face ids");
  std::map<std::string, std::string> by_id;
  for (const auto& [id, value] : carrier.items())
    by_id[id] = require_string(value, "a carrier image");
  return SubdivisionMap(std::move(source), std::move(target), by_id);
}

Json formal_to_json(const FormalSubdivision& f) {
  Json out = Json::object();
  out["source"] = poset_to_json(f.source());
  out["target"] = poset_to_json(f.target());
  Json sigma = Json::object();
  for (int q = 0; q < f.source().size(); ++q)
    sigma[f.source().id_of(q)] = f.target().id_of(f.sigma(q));
  out["sigma"] = std::move(sigma);
  return out;
}

FormalSubdivision formal_from_json(const Json& j) {
  Poset source = poset_from_json(require_key(j, "source", "a formal subdivision"));
  Poset target = poset_from_json(require_key(j, "target", "a formal subdivision"));
  const Json& sigma = require_key(j, "sigma", "a formal subdivision");
  if (!sigma.is_object()) parse_error("\"sigma\" must map source element ids to target ids");
  std::map<std::string, std::string> by_id;
  for (const auto& [id, value] : sigma.items()) by_id[id] = require_string(value, "a sigma image");
  return FormalSubdivision(std::move(source), std::move(target), by_id);
}

Json hvector_to_json(const std::string& kind, const Polynomial& p, int d) {
  Json out = Json::object();
  out["kind"] = kind;
  out["d"] = d;
  out["coeffs"] = polynomial_to_json(p);
  return out;
}

AnyObject object_from_json(const Json& j) {
  if (!j.is_object()) parse_error("the top-level value must be a JSON object");
  if (j.contains("carrier")) return subdivision_from_json(j);
  if (j.contains("sigma")) return formal_from_json(j);
  if (j.contains("faces")) return complex_from_json(j);
  if (j.contains("elements")) return poset_from_json(j);
  parse_error(
      "unrecognized format: expected one of the keys \"faces\" (complex), \"carrier\" "
      "(subdivision), \"sigma\" (formal subdivision) or \"elements\" (poset)");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot read file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    parse_error("file '" + path + "' is not valid JSON: " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file '" + path + "'");
  out << j.dump(2) << '\n';
}

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char b : bytes) {
    hash ^= b;
    hash *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4) out << ((hash >> shift) & 0xf);
  return out.str();
}

Json report_to_json(const Report& r) {
  Json out = Json::object();
  out["command"] = r.command;
  out["inputs"] = r.inputs;
  out["results"] = r.results;
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json item = Json::object();
    item["check"] = f.check;
    item["location"] = f.location;
    item["detail"] = f.detail;
    failures.push_back(std::move(item));
  }
  out["failures"] = std::move(failures);
  out["notes"] = r.notes;
  return out;
}

}  // namespace cubal
