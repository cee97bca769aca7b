#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "cubal/complex.hpp"
#include "cubal/enumeration.hpp"
#include "cubal/formal.hpp"
#include "cubal/polynomial.hpp"
#include "cubal/poset.hpp"
#include "cubal/subdivision.hpp"

namespace cubal {

using Json = nlohmann::json;

/**
 * JSON encodings of the core value types.
 *
 * Polynomials are arrays of integer coefficients, lowest degree first; the
 * zero polynomial is the empty array.  Coefficients outside the 64-bit
 * range are written as decimal strings, and the parsers accept both forms.
 * Posets are { "elements": [ids], "covers": [[lo, hi], ...] }, complexes
 * { "kind", "faces": [{ "id", "dim", "covers", "code"? }] } with the empty
 * face implicit, subdivisions { "source", "target", "carrier" } and formal
 * subdivisions { "source", "target", "sigma" }.  Object keys serialize
 * sorted, so equal values produce byte-identical files.
 *
 * All parsers throw std::invalid_argument with a "parse-error" prefix on
 * structurally malformed input; semantically invalid objects propagate the
 * constructing module's own error.
 */
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json poset_to_json(const Poset& p);
/**
 * Accepts an optional "ranks" object { id: int }; the values must agree
 * with the ranks derived from the cover relation ("rank-override-mismatch").
 */
Poset poset_from_json(const Json& j);

Json complex_to_json(const FaceComplex& k);
FaceComplex complex_from_json(const Json& j);

Json subdivision_to_json(const SubdivisionMap& s);
SubdivisionMap subdivision_from_json(const Json& j);

Json formal_to_json(const FormalSubdivision& f);
FormalSubdivision formal_from_json(const Json& j);

/** Result encoding { "kind": label, "d": int, "coeffs": [...] }. */
Json hvector_to_json(const std::string& kind, const Polynomial& p, int d);

/** One parsed input object of any of the four file formats. */
using AnyObject = std::variant<FaceComplex, SubdivisionMap, FormalSubdivision, Poset>;

/**
 * Detects the format by its distinguishing keys: "faces" (complex),
 * "carrier" (subdivision), "sigma" (formal subdivision), "elements" (poset).
 */
AnyObject object_from_json(const Json& j);

/** Reads and parses a JSON file; "parse-error" covers unreadable files too. */
Json read_json_file(const std::string& path);

/** Writes with sorted keys, two-space indent and a trailing newline. */
void write_json_file(const std::string& path, const Json& j);

/** 64-bit FNV-1a digest of a byte string, as 16 lowercase hex digits. */
std::string fnv1a_digest(const std::string& bytes);

/**
 * Machine-readable outcome of one CLI command.  The exit status contract
 * is 0 iff `failures` is empty (parse errors never reach a report; they
 * exit 2).  Serialization is deterministic: inputs and result keys sort.
 */
struct Report {
  std::string command;
  std::map<std::string, std::string> inputs;  // path -> content digest
  Json results = Json::object();
  std::vector<ValidationIssue> failures;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }
  void fail(std::string check, std::string location, std::string detail) {
    failures.push_back({std::move(check), std::move(location), std::move(detail)});
  }
};

Json report_to_json(const Report& r);

}  // namespace cubal
