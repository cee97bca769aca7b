#pragma once

#include <string>
#include <vector>

#include "cubal/io.hpp"
#include "cubal/subdivision.hpp"

namespace cubal {

/**
 * Identity suites runnable over the whole corpus.
 *
 * Each suite evaluates one family of exact identities on every applicable
 * corpus entry plus a fixed set of derived instances (see
 * derived_instances()).  Per-instance outcomes land in Report::results as
 * booleans keyed "<suite>/<instance>[/<aspect>]"; every false outcome also
 * appends a failure, so Report::ok() means the suite holds everywhere.
 * Exploratory observations (sign and unimodality patterns that the
 * underlying theory asks about but does not assert) are reported under
 * "observed/..." keys and never fail the run.
 */
const std::vector<std::string>& suite_names();

/** A subdivision built from corpus entries by product or restriction. */
struct DerivedInstance {
  std::string name;
  SubdivisionMap map;
};

/**
 * Fifty deterministic derived instances: products of corpus subdivisions
 * pairwise, and restrictions of corpus subdivisions to target faces.
 */
const std::vector<DerivedInstance>& derived_instances();

/**
 * Runs one suite ("reciprocity", "symmetry", "locality", "product",
 * "nonnegativity", "formal") or all of them ("all").  Throws
 * std::invalid_argument ("unknown-suite") for any other name.
 */
Report run_suite(const std::string& suite);

}  // namespace cubal
