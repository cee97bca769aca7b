#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "cubal/complex.hpp"
#include "cubal/formal.hpp"
#include "cubal/polynomial.hpp"
#include "cubal/subdivision.hpp"

namespace cubal {

/**
 * Generators for the built-in instances.  Each returns a freshly built
 * object, so callers may move from or mutate the result freely.
 */

/** Subdivision of the segment into t + 1 edges (t interior vertices). */
SubdivisionMap gen_segment(int t);

/**
 * Boundary complex of the (d+1)-cube with one facet removed, flattened onto
 * that facet: the cubical analogue of projecting a polytope boundary through
 * a facet.  Every face of the target cube other than the cube itself is
 * covered by exactly one source face.
 */
SubdivisionMap gen_schlegel(int d);

/**
 * Two 3-cubes glued along a square, mapped onto a single 3-cube: the far
 * cube and the glued square sit over the interior.  Combinatorially a
 * subdivision, but not one induced by any geometric refinement, and its
 * short local h-polynomial has negative coefficients.
 */
SubdivisionMap gen_pushed_cube();

/** The 2-dimensional analogue of gen_pushed_cube: two squares onto one. */
SubdivisionMap gen_nongeometric_square();

/**
 * A square subdivided into three quadrilaterals with two extra vertices on
 * each of two adjacent boundary edges.  Quasi-geometric but not locally
 * quasi-geometric: one quadrilateral has more vertices on a boundary edge
 * than that edge can carry.
 */
SubdivisionMap gen_remark_square();

/**
 * A square subdivided into eight quadrilaterals, one of which has all four
 * of its vertices on a single boundary edge.  That quadrilateral reaches the
 * boundary through two chords whose carrier is the whole square, so at every
 * vertex of every cell at least one incident cell edge is carried by the
 * square itself.  Locally quasi-geometric but not quasi-geometric, hence not
 * geometric; the converse situation to gen_remark_square.
 */
SubdivisionMap gen_crossed_square();

/**
 * Axis-aligned grid subdivision of the d-cube, parts[i] >= 1 cells along
 * axis i.  Built as an iterated product of segment subdivisions.
 */
SubdivisionMap gen_grid(int d, const std::vector<int>& parts);

/**
 * Stellar-type subdivision of one maximal face: the chosen facet is replaced
 * by the flattened boundary of a one-higher cube (the gen_schlegel pattern)
 * while every other face is kept.  Throws std::invalid_argument
 * ("not-a-facet") unless the face is maximal of dimension >= 1.
 */
SubdivisionMap gen_stellar(const FaceComplex& k, int facet);

/**
 * Cubical barycentric subdivision with parameter t >= 1 of a pure cubical
 * complex: every face of dimension k is subdivided into (2t+1)^k cells, glued
 * compatibly along shared faces.  For t = 1 the faces of the result are the
 * nonempty closed intervals of the face poset of k.
 */
SubdivisionMap gen_cubical_barycentric(const FaceComplex& k, int t);

/**
 * Purely order-theoretic subdivision: the poset of nonempty closed intervals
 * of the face poset of a simplex with d vertices, mapped onto that face poset
 * by the upper endpoint.  Exercises the formal framework on a poset that is
 * not presented as a complex.
 */
FormalSubdivision gen_interval_poset_subdivision(int d);

/**
 * Face poset of the prism boundary minus its two triangle facets (an
 * annulus), mapped onto the face poset of a complex made of two hollow
 * triangles capped by one artificial top cell.  The target is Eulerian but
 * not a cube, so the general local h-polynomial is exercised away from the
 * cubical setting.
 */
FormalSubdivision gen_annulus();

/** Flags and frozen expected values attached to a corpus entry. */
struct CorpusMetadata {
  bool is_locally_quasi_geometric = false;
  bool is_quasi_geometric = false;
  /** True when the instance arises from an honest geometric refinement. */
  bool is_geometric = false;
  /** Entries still under investigation; excluded from acceptance gating. */
  bool experimental = false;
  /** Frozen expected polynomials keyed by invariant name. */
  std::map<std::string, Polynomial> expected;
};

/** One built-in instance: a complex, a cubical subdivision, or a formal one. */
struct CorpusEntry {
  std::string name;
  std::string summary;
  std::variant<FaceComplex, SubdivisionMap, FormalSubdivision> object;
  CorpusMetadata metadata;
};

/** The built-in corpus, constructed once, in a fixed documented order. */
const std::vector<CorpusEntry>& corpus();

/** Entry lookup by name.  Throws std::invalid_argument ("unknown-entry"). */
const CorpusEntry& corpus_entry(const std::string& name);

}  // namespace cubal
