#pragma once

#include <map>
#include <string>
#include <vector>

#include "cubal/complex.hpp"
#include "cubal/enumeration.hpp"
#include "cubal/polynomial.hpp"

namespace cubal {

/**
 * A cubical subdivision: a source complex refining a target complex together
 * with the carrier map sending every nonempty source face to the smallest
 * target face containing it.  The empty face maps to the empty face.
 *
 * Construction requires only a total map between existing faces, so that
 * deliberately broken maps can be built and inspected; the structural
 * requirements (surjectivity, dimension inequality, order preservation,
 * ball-like restrictions) are examined by validate_subdivision, which
 * reports failures instead of throwing.
 */
class SubdivisionMap {
public:
  /** Carrier given by source face id -> target face id over nonempty faces. */
  SubdivisionMap(FaceComplex source, FaceComplex target,
                 const std::map<std::string, std::string>& carrier_by_id);

  /** Carrier given by source index -> target index; entry 0 must be 0. */
  SubdivisionMap(FaceComplex source, FaceComplex target, std::vector<int> carrier_by_index);

  const FaceComplex& source() const { return source_; }
  const FaceComplex& target() const { return target_; }

  /** Target face carrying the given source face. */
  int carrier(int source_face) const { return carrier_.at(static_cast<size_t>(source_face)); }
  const std::vector<int>& carriers() const { return carrier_; }

  /** Sorted nonempty source faces carried into (the ideal of) target face F. */
  std::vector<int> faces_over(int target_face) const;

  /** Sorted source faces whose carrier is exactly F. */
  std::vector<int> preimage(int target_face) const;

private:
  FaceComplex source_;
  FaceComplex target_;
  std::vector<int> carrier_;
};

enum class LocalKind { short_cubical, long_cubical };

/** A local h-polynomial with the dimension of the subdivided cube. */
struct LocalHVector {
  Polynomial poly;
  int d = 0;
  LocalKind kind = LocalKind::short_cubical;
};

/**
 * Structural validation: surjectivity, the dimension inequality, order
 * preservation, and for every nonempty target face F the ball surrogate
 * bundle on the restriction (order ideal, pure of dimension dim F, connected,
 * pseudomanifold, interior equal to the exact preimage of F, reduced Euler
 * characteristic zero).  Topological ball-ness itself is not decided.
 */
ValidationReport validate_subdivision(const SubdivisionMap& sigma);

/** The identity subdivision of a complex. */
SubdivisionMap trivial_subdivision(const FaceComplex& k);

/**
 * The subdivision of the target face F induced by restricting the carrier
 * map: source faces carried into F over the ideal of F.  Throws
 * std::invalid_argument ("face-not-found") for the empty face or an index
 * out of range, and propagates "not-an-ideal" when the carrier map is not
 * order preserving over F.
 */
SubdivisionMap restriction(const SubdivisionMap& sigma, int target_face);

/** Excess dim(carrier(G)) - dim(G) of a nonempty source face. */
int excess(const SubdivisionMap& sigma, int source_face);

/**
 * Short cubical local h-polynomial of a subdivision of a single cube: the
 * alternating sum over nonempty faces F of the target of
 * (-1)^(d - dim F) h_sc of the restriction to F.  Throws
 * std::invalid_argument ("target-not-a-cube") when the target is not the
 * face complex of one cube, and ("dimension-inequality") when some source
 * face exceeds the dimension of its carrier.
 */
LocalHVector local_h_short(const SubdivisionMap& sigma);

/** The same polynomial computed from the excess statistic of source faces. */
LocalHVector local_h_short_via_excess(const SubdivisionMap& sigma);

/**
 * Long cubical local h-polynomial: the alternating sum of long cubical
 * h-polynomials of the restrictions.  The forced values L_0 = L_(d+1) = 0
 * are checked and raise std::logic_error if violated.
 */
LocalHVector local_h_long(const SubdivisionMap& sigma);

/** True iff x * local_h_short == (x + 1) * local_h_long holds exactly. */
bool short_long_relation_check(const SubdivisionMap& sigma);

/**
 * Contribution of a source vertex to the short local h-polynomial: the
 * alternating sum over target faces F above its carrier of h of the link of
 * v inside the restriction to F.  The contributions over all vertices sum to
 * local_h_short.  Throws std::invalid_argument ("not-a-vertex").
 */
Polynomial vertex_contribution(const SubdivisionMap& sigma, int source_vertex);

/**
 * Locally quasi-geometric test, evaluated per restriction: no restriction
 * admits a triple (F, G, v) of a target face F, source face G and vertex v
 * of G with dim F < dim G such that the carrier of every edge of G through v
 * lies in F.
 */
bool is_locally_quasi_geometric(const SubdivisionMap& sigma);

/**
 * Quasi-geometric test, evaluated per restriction: no source face has all
 * its vertices carried into a target face of smaller dimension.
 */
bool is_quasi_geometric(const SubdivisionMap& sigma);

/** Product subdivision: product complexes with componentwise carriers. */
SubdivisionMap product_subdivision(const SubdivisionMap& a, const SubdivisionMap& b);

struct LocalityTerm {
  int target_face = 0;
  Polynomial local_h;  // local h-polynomial of the restriction to the face
  Polynomial link_h;   // h-polynomial of the link of the face in the target
};

struct LocalityDecomposition {
  HVector lhs;  // h-polynomial of the source complex
  HVector rhs;  // assembled from the terms (plus h of the target, long case)
  std::vector<LocalityTerm> terms;
};

/**
 * Decomposition h_sc(source) = sum over nonempty target faces F of
 * local_h_short(restriction to F) * h(link of F).  Requires a pure target
 * ("not-pure"); raises std::logic_error when the two sides disagree, which
 * for a map passing validate_subdivision means a bug.
 */
LocalityDecomposition locality_decompose_short(const SubdivisionMap& sigma);

/**
 * Long analogue: h_c(source) = h_c(target) + the sum over target faces of
 * dimension >= 1 of local_h_long(restriction) * h(link).
 */
LocalityDecomposition locality_decompose_long(const SubdivisionMap& sigma);

/**
 * Closed form for the short cubical h-polynomial of the cubical barycentric
 * subdivision with parameter t >= 1 of a pure complex, evaluated without
 * constructing the subdivision.  The result is integral; a nonintegral
 * intermediate raises std::domain_error ("nonintegral-result").
 */
HVector cbs_closed_form(const FaceComplex& k, int t);

}  // namespace cubal
