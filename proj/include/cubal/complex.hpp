#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubal/polynomial.hpp"
#include "cubal/poset.hpp"

namespace cubal {

enum class ComplexKind { cubical, simplicial };

std::string to_string(ComplexKind kind);
ComplexKind complex_kind_from_string(const std::string& s);

/** One nonempty face of a complex under construction. */
struct FaceSpec {
  std::string id;
  int dim = 0;
  std::vector<std::string> covers;  // ids of the faces this face covers (dim - 1)
  std::optional<std::string> code;  // {0,1,*} cube code, when meaningful
};

struct ValidationIssue {
  std::string check;     // short machine-readable name, e.g. "meet-failure"
  std::string location;  // face/element ids involved
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  std::vector<std::string> notes;
  bool ok() const { return issues.empty(); }
};

/**
 * A finite complex represented by its face poset.
 *
 * The empty face is an explicit poset element with id "" at index 0 and
 * dimension -1; every vertex covers it.  Cubical complexes, simplicial
 * complexes and links (simplicial posets) all share this representation,
 * distinguished by the kind tag and by which validation applies.  Faces of
 * generated cubes carry {0,1,*} coordinate codes: '*' marks a free
 * coordinate, containment is coordinatewise refinement.
 */
class FaceComplex {
public:
  /**
   * Builds a complex from nonempty face descriptions.  The empty face is
   * added implicitly.  Each face of dimension >= 1 must list its codimension-1
   * subfaces; throws std::invalid_argument ("malformed-complex") on unknown or
   * duplicate ids, dimension gaps, or dangling faces.
   */
  static FaceComplex from_faces(ComplexKind kind, const std::vector<FaceSpec>& faces);

  /** Face complex of the d-cube; 3^d + 1 faces, ids are the cube codes. */
  static FaceComplex standard_cube(int d);
  /** Proper faces of the d-cube (d >= 1): the cubical (d-1)-sphere. */
  static FaceComplex boundary_of_cube(int d);
  /** Full simplex on n named vertices (2^n faces including the empty face). */
  static FaceComplex simplex(int n_vertices);
  /** Proper faces of the simplex on n vertices: the simplicial (n-2)-sphere. */
  static FaceComplex boundary_of_simplex(int n_vertices);
  /** Downward closure of the given facet vertex sets; ids join vertices with '+'. */
  static FaceComplex from_facet_vertex_sets(const std::vector<std::vector<std::string>>& facets);

  /** Product complex.  Faces are pairs of nonempty faces; cube codes concatenate. */
  static FaceComplex product(const FaceComplex& a, const FaceComplex& b);

  /**
   * Product complex along with the face pairing: pairing[i][j] is the product
   * index of the pair (i, j) of nonempty faces, pairing[0][0] the empty face,
   * and -1 for the meaningless mixed pairs.
   */
  static FaceComplex product(const FaceComplex& a, const FaceComplex& b,
                             std::vector<std::vector<int>>& pairing);

  ComplexKind kind() const { return kind_; }
  const Poset& poset() const { return poset_; }
  int empty_index() const { return 0; }
  int size() const { return poset_.size(); }

  int dim(int face) const { return dims_.at(static_cast<size_t>(face)); }
  /** Dimension of the complex: max face dimension, -1 if only the empty face. */
  int dimension() const;
  bool pure() const;

  int index_of(const std::string& id) const { return poset_.index_of(id); }
  const std::string& id_of(int face) const { return poset_.id_of(face); }

  std::vector<int> nonempty_faces() const;
  std::vector<int> faces_of_dim(int k) const;
  std::vector<int> facets() const;  // maximal nonempty faces
  /** Vertices (dim-0 faces) below the given face. */
  std::vector<int> vertices_below(int face) const;

  /** f_i counts of i-dimensional faces for i = 0..dim. */
  std::vector<long long> f_vector() const;
  /** Sum of x^dim(F) over the nonempty faces; the empty face does not contribute. */
  Polynomial f_polynomial() const;

  /** Cube code of a generated face, if it carries one. */
  const std::optional<std::string>& cube_code(int face) const {
    return codes_.at(static_cast<size_t>(face));
  }
  /** Face index with the given cube code; throws when codes are absent. */
  int face_by_code(const std::string& code) const;

  /**
   * Link of a nonempty face F: the face poset of { G : G > F } with F itself
   * as the new empty face and dimensions rebased to dim(G) - dim(F) - 1.
   * Always of simplicial kind (a simplicial poset).  Throws
   * std::invalid_argument ("empty-face") for the empty face.
   */
  FaceComplex link(int face) const;

  /** The unique top cube when this complex is the face complex of one cube. */
  std::optional<int> top_cube() const;

  /** Meet of two faces when the common lower bounds have a unique maximum. */
  std::optional<int> meet(int f, int g) const;

  struct BoundaryInterior {
    std::vector<int> boundary;  // a subcomplex (downward closed), sorted
    std::vector<int> interior;  // complement, sorted; includes the empty face
                                // exactly when the boundary is empty
    bool boundary_empty = false;
  };
  /**
   * Combinatorial boundary: downward closure of the codimension-1 faces lying
   * in exactly one facet.  Requires a pure complex ("not-pure" otherwise).
   * When no such face exists the boundary is empty and the interior is the
   * whole complex, empty face included.
   */
  BoundaryInterior boundary_interior() const;

  /**
   * Subcomplex on a downward-closed set of nonempty faces (ids, dims and
   * codes preserved).  Throws std::invalid_argument ("not-an-ideal") when the
   * set is not downward closed.
   */
  FaceComplex induced_ideal(const std::vector<int>& faces) const;

  /** Poset of the nonempty faces (the face poset with the empty face removed). */
  Poset nonempty_face_poset() const;
  /** Poset of the faces of dimension >= m. */
  Poset truncated_face_poset(int m) const;

  /**
   * Structural validation: dimension/rank consistency, cube or simplex
   * interval profiles, Boolean upper intervals, and meet existence.
   * Topological ball/sphere properties are NOT verified; the report carries a
   * note to that effect.
   */
  ValidationReport validate() const;

private:
  FaceComplex() = default;

  ComplexKind kind_ = ComplexKind::cubical;
  Poset poset_;                                    // element 0 is the empty face
  std::vector<int> dims_;                          // by poset index; dims_[0] = -1
  std::vector<std::optional<std::string>> codes_;  // by poset index
};

}  // namespace cubal
