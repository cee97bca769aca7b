#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cubal/complex.hpp"
#include "cubal/polynomial.hpp"

namespace cubal {

/**
 * An h-type polynomial together with the dimension parameter d of its
 * defining sum.  The degree is at most d (simplicial and short cubical) or
 * d + 1 (long cubical); d also fixes the reflection degree in reciprocity
 * and symmetry checks.
 */
struct HVector {
  Polynomial poly;
  int d = 0;
};

/**
 * h-polynomial of a simplicial complex (or simplicial poset): the sum of
 * x^|F| (1-x)^(d-|F|) over all faces including the empty one, with
 * d = dim + 1 by default.  Pass `ambient_d` to evaluate the sum with the
 * dimension parameter of an enclosing computation; throws
 * std::invalid_argument ("parameter-out-of-range") if some face exceeds it.
 */
HVector h_simplicial(const FaceComplex& k, std::optional<int> ambient_d = std::nullopt);

/**
 * The same sum restricted to the faces not lying on the combinatorial
 * boundary.  When the boundary is empty the sum runs over everything, empty
 * face included.  Requires a pure complex.
 */
HVector h_simplicial_interior(const FaceComplex& k);

/**
 * Short cubical h-polynomial: the sum of (2x)^dim(F) (1-x)^(d-dim(F)) over
 * the nonempty faces, with d = dim by default.
 */
HVector h_short_cubical(const FaceComplex& k, std::optional<int> ambient_d = std::nullopt);

/** The short cubical sum over interior nonempty faces only.  Requires purity. */
HVector h_short_cubical_interior(const FaceComplex& k);

/** Reduced Euler characteristic: signed face count including the empty face. */
long long reduced_euler(const FaceComplex& k);

/**
 * Long cubical h-polynomial, obtained by dividing
 * 2^d + x h_sc(x) + (-2)^d euler x^(d+2) exactly by x + 1.  The division is
 * exact for every complex; a nonzero remainder or a failure of the forced
 * values h_0 = 2^d, h_(d+1) = (-2)^d euler signals corrupted input and
 * raises std::logic_error.
 */
HVector h_long_cubical(const FaceComplex& k);

/**
 * Per-vertex decomposition of the short cubical h-polynomial: pairs
 * (vertex index, h of its link).  For a pure complex the h-polynomials sum
 * to h_short_cubical(k).  Throws std::domain_error ("not-pure") otherwise.
 */
std::vector<std::pair<int, HVector>> hetyei_decomposition(const FaceComplex& k);

}  // namespace cubal
