#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cubal/enumeration.hpp"
#include "cubal/poset.hpp"
#include "cubal/subdivision.hpp"

namespace cubal {

/**
 * Polynomial-valued function on the closed intervals of a fixed poset.
 *
 * Values default to zero; at() and set() reject pairs (s, t) with s <= t
 * false ("not-comparable").  Two functions compare equal when their hosts
 * have the same structure and every interval carries the same value, so
 * functions built over separate copies of one poset are interchangeable.
 */
class IncidenceFunction {
public:
  /** The zero function on every interval of `host` (the poset is copied). */
  explicit IncidenceFunction(const Poset& host);

  /** Identity of convolution: 1 on the diagonal, 0 elsewhere. */
  static IncidenceFunction delta(const Poset& host);
  /** 1 on every closed interval. */
  static IncidenceFunction zeta(const Poset& host);

  const Poset& host() const { return *host_; }

  /** Value on [s, t]; throws std::invalid_argument ("not-comparable") unless s <= t. */
  const Polynomial& at(int s, int t) const;
  void set(int s, int t, Polynomial value);

  /** True iff the value on every one-point interval is the constant 1. */
  bool is_unitary() const;

  friend bool operator==(const IncidenceFunction& a, const IncidenceFunction& b);

private:
  std::shared_ptr<const Poset> host_;
  std::map<std::pair<int, int>, Polynomial> values_;  // zero values are not stored
};

/**
 * Polynomial-valued function on the elements of a fixed poset.
 */
class PointFunction {
public:
  /** The zero function on `host` (the poset is copied). */
  explicit PointFunction(const Poset& host);

  static PointFunction constant(const Poset& host, Polynomial value);

  const Poset& host() const { return *host_; }

  const Polynomial& at(int t) const;
  void set(int t, Polynomial value);

  friend bool operator==(const PointFunction& a, const PointFunction& b);

private:
  std::shared_ptr<const Poset> host_;
  std::vector<Polynomial> values_;
};

/**
 * Convolution (fg)_{su} = sum over s <= t <= u of f_{st} g_{tu}.
 * Throws std::invalid_argument ("host-mismatch") unless the hosts agree.
 */
IncidenceFunction convolve(const IncidenceFunction& f, const IncidenceFunction& g);

/** Point-function convolution (fg)_t = sum over s <= t of f_s g_{st}. */
PointFunction convolve(const PointFunction& f, const IncidenceFunction& g);

/**
 * Two-sided convolution inverse of a unitary incidence function, computed by
 * recursion on interval size.  Throws std::invalid_argument ("not-unitary")
 * when some diagonal value differs from 1.
 */
IncidenceFunction invert(const IncidenceFunction& g);

/**
 * Interval-wise degree reversal: the value on [s, t] becomes
 * x^{rho(s,t)} g_{st}(1/x).  Throws std::domain_error ("degree-exceeds-rank")
 * when some value has degree above the rank of its interval, and propagates
 * "not-graded" from the host when an interval has no rank.
 */
IncidenceFunction bar(const IncidenceFunction& g);

/** Element-wise degree reversal by the rank of each element. */
PointFunction bar(const PointFunction& f);

/**
 * The rank kernel: (x-1)^{rho(s,t)} on every interval.  Throws
 * std::domain_error ("not-locally-graded") when some interval is not graded.
 */
IncidenceFunction lambda_kernel(const Poset& p);

/**
 * Kernel test: true iff convolving `kappa` with bar(kappa) yields delta.
 * Returns false (rather than throwing) when bar is undefined because degree
 * or grading requirements already fail.
 */
bool is_kernel(const IncidenceFunction& kappa);

/**
 * The unique kappa-acceptable point function that is 1 on minimal elements
 * and has degree at most floor((rho(t)-1)/2) elsewhere.  Computed by rank
 * induction: the partial sum R_t over s < t forces the low-degree part and
 * the mirrored high-degree part is checked.  Throws std::domain_error
 * ("inconsistency") when no solution exists, which happens exactly when
 * `kappa` is not a kernel or the host is not lower graded.
 */
PointFunction gamma(const Poset& p, const IncidenceFunction& kappa);

/**
 * The unique kappa-totally-acceptable incidence function with 1 on the
 * diagonal and degree at most floor((rho(s,t)-1)/2) off it; the same
 * truncation recursion as gamma(), run independently above each element.
 */
IncidenceFunction xi(const Poset& p, const IncidenceFunction& kappa);

/**
 * The h-polynomial of a finite, nonempty, lower graded and locally Eulerian
 * poset of length d: the degree-d reversal of
 * sum over t of gamma_t(x) (x-1)^{d - rho(t)}.
 *
 * On the nonempty-face poset of a cubical complex this is the short cubical
 * h-polynomial; on that of a pure simplicial complex it is the sum of the
 * h-polynomials of the vertex links.  Throws std::invalid_argument
 * ("empty-poset") or std::domain_error ("not-locally-eulerian").
 */
HVector h_general(const Poset& p);

/**
 * A rank-respecting surjection of finite posets used as a combinatorial
 * subdivision.  Construction checks only that sigma is a total map into the
 * target; the structural conditions are examined by validate_formal().
 */
class FormalSubdivision {
public:
  /** sigma_by_index[q] is the target index carrying source element q. */
  FormalSubdivision(Poset source, Poset target, std::vector<int> sigma_by_index);

  /** Same, with both sides addressed by element id. */
  FormalSubdivision(Poset source, Poset target,
                    const std::map<std::string, std::string>& sigma_by_id);

  const Poset& source() const { return *source_; }
  const Poset& target() const { return *target_; }

  int sigma(int q) const { return sigma_.at(static_cast<size_t>(q)); }
  const std::vector<int>& sigma_map() const { return sigma_; }

  /** Source elements mapped into the principal ideal of u, ascending. */
  std::vector<int> restriction_ideal(int u) const;
  /** Source elements mapped exactly to u, ascending. */
  std::vector<int> preimage(int u) const;

private:
  std::shared_ptr<const Poset> source_, target_;
  std::vector<int> sigma_;
};

/**
 * Checks the structural conditions on a formal subdivision: both posets
 * lower graded and locally Eulerian, sigma surjective and rank-decreasing,
 * every restriction an order ideal whose length is the rank of its target
 * element, and the reciprocity condition tying each restriction's
 * h-polynomial to the sum over its interior.
 */
ValidationReport validate_formal(const FormalSubdivision& f);

/** The subdivision restricted to the principal ideal of target element u. */
FormalSubdivision restriction(const FormalSubdivision& f, int u);

/** Point function on the target assigning to u the h-polynomial of the restriction over u. */
PointFunction restriction_h(const FormalSubdivision& f);

/**
 * The local h-polynomial of the subdivision: the sum over target elements u
 * of h(restriction over u) times the inverse of xi at [u, maximum].  Throws
 * std::domain_error ("no-maximum") when the target has no maximum element
 * and std::logic_error when the result fails its degree symmetry.
 */
Polynomial local_h_general(const FormalSubdivision& f);

/** True iff f_t has degree at most rank(t) and convolving with kappa reverses degrees. */
bool is_acceptable(const PointFunction& f, const IncidenceFunction& kappa);

/** Acceptability of the restriction h-function with respect to the rank kernel. */
bool acceptability_check(const FormalSubdivision& f);

/**
 * Both sides of the locality decomposition: the h-polynomial of the source
 * against the sum over target elements u of the local h-polynomial of the
 * restriction over u times h of the target part at or above u (u kept as
 * the rank-0 minimum).  Throws std::domain_error ("not-graded") unless the
 * target is graded.
 */
std::pair<Polynomial, Polynomial> general_locality(const FormalSubdivision& f);

/**
 * Lifts a face-level subdivision map to the posets of faces of dimension at
 * least min_dim on both sides.  With the default min_dim = 0 the posets are
 * the nonempty-face posets.  Throws std::invalid_argument
 * ("parameter-out-of-range") when no source face reaches min_dim.
 */
FormalSubdivision lift_to_formal(const SubdivisionMap& sigma, int min_dim = 0);

}  // namespace cubal
