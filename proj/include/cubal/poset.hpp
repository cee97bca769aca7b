#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cubal {

/**
 * Finite poset built from cover relations.
 *
 * Elements are opaque string ids; the element order given at construction is
 * preserved and used for all deterministic iteration.  Construction validates
 * the input: unknown or duplicate ids, cycles, and edges that are not true
 * covers (an edge with a longer path between its endpoints) are rejected.
 *
 * The full order relation and chain-length data are derived eagerly, so a
 * constructed Poset is immutable and safe for concurrent reads.  Moebius
 * values are cached on demand behind a mutex.
 */
class Poset {
public:
  /** The empty poset (no elements). */
  Poset() = default;

  /**
   * Builds a poset from cover pairs (lower, upper).
   *
   * Throws std::invalid_argument with messages prefixed "duplicate-element",
   * "unknown-element", "cycle-detected" or "redundant-edge".
   */
  static Poset from_covers(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& covers);

  int size() const { return static_cast<int>(ids_.size()); }
  const std::vector<std::string>& elements() const { return ids_; }
  const std::string& id_of(int idx) const { return ids_.at(static_cast<size_t>(idx)); }
  /** Index of an id; throws std::invalid_argument ("unknown-element") if absent. */
  int index_of(const std::string& id) const;
  bool contains(const std::string& id) const { return index_.count(id) > 0; }

  /** True iff a <= b in the order (reflexive). */
  bool less_equal(int a, int b) const;
  bool strictly_less(int a, int b) const { return a != b && less_equal(a, b); }

  /** Elements covering `a`, in index order. */
  const std::vector<int>& upper_covers(int a) const { return up_.at(static_cast<size_t>(a)); }
  /** Elements covered by `a`, in index order. */
  const std::vector<int>& lower_covers(int a) const { return down_.at(static_cast<size_t>(a)); }

  std::vector<int> ideal(int t) const;   // { s : s <= t }, ascending index order
  std::vector<int> filter(int u) const;  // { t : t >= u }, ascending index order
  /** [s, t]; throws std::invalid_argument ("not-comparable") unless s <= t. */
  std::vector<int> interval(int s, int t) const;

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  /** The maximum element, if the poset has one. */
  std::optional<int> maximum() const;

  /** True iff every principal ideal is graded. */
  bool is_lower_graded() const;
  /**
   * Common length of the maximal chains of the principal ideal below t.
   * Throws std::domain_error ("not-graded") when those lengths disagree.
   */
  int rank(int t) const;
  /**
   * Common length of the maximal chains of [s, t].  Throws "not-comparable"
   * when s <= t fails and "not-graded" when the interval is not graded.
   */
  int interval_rank(int s, int t) const;
  /** Maximum chain length of the whole poset. */
  int length() const;
  /** True iff the poset is lower graded and all maximal chains have equal length. */
  bool is_graded() const;

  /** Moebius function of the interval [s, t]; cached, thread-safe. */
  long long mobius(int s, int t) const;

  /** True iff every subinterval [a, b] of [s, t] has mu(a, b) = (-1)^rank(a, b). */
  bool is_eulerian_interval(int s, int t) const;
  /** True iff every closed interval of the poset is Eulerian. */
  bool is_locally_eulerian() const;

  /** True iff [s, t] is isomorphic to a Boolean lattice. */
  bool is_boolean_interval(int s, int t) const;

  /**
   * Induced subposet on the given element indices (order inherited, covers
   * recomputed).  Element order follows this poset's index order.
   */
  Poset induced(const std::vector<int>& subset) const;
  Poset principal_ideal(int t) const { return induced(ideal(t)); }
  /** Subposet { t : t >= u }.  u becomes the unique minimal element at rank 0. */
  Poset subposet_above(int u) const { return induced(filter(u)); }

  /** Componentwise product; element ids are "(a|b)". */
  static Poset product(const Poset& a, const Poset& b);

  /** Structural equality: same element ids in the same order, same covers. */
  bool same_structure(const Poset& other) const;

  /** All cover pairs (lower, upper) as ids, in deterministic order. */
  std::vector<std::pair<std::string, std::string>> cover_pairs() const;

private:
  void build_derived();  // reachability, chain lengths, topological order

  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<std::vector<uint64_t>> below_;  // below_[t] = bitset of { s : s <= t }
  std::vector<int> short_len_, long_len_;     // extremal chain lengths from minimal elements
  std::vector<int> topo_;      // a topological order of the element indices
  std::vector<int> topo_pos_;  // inverse permutation of topo_

  mutable std::map<std::pair<int, int>, long long> mobius_cache_;
  mutable std::shared_ptr<std::mutex> mobius_mutex_ = std::make_shared<std::mutex>();
};

}  // namespace cubal
