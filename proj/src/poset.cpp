#include "cubal/poset.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace cubal {

namespace {

inline bool bit_test(const std::vector<uint64_t>& words, int i) {
  return (words[static_cast<size_t>(i) >> 6] >> (static_cast<unsigned>(i) & 63u)) & 1u;
}

inline void bit_set(std::vector<uint64_t>& words, int i) {
  words[static_cast<size_t>(i) >> 6] |= uint64_t(1) << (static_cast<unsigned>(i) & 63u);
}

inline void bit_or(std::vector<uint64_t>& dst, const std::vector<uint64_t>& src) {
  for (size_t w = 0; w < dst.size(); ++w) dst[w] |= src[w];
}

}  // namespace

Poset Poset::from_covers(std::vector<std::string> elements,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
  Poset p;
  p.ids_ = std::move(elements);
  for (int i = 0; i < p.size(); ++i) {
    if (!p.index_.emplace(p.ids_[static_cast<size_t>(i)], i).second)
      throw std::invalid_argument("duplicate-element: '" + p.ids_[static_cast<size_t>(i)] + "'");
  }
  p.up_.resize(p.ids_.size());
  p.down_.resize(p.ids_.size());
  std::set<std::pair<int, int>> seen;
  for (const auto& [lo, hi] : covers) {
    int a = p.index_of(lo);
    int b = p.index_of(hi);
    if (a == b) throw std::invalid_argument("cycle-detected: self edge at '" + lo + "'");
    if (!seen.emplace(a, b).second) continue;  // duplicate pairs are harmless
    p.up_[static_cast<size_t>(a)].push_back(b);
    p.down_[static_cast<size_t>(b)].push_back(a);
  }
  for (auto& v : p.up_) std::sort(v.begin(), v.end());
  for (auto& v : p.down_) std::sort(v.begin(), v.end());
  p.build_derived();
  return p;
}

void Poset::build_derived() {
  const int n = size();
  // Kahn topological sort; leftovers witness a cycle.
  std::vector<int> indeg(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) indeg[static_cast<size_t>(v)] = static_cast<int>(down_[static_cast<size_t>(v)].size());
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[static_cast<size_t>(v)] == 0) ready.push(v);
  topo_.clear();
  topo_.reserve(static_cast<size_t>(n));
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    topo_.push_back(v);
    for (int w : up_[static_cast<size_t>(v)])
      if (--indeg[static_cast<size_t>(w)] == 0) ready.push(w);
  }
  if (static_cast<int>(topo_.size()) != n)
    throw std::invalid_argument("cycle-detected: cover relation is not acyclic");
  topo_pos_.assign(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) topo_pos_[static_cast<size_t>(topo_[static_cast<size_t>(i)])] = i;

  const size_t words = (static_cast<size_t>(n) + 63) / 64;
  below_.assign(static_cast<size_t>(n), std::vector<uint64_t>(words, 0));
  short_len_.assign(static_cast<size_t>(n), 0);
  long_len_.assign(static_cast<size_t>(n), 0);
  for (int v : topo_) {
    auto& bits = below_[static_cast<size_t>(v)];
    bit_set(bits, v);
    bool first = true;
    for (int u : down_[static_cast<size_t>(v)]) {
      bit_or(bits, below_[static_cast<size_t>(u)]);
      int s = short_len_[static_cast<size_t>(u)] + 1;
      int l = long_len_[static_cast<size_t>(u)] + 1;
      short_len_[static_cast<size_t>(v)] = first ? s : std::min(short_len_[static_cast<size_t>(v)], s);
      long_len_[static_cast<size_t>(v)] = std::max(long_len_[static_cast<size_t>(v)], l);
      first = false;
    }
  }

  // An edge (a, b) shadowed by a longer path is not a cover.
  for (int b = 0; b < n; ++b)
    for (int a : down_[static_cast<size_t>(b)])
      for (int u : down_[static_cast<size_t>(b)])
        if (u != a && less_equal(a, u))
          throw std::invalid_argument("redundant-edge: (" + id_of(a) + ", " + id_of(b) +
                                      ") is implied by a longer chain");
}

int Poset::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::invalid_argument("unknown-element: '" + id + "'");
  return it->second;
}

bool Poset::less_equal(int a, int b) const {
  return bit_test(below_[static_cast<size_t>(b)], a);
}

std::vector<int> Poset::ideal(int t) const {
  std::vector<int> out;
  for (int s = 0; s < size(); ++s)
    if (less_equal(s, t)) out.push_back(s);
  return out;
}

std::vector<int> Poset::filter(int u) const {
  std::vector<int> out;
  for (int t = 0; t < size(); ++t)
    if (less_equal(u, t)) out.push_back(t);
  return out;
}

std::vector<int> Poset::interval(int s, int t) const {
  if (!less_equal(s, t))
    throw std::invalid_argument("not-comparable: [" + id_of(s) + ", " + id_of(t) + "]");
  std::vector<int> out;
  for (int u = 0; u < size(); ++u)
    if (less_equal(s, u) && less_equal(u, t)) out.push_back(u);
  return out;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (down_[static_cast<size_t>(v)].empty()) out.push_back(v);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (up_[static_cast<size_t>(v)].empty()) out.push_back(v);
  return out;
}

std::optional<int> Poset::maximum() const {
  auto maxes = maximal_elements();
  if (maxes.size() == 1) return maxes[0];
  return std::nullopt;
}

bool Poset::is_lower_graded() const {
  for (int v = 0; v < size(); ++v)
    if (short_len_[static_cast<size_t>(v)] != long_len_[static_cast<size_t>(v)]) return false;
  return true;
}

int Poset::rank(int t) const {
  if (short_len_[static_cast<size_t>(t)] != long_len_[static_cast<size_t>(t)])
    throw std::domain_error("not-graded: maximal chains below '" + id_of(t) +
                            "' have lengths " + std::to_string(short_len_[static_cast<size_t>(t)]) +
                            " and " + std::to_string(long_len_[static_cast<size_t>(t)]));
  return short_len_[static_cast<size_t>(t)];
}

int Poset::interval_rank(int s, int t) const {
  std::vector<int> members = interval(s, t);
  // Extremal chain lengths from s, along covers inside the interval.  Covers
  // of the interval coincide with covers of the poset between its members.
  std::map<int, std::pair<int, int>> len;  // member -> (shortest, longest)
  len[s] = {0, 0};
  for (int v : topo_) {
    if (v == s || !less_equal(s, v) || !less_equal(v, t)) continue;
    bool first = true;
    std::pair<int, int> acc{0, 0};
    for (int u : down_[static_cast<size_t>(v)]) {
      auto it = len.find(u);
      if (it == len.end()) continue;
      int lo = it->second.first + 1, hi = it->second.second + 1;
      if (first) {
        acc = {lo, hi};
        first = false;
      } else {
        acc.first = std::min(acc.first, lo);
        acc.second = std::max(acc.second, hi);
      }
    }
    len[v] = acc;
  }
  auto [lo, hi] = len.at(t);
  if (lo != hi)
    throw std::domain_error("not-graded: interval [" + id_of(s) + ", " + id_of(t) +
                            "] has maximal chains of lengths " + std::to_string(lo) + " and " +
                            std::to_string(hi));
  return lo;
}

int Poset::length() const {
  int best = 0;
  for (int v = 0; v < size(); ++v) best = std::max(best, long_len_[static_cast<size_t>(v)]);
  return best;
}

bool Poset::is_graded() const {
  if (!is_lower_graded()) return false;
  int expected = length();
  for (int v : maximal_elements())
    if (short_len_[static_cast<size_t>(v)] != expected) return false;
  return true;
}

long long Poset::mobius(int s, int t) const {
  if (!less_equal(s, t))
    throw std::invalid_argument("not-comparable: mobius(" + id_of(s) + ", " + id_of(t) + ")");
  std::lock_guard<std::mutex> lock(*mobius_mutex_);
  // mu(s, s) = 1; mu(s, t) = -sum_{s <= u < t} mu(s, u).  Members are walked
  // in topological order so every summand is ready when needed.
  std::vector<int> members = interval(s, t);
  std::sort(members.begin(), members.end(), [&](int a, int b) {
    return topo_pos_[static_cast<size_t>(a)] < topo_pos_[static_cast<size_t>(b)];
  });
  std::vector<long long> val;
  val.reserve(members.size());
  for (int u : members) {
    auto key = std::make_pair(s, u);
    if (auto it = mobius_cache_.find(key); it != mobius_cache_.end()) {
      val.push_back(it->second);
      continue;
    }
    long long m;
    if (u == s) {
      m = 1;
    } else {
      m = 0;
      for (size_t j = 0; j < val.size(); ++j)
        if (members[j] != u && less_equal(members[j], u)) m -= val[j];
    }
    mobius_cache_[key] = m;
    val.push_back(m);
  }
  return mobius_cache_.at(std::make_pair(s, t));
}

bool Poset::is_eulerian_interval(int s, int t) const {
  std::vector<int> members = interval(s, t);
  for (int a : members)
    for (int b : members) {
      if (!less_equal(a, b)) continue;
      int r = interval_rank(a, b);  // not-graded propagates
      long long expected = (r % 2 == 0) ? 1 : -1;
      if (mobius(a, b) != expected) return false;
    }
  return true;
}

bool Poset::is_locally_eulerian() const {
  for (int s = 0; s < size(); ++s)
    for (int t = 0; t < size(); ++t) {
      if (!less_equal(s, t)) continue;
      int r = interval_rank(s, t);
      long long expected = (r % 2 == 0) ? 1 : -1;
      if (mobius(s, t) != expected) return false;
    }
  return true;
}

bool Poset::is_boolean_interval(int s, int t) const {
  if (!less_equal(s, t))
    throw std::invalid_argument("not-comparable: [" + id_of(s) + ", " + id_of(t) + "]");
  std::vector<int> members = interval(s, t);
  int r;
  try {
    r = interval_rank(s, t);
  } catch (const std::domain_error&) {
    return false;
  }
  if (r > 30) return false;  // out of scope for the design envelope
  if (members.size() != (size_t(1) << r)) return false;

  if (r == 0) return members.size() == 1;
  if (r == 1) return members.size() == 2;

  std::vector<int> atoms, coatoms;
  for (int u : members) {
    if (u == s || u == t) continue;
    bool atom = true, coatom = true;
    for (int w : members) {
      if (w == s || w == t || w == u) continue;
      if (strictly_less(w, u)) atom = false;
      if (strictly_less(u, w)) coatom = false;
    }
    if (atom) atoms.push_back(u);
    if (coatom) coatoms.push_back(u);
  }
  if (static_cast<int>(atoms.size()) != r || static_cast<int>(coatoms.size()) != r) return false;

  // Label members by their atom sets; the labeling must be a bijection onto
  // subsets that also reproduces the order.
  std::vector<uint32_t> label(members.size(), 0);
  std::set<uint32_t> distinct;
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t a = 0; a < atoms.size(); ++a)
      if (less_equal(atoms[a], members[i])) label[i] |= uint32_t(1) << a;
    if (!distinct.insert(label[i]).second) return false;
  }
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < members.size(); ++j) {
      bool sub = (label[i] & ~label[j]) == 0;
      if (sub != less_equal(members[i], members[j])) return false;
    }
  return true;
}

Poset Poset::induced(const std::vector<int>& subset) const {
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::unordered_map<int, int> pos;
  std::vector<std::string> ids;
  ids.reserve(sorted.size());
  for (size_t i = 0; i < sorted.size(); ++i) {
    pos[sorted[i]] = static_cast<int>(i);
    ids.push_back(id_of(sorted[i]));
  }
  // Covers of the induced order: comparable pairs with nothing in between.
  std::vector<std::pair<std::string, std::string>> covers;
  for (int a : sorted)
    for (int b : sorted) {
      if (!strictly_less(a, b)) continue;
      bool direct = true;
      for (int c : sorted) {
        if (c != a && c != b && strictly_less(a, c) && strictly_less(c, b)) {
          direct = false;
          break;
        }
      }
      if (direct) covers.emplace_back(id_of(a), id_of(b));
    }
  return from_covers(std::move(ids), covers);
}

Poset Poset::product(const Poset& a, const Poset& b) {
  std::vector<std::string> ids;
  ids.reserve(static_cast<size_t>(a.size()) * static_cast<size_t>(b.size()));
  auto pair_id = [&](int i, int j) { return "(" + a.id_of(i) + "|" + b.id_of(j) + ")"; };
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j) ids.push_back(pair_id(i, j));
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j) {
      for (int k : a.upper_covers(i)) covers.emplace_back(pair_id(i, j), pair_id(k, j));
      for (int k : b.upper_covers(j)) covers.emplace_back(pair_id(i, j), pair_id(i, k));
    }
  return from_covers(std::move(ids), covers);
}

bool Poset::same_structure(const Poset& other) const {
  return ids_ == other.ids_ && up_ == other.up_;
}

std::vector<std::pair<std::string, std::string>> Poset::cover_pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (int a = 0; a < size(); ++a)
    for (int b : up_[static_cast<size_t>(a)]) out.emplace_back(id_of(a), id_of(b));
  return out;
}

}  // namespace cubal
