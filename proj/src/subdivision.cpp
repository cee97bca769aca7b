#include "cubal/subdivision.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace cubal {

namespace {

Polynomial one_minus_x_power(int e) { return power(Polynomial::of({1, -1}), e); }

/** (-2)^e as an exact coefficient. */
Coeff minus_two_power(int e) {
  Coeff c = Coeff(1) << e;
  return e % 2 == 0 ? c : -c;
}

/**
 * Short cubical h-polynomial of the restriction to target face `f`, summed
 * directly from the carrier data with dimension parameter dim(f).
 */
Polynomial short_restriction_sum(const SubdivisionMap& sigma, int f) {
  const FaceComplex& src = sigma.source();
  const int fd = sigma.target().dim(f);
  Polynomial h;
  for (int g : sigma.faces_over(f)) {
    const int gd = src.dim(g);
    if (gd > fd) {
      throw std::invalid_argument("dimension-inequality: source face '" + src.id_of(g) +
                                  "' of dim " + std::to_string(gd) +
                                  " lies over a face of dim " + std::to_string(fd));
    }
    h = h + Polynomial::monomial(gd, Coeff(1) << gd) * one_minus_x_power(fd - gd);
  }
  return h;
}

/** Reduced Euler characteristic of the restriction to `f` from carrier data. */
long long restriction_euler(const SubdivisionMap& sigma, int f) {
  long long chi = -1;  // the implicit empty face
  for (int g : sigma.faces_over(f)) chi += sigma.source().dim(g) % 2 == 0 ? 1 : -1;
  return chi;
}

int require_cube_target(const SubdivisionMap& sigma, const char* what) {
  if (!sigma.target().top_cube()) {
    throw std::invalid_argument(std::string("target-not-a-cube: ") + what +
                                " is defined for subdivisions of a single cube");
  }
  return sigma.target().dimension();
}

/** Connectivity of the 1-skeleton (true for the one-vertex complex). */
bool skeleton_connected(const FaceComplex& k) {
  std::vector<int> verts = k.faces_of_dim(0);
  if (verts.empty()) return false;
  std::map<int, int> comp;
  for (size_t i = 0; i < verts.size(); ++i) comp[verts[i]] = static_cast<int>(i);
  std::vector<int> parent(verts.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int a) {
    while (parent[static_cast<size_t>(a)] != a) a = parent[static_cast<size_t>(a)];
    return a;
  };
  for (int e : k.faces_of_dim(1)) {
    std::vector<int> vs = k.vertices_below(e);
    for (size_t i = 1; i < vs.size(); ++i)
      parent[static_cast<size_t>(find(comp[vs[i]]))] = find(comp[vs[0]]);
  }
  const int root = find(0);
  for (size_t i = 1; i < parent.size(); ++i)
    if (find(static_cast<int>(i)) != root) return false;
  return true;
}

/** Every codimension-1 face (the empty face when dim = 0) lies in at most two facets. */
bool pseudomanifold(const FaceComplex& k) {
  const int d = k.dimension();
  for (int r : k.faces_of_dim(d - 1)) {
    int count = 0;
    for (int f : k.poset().filter(r))
      if (k.dim(f) == d) ++count;
    if (count > 2) return false;
  }
  return true;
}

/** True iff a and b have a common upper bound among the nonempty faces. */
bool upper_bounded(const Poset& p, int a, int b) {
  for (int h = 1; h < p.size(); ++h)
    if (p.less_equal(a, h) && p.less_equal(b, h)) return true;
  return false;
}

}  // namespace

SubdivisionMap::SubdivisionMap(FaceComplex source, FaceComplex target,
                               const std::map<std::string, std::string>& carrier_by_id)
    : source_(std::move(source)), target_(std::move(target)) {
  carrier_.assign(static_cast<size_t>(source_.size()), -1);
  carrier_[0] = 0;
  for (const auto& [s, t] : carrier_by_id) {
    if (s.empty()) {
      if (!t.empty())
        throw std::invalid_argument("carrier-to-empty: the empty face must map to itself");
      continue;
    }
    const int si = source_.index_of(s);
    const int ti = target_.index_of(t);
    if (ti == target_.empty_index())
      throw std::invalid_argument("carrier-to-empty: nonempty face '" + s +
                                  "' is mapped to the empty face");
    carrier_[static_cast<size_t>(si)] = ti;
  }
  for (int g = 1; g < source_.size(); ++g)
    if (carrier_[static_cast<size_t>(g)] < 0)
      throw std::invalid_argument("carrier-missing: source face '" + source_.id_of(g) +
                                  "' has no carrier");
}

SubdivisionMap::SubdivisionMap(FaceComplex source, FaceComplex target,
                               std::vector<int> carrier_by_index)
    : source_(std::move(source)), target_(std::move(target)), carrier_(std::move(carrier_by_index)) {
  if (static_cast<int>(carrier_.size()) != source_.size())
    throw std::invalid_argument("carrier-missing: carrier vector does not cover the source");
  if (carrier_[0] != 0)
    throw std::invalid_argument("carrier-to-empty: the empty face must map to itself");
  for (int g = 1; g < source_.size(); ++g) {
    const int c = carrier_[static_cast<size_t>(g)];
    if (c < 0 || c >= target_.size())
      throw std::invalid_argument("unknown-element: carrier index out of range for face '" +
                                  source_.id_of(g) + "'");
    if (c == target_.empty_index())
      throw std::invalid_argument("carrier-to-empty: nonempty face '" + source_.id_of(g) +
                                  "' is mapped to the empty face");
  }
}

std::vector<int> SubdivisionMap::faces_over(int target_face) const {
  std::vector<int> out;
  for (int g = 1; g < source_.size(); ++g)
    if (target_.poset().less_equal(carrier(g), target_face)) out.push_back(g);
  return out;
}

std::vector<int> SubdivisionMap::preimage(int target_face) const {
  std::vector<int> out;
  for (int g = 1; g < source_.size(); ++g)
    if (carrier(g) == target_face) out.push_back(g);
  return out;
}

ValidationReport validate_subdivision(const SubdivisionMap& sigma) {
  const FaceComplex& src = sigma.source();
  const FaceComplex& tgt = sigma.target();
  ValidationReport report;
  report.notes.push_back(
      "topological ball-ness of restrictions is not decided; the surrogate bundle "
      "(ideal, pure, connected, pseudomanifold, interior, Euler characteristic) is checked");

  for (int g = 1; g < src.size(); ++g) {
    if (src.dim(g) > tgt.dim(sigma.carrier(g)))
      report.issues.push_back({"dimension-inequality", src.id_of(g),
                               "dim " + std::to_string(src.dim(g)) + " exceeds its carrier '" +
                                   tgt.id_of(sigma.carrier(g)) + "' of dim " +
                                   std::to_string(tgt.dim(sigma.carrier(g)))});
    for (int g2 : src.poset().lower_covers(g)) {
      if (g2 == src.empty_index()) continue;
      if (!tgt.poset().less_equal(sigma.carrier(g2), sigma.carrier(g)))
        report.issues.push_back({"carrier-not-monotone", src.id_of(g2) + " < " + src.id_of(g),
                                 "carriers '" + tgt.id_of(sigma.carrier(g2)) + "' and '" +
                                     tgt.id_of(sigma.carrier(g)) + "' are not comparable"});
    }
  }
  for (int f = 1; f < tgt.size(); ++f)
    if (sigma.preimage(f).empty())
      report.issues.push_back(
          {"not-surjective", tgt.id_of(f), "no source face has this exact carrier"});

  for (int f = 1; f < tgt.size(); ++f) {
    const std::string& loc = tgt.id_of(f);
    const int fd = tgt.dim(f);
    std::optional<FaceComplex> rest;
    try {
      rest = src.induced_ideal(sigma.faces_over(f));
    } catch (const std::invalid_argument& e) {
      report.issues.push_back({"restriction-not-ideal", loc, e.what()});
      continue;
    }
    const bool pure_ok = rest->pure() && rest->dimension() == fd;
    if (!pure_ok)
      report.issues.push_back(
          {"restriction-not-pure", loc,
           "restriction is not pure of dimension " + std::to_string(fd)});
    if (!skeleton_connected(*rest))
      report.issues.push_back({"restriction-disconnected", loc, "1-skeleton is disconnected"});
    if (pure_ok && !pseudomanifold(*rest))
      report.issues.push_back(
          {"not-pseudomanifold", loc, "some codimension-1 face lies in more than two facets"});
    if (pure_ok) {
      const auto bi = rest->boundary_interior();
      std::vector<std::string> interior_ids;
      for (int g : bi.interior)
        if (g != rest->empty_index()) interior_ids.push_back(rest->id_of(g));
      std::vector<std::string> preimage_ids;
      for (int g : sigma.preimage(f)) preimage_ids.push_back(src.id_of(g));
      std::sort(interior_ids.begin(), interior_ids.end());
      std::sort(preimage_ids.begin(), preimage_ids.end());
      if (bi.boundary_empty || interior_ids != preimage_ids)
        report.issues.push_back({"interior-mismatch", loc,
                                 "combinatorial interior differs from the exact preimage"});
    }
    if (restriction_euler(sigma, f) != 0)
      report.issues.push_back({"euler-characteristic", loc,
                               "reduced Euler characteristic " +
                                   std::to_string(restriction_euler(sigma, f)) +
                                   " of the restriction is nonzero"});
  }
  return report;
}

SubdivisionMap trivial_subdivision(const FaceComplex& k) {
  std::vector<int> carrier(static_cast<size_t>(k.size()));
  for (int f = 0; f < k.size(); ++f) carrier[static_cast<size_t>(f)] = f;
  return SubdivisionMap(k, k, std::move(carrier));
}

SubdivisionMap restriction(const SubdivisionMap& sigma, int target_face) {
  const FaceComplex& tgt = sigma.target();
  if (target_face <= 0 || target_face >= tgt.size())
    throw std::invalid_argument("face-not-found: restriction needs a nonempty target face");
  const std::vector<int> over = sigma.faces_over(target_face);
  FaceComplex sub_src = sigma.source().induced_ideal(over);
  std::vector<int> tideal;
  for (int f : tgt.poset().ideal(target_face))
    if (f != tgt.empty_index()) tideal.push_back(f);
  FaceComplex sub_tgt = tgt.induced_ideal(tideal);
  std::vector<int> carrier(static_cast<size_t>(sub_src.size()), 0);
  for (int g : over)
    carrier[static_cast<size_t>(sub_src.index_of(sigma.source().id_of(g)))] =
        sub_tgt.index_of(tgt.id_of(sigma.carrier(g)));
  return SubdivisionMap(std::move(sub_src), std::move(sub_tgt), std::move(carrier));
}

int excess(const SubdivisionMap& sigma, int source_face) {
  if (source_face <= 0 || source_face >= sigma.source().size())
    throw std::invalid_argument("empty-face: excess is defined for nonempty source faces");
  return sigma.target().dim(sigma.carrier(source_face)) - sigma.source().dim(source_face);
}

LocalHVector local_h_short(const SubdivisionMap& sigma) {
  const int d = require_cube_target(sigma, "the short cubical local h-polynomial");
  const FaceComplex& tgt = sigma.target();
  Polynomial total;
  for (int f = 1; f < tgt.size(); ++f) {
    Polynomial h = short_restriction_sum(sigma, f);
    total = (d - tgt.dim(f)) % 2 == 0 ? total + h : total - h;
  }
  return {total, d, LocalKind::short_cubical};
}

LocalHVector local_h_short_via_excess(const SubdivisionMap& sigma) {
  const int d = require_cube_target(sigma, "the short cubical local h-polynomial");
  const FaceComplex& src = sigma.source();
  Polynomial total;
  for (int g = 1; g < src.size(); ++g) {
    const int e = excess(sigma, g);
    if (e < 0)
      throw std::invalid_argument("dimension-inequality: source face '" + src.id_of(g) +
                                  "' has negative excess");
    total = total + Polynomial::monomial(d - e, minus_two_power(src.dim(g))) *
                        power(Polynomial::of({-1, 1}), e);
  }
  if (d % 2 != 0) total = -total;
  return {total, d, LocalKind::short_cubical};
}

LocalHVector local_h_long(const SubdivisionMap& sigma) {
  const int d = require_cube_target(sigma, "the long cubical local h-polynomial");
  const FaceComplex& tgt = sigma.target();
  Polynomial total;
  for (int f = 1; f < tgt.size(); ++f) {
    const int fd = tgt.dim(f);
    Polynomial rhs = Polynomial(Coeff(1) << fd) + Polynomial::x() * short_restriction_sum(sigma, f) +
                     Polynomial::monomial(fd + 2, minus_two_power(fd) * restriction_euler(sigma, f));
    Polynomial hc = exact_div(rhs, Polynomial::of({1, 1}));
    total = (d - fd) % 2 == 0 ? total + hc : total - hc;
  }
  if (d >= 1 && (total.coeff(0) != 0 || total.coeff(d + 1) != 0))
    throw std::logic_error(
        "internal-inconsistency: the long cubical local h-polynomial must vanish in degrees 0 "
        "and d + 1");
  return {total, d, LocalKind::long_cubical};
}

bool short_long_relation_check(const SubdivisionMap& sigma) {
  const int d = require_cube_target(sigma, "the short/long relation");
  if (d < 1)
    throw std::invalid_argument("parameter-out-of-range: the short/long relation needs d >= 1");
  return Polynomial::x() * local_h_short(sigma).poly ==
         Polynomial::of({1, 1}) * local_h_long(sigma).poly;
}

Polynomial vertex_contribution(const SubdivisionMap& sigma, int source_vertex) {
  const FaceComplex& src = sigma.source();
  if (source_vertex <= 0 || source_vertex >= src.size() || src.dim(source_vertex) != 0)
    throw std::invalid_argument("not-a-vertex: contributions are defined for source vertices");
  const int d = require_cube_target(sigma, "the vertex contribution");
  const FaceComplex& tgt = sigma.target();
  Polynomial total;
  for (int f : tgt.poset().filter(sigma.carrier(source_vertex))) {
    FaceComplex rest = src.induced_ideal(sigma.faces_over(f));
    FaceComplex lk = rest.link(rest.index_of(src.id_of(source_vertex)));
    Polynomial h = h_simplicial(lk, tgt.dim(f)).poly;
    total = (d - tgt.dim(f)) % 2 == 0 ? total + h : total - h;
  }
  return total;
}

bool is_locally_quasi_geometric(const SubdivisionMap& sigma) {
  const FaceComplex& src = sigma.source();
  const FaceComplex& tgt = sigma.target();
  for (int g = 1; g < src.size(); ++g) {
    const int gd = src.dim(g);
    if (gd < 1) continue;  // no target face has dimension below 0
    std::vector<int> gedges;
    for (int e : src.poset().ideal(g))
      if (e != src.empty_index() && src.dim(e) == 1) gedges.push_back(e);
    for (int v : src.vertices_below(g)) {
      std::vector<int> through;
      for (int e : gedges)
        if (src.poset().less_equal(v, e)) through.push_back(sigma.carrier(e));
      for (int f = 1; f < tgt.size(); ++f) {
        if (tgt.dim(f) >= gd) continue;
        bool all_in = true;
        for (int c : through)
          if (!tgt.poset().less_equal(c, f)) {
            all_in = false;
            break;
          }
        // The triple must live inside one restriction, i.e. f and the
        // carrier of g must lie in a common target face.
        if (all_in && upper_bounded(tgt.poset(), f, sigma.carrier(g))) return false;
      }
    }
  }
  return true;
}

bool is_quasi_geometric(const SubdivisionMap& sigma) {
  const FaceComplex& src = sigma.source();
  const FaceComplex& tgt = sigma.target();
  for (int g = 1; g < src.size(); ++g) {
    const int gd = src.dim(g);
    if (gd < 1) continue;
    const std::vector<int> verts = src.vertices_below(g);
    for (int f = 1; f < tgt.size(); ++f) {
      if (tgt.dim(f) >= gd) continue;
      bool all_in = true;
      for (int v : verts)
        if (!tgt.poset().less_equal(sigma.carrier(v), f)) {
          all_in = false;
          break;
        }
      if (all_in && upper_bounded(tgt.poset(), f, sigma.carrier(g))) return false;
    }
  }
  return true;
}

SubdivisionMap product_subdivision(const SubdivisionMap& a, const SubdivisionMap& b) {
  std::vector<std::vector<int>> source_pairs, target_pairs;
  FaceComplex source = FaceComplex::product(a.source(), b.source(), source_pairs);
  FaceComplex target = FaceComplex::product(a.target(), b.target(), target_pairs);
  std::vector<int> carrier(static_cast<size_t>(source.size()), 0);
  for (int i = 1; i < a.source().size(); ++i)
    for (int j = 1; j < b.source().size(); ++j)
      carrier[static_cast<size_t>(source_pairs[static_cast<size_t>(i)][static_cast<size_t>(j)])] =
          target_pairs[static_cast<size_t>(a.carrier(i))][static_cast<size_t>(b.carrier(j))];
  return SubdivisionMap(std::move(source), std::move(target), std::move(carrier));
}

LocalityDecomposition locality_decompose_short(const SubdivisionMap& sigma) {
  const FaceComplex& tgt = sigma.target();
  if (!tgt.pure()) throw std::domain_error("not-pure: locality needs a pure target complex");
  const int d = tgt.dimension() < 0 ? 0 : tgt.dimension();
  LocalityDecomposition out;
  out.lhs = h_short_cubical(sigma.source(), d);
  Polynomial rhs;
  for (int f = 1; f < tgt.size(); ++f) {
    Polynomial local = local_h_short(restriction(sigma, f)).poly;
    Polynomial link_h = h_simplicial(tgt.link(f), d - tgt.dim(f)).poly;
    rhs = rhs + local * link_h;
    out.terms.push_back({f, local, link_h});
  }
  out.rhs = {rhs, d};
  if (out.lhs.poly != rhs)
    throw std::logic_error("identity-violated: short cubical locality: " +
                           out.lhs.poly.to_string() + " vs " + rhs.to_string());
  return out;
}

LocalityDecomposition locality_decompose_long(const SubdivisionMap& sigma) {
  const FaceComplex& tgt = sigma.target();
  if (!tgt.pure()) throw std::domain_error("not-pure: locality needs a pure target complex");
  const int d = tgt.dimension() < 0 ? 0 : tgt.dimension();
  LocalityDecomposition out;
  out.lhs = h_long_cubical(sigma.source());
  Polynomial rhs = h_long_cubical(tgt).poly;
  for (int f = 1; f < tgt.size(); ++f) {
    if (tgt.dim(f) < 1) continue;
    Polynomial local = local_h_long(restriction(sigma, f)).poly;
    Polynomial link_h = h_simplicial(tgt.link(f), d - tgt.dim(f)).poly;
    rhs = rhs + local * link_h;
    out.terms.push_back({f, local, link_h});
  }
  out.rhs = {rhs, d};
  if (out.lhs.poly != rhs)
    throw std::logic_error("identity-violated: long cubical locality: " +
                           out.lhs.poly.to_string() + " vs " + rhs.to_string());
  return out;
}

HVector cbs_closed_form(const FaceComplex& k, int t) {
  if (t < 1)
    throw std::invalid_argument(
        "parameter-out-of-range: the barycentric parameter must be at least 1");
  if (!k.pure()) throw std::domain_error("not-pure: the closed form needs a pure complex");
  const int d = k.dimension() < 0 ? 0 : k.dimension();
  const Polynomial num = Polynomial::of({t, t + 2});      // (t+2)x + t
  const Polynomial den = Polynomial::of({t + 2, t});      // tx + t + 2
  Polynomial scaled = rational_substitute(h_short_cubical(k).poly, num, den, d);
  const Coeff two_pow = Coeff(1) << d;
  std::vector<Coeff> coeffs = scaled.coeffs();
  for (auto& c : coeffs) {
    if (c % two_pow != 0)
      throw std::domain_error("nonintegral-result: the closed form did not clear 2^d");
    c /= two_pow;
  }
  return {Polynomial(std::move(coeffs)), d};
}

}  // namespace cubal
