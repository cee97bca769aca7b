#include "cubal/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cubal {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::string> cube_codes(int d) {
  std::vector<std::string> codes{""};
  for (int i = 0; i < d; ++i) {
    std::vector<std::string> next;
    next.reserve(codes.size() * 3);
    for (const auto& c : codes)
      for (char ch : {'*', '0', '1'}) next.push_back(c + ch);
    codes = std::move(next);
  }
  std::sort(codes.begin(), codes.end());
  return codes;
}

int code_dim(const std::string& code) {
  return static_cast<int>(std::count(code.begin(), code.end(), '*'));
}

std::string join_vertices(std::vector<std::string> vs) {
  std::sort(vs.begin(), vs.end());
  std::string id;
  for (const auto& v : vs) {
    if (!id.empty()) id += '+';
    id += v;
  }
  return id;
}

/** Face of a generated cube: id and code coincide, covers replace one '*'. */
FaceSpec cube_face_spec(const std::string& code) {
  FaceSpec f;
  f.id = code;
  f.dim = code_dim(code);
  f.code = code;
  for (size_t i = 0; i < code.size(); ++i) {
    if (code[i] != '*') continue;
    for (char ch : {'0', '1'}) {
      std::string sub = code;
      sub[i] = ch;
      f.covers.push_back(std::move(sub));
    }
  }
  return f;
}

}  // namespace

std::string to_string(ComplexKind kind) {
  return kind == ComplexKind::cubical ? "cubical" : "simplicial";
}

ComplexKind complex_kind_from_string(const std::string& s) {
  if (s == "cubical") return ComplexKind::cubical;
  if (s == "simplicial") return ComplexKind::simplicial;
  throw std::invalid_argument("kind-mismatch: unknown complex kind '" + s + "'");
}

FaceComplex FaceComplex::from_faces(ComplexKind kind, const std::vector<FaceSpec>& faces) {
  FaceComplex k;
  k.kind_ = kind;
  std::vector<std::string> ids{""};
  std::vector<std::pair<std::string, std::string>> covers;
  std::map<std::string, int> dim_of;
  for (const auto& f : faces) {
    if (f.id.empty())
      throw std::invalid_argument("malformed-complex: the empty id is reserved for the empty face");
    if (f.dim < 0)
      throw std::invalid_argument("malformed-complex: face '" + f.id + "' has negative dimension");
    if (!dim_of.emplace(f.id, f.dim).second)
      throw std::invalid_argument("malformed-complex: duplicate face id '" + f.id + "'");
    ids.push_back(f.id);
  }
  for (const auto& f : faces) {
    if (f.dim == 0) {
      if (!f.covers.empty())
        throw std::invalid_argument("malformed-complex: vertex '" + f.id +
                                    "' lists covered faces (the empty face is implicit)");
      covers.emplace_back("", f.id);
      continue;
    }
    if (f.covers.empty())
      throw std::invalid_argument("malformed-complex: face '" + f.id +
                                  "' of dimension >= 1 lists no covered faces");
    for (const auto& c : f.covers) {
      auto it = dim_of.find(c);
      if (it == dim_of.end())
        throw std::invalid_argument("malformed-complex: face '" + f.id +
                                    "' covers unknown id '" + c + "'");
      if (it->second != f.dim - 1)
        throw std::invalid_argument("malformed-complex: face '" + f.id + "' (dim " +
                                    std::to_string(f.dim) + ") covers '" + c + "' (dim " +
                                    std::to_string(it->second) + ")");
      covers.emplace_back(c, f.id);
    }
  }
  k.poset_ = Poset::from_covers(std::move(ids), covers);
  k.dims_.assign(static_cast<size_t>(k.poset_.size()), -1);
  k.codes_.assign(static_cast<size_t>(k.poset_.size()), std::nullopt);
  for (const auto& f : faces) {
    int idx = k.poset_.index_of(f.id);
    k.dims_[static_cast<size_t>(idx)] = f.dim;
    k.codes_[static_cast<size_t>(idx)] = f.code;
  }
  return k;
}

FaceComplex FaceComplex::standard_cube(int d) {
  if (d < 0) throw std::invalid_argument("parameter-out-of-range: cube dimension " + std::to_string(d));
  std::vector<FaceSpec> faces;
  for (const auto& code : cube_codes(d)) {
    FaceSpec f = cube_face_spec(code);
    if (code.empty()) f.id = "pt";  // a 0-cube's code is the empty string
    faces.push_back(std::move(f));
  }
  return from_faces(ComplexKind::cubical, faces);
}

FaceComplex FaceComplex::boundary_of_cube(int d) {
  if (d < 1)
    throw std::invalid_argument("parameter-out-of-range: boundary_of_cube needs d >= 1");
  std::vector<FaceSpec> faces;
  const std::string top(static_cast<size_t>(d), '*');
  for (const auto& code : cube_codes(d)) {
    if (code == top) continue;
    faces.push_back(cube_face_spec(code));
  }
  return from_faces(ComplexKind::cubical, faces);
}

FaceComplex FaceComplex::simplex(int n_vertices) {
  if (n_vertices < 1)
    throw std::invalid_argument("parameter-out-of-range: simplex needs >= 1 vertex");
  std::vector<std::string> vs;
  for (int i = 1; i <= n_vertices; ++i) vs.push_back("v" + std::to_string(i));
  return from_facet_vertex_sets({vs});
}

FaceComplex FaceComplex::boundary_of_simplex(int n_vertices) {
  if (n_vertices < 2)
    throw std::invalid_argument("parameter-out-of-range: boundary_of_simplex needs >= 2 vertices");
  std::vector<std::vector<std::string>> facets;
  for (int skip = 1; skip <= n_vertices; ++skip) {
    std::vector<std::string> vs;
    for (int i = 1; i <= n_vertices; ++i)
      if (i != skip) vs.push_back("v" + std::to_string(i));
    facets.push_back(std::move(vs));
  }
  return from_facet_vertex_sets(facets);
}

FaceComplex FaceComplex::from_facet_vertex_sets(
    const std::vector<std::vector<std::string>>& facets) {
  std::set<std::vector<std::string>> all;
  for (const auto& facet : facets) {
    std::vector<std::string> vs = facet;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (vs.size() != facet.size())
      throw std::invalid_argument("malformed-complex: facet repeats a vertex");
    for (const auto& v : vs) {
      if (v.empty() || v.find('+') != std::string::npos)
        throw std::invalid_argument("malformed-complex: vertex label '" + v +
                                    "' is empty or contains '+'");
    }
    // Downward closure: all nonempty subsets.
    const size_t n = vs.size();
    for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
      std::vector<std::string> sub;
      for (size_t b = 0; b < n; ++b)
        if (mask & (size_t(1) << b)) sub.push_back(vs[b]);
      all.insert(std::move(sub));
    }
  }
  std::vector<FaceSpec> faces;
  for (const auto& vs : all) {
    FaceSpec f;
    f.id = join_vertices(vs);
    f.dim = static_cast<int>(vs.size()) - 1;
    if (vs.size() > 1) {
      for (size_t skip = 0; skip < vs.size(); ++skip) {
        std::vector<std::string> sub;
        for (size_t i = 0; i < vs.size(); ++i)
          if (i != skip) sub.push_back(vs[i]);
        f.covers.push_back(join_vertices(sub));
      }
    }
    faces.push_back(std::move(f));
  }
  return from_faces(ComplexKind::simplicial, faces);
}

FaceComplex FaceComplex::product(const FaceComplex& a, const FaceComplex& b) {
  std::vector<std::vector<int>> pairing;
  return product(a, b, pairing);
}

FaceComplex FaceComplex::product(const FaceComplex& a, const FaceComplex& b,
                                 std::vector<std::vector<int>>& pairing) {
  auto fa = a.nonempty_faces();
  auto fb = b.nonempty_faces();
  const bool coded = std::all_of(fa.begin(), fa.end(),
                                 [&](int f) { return a.cube_code(f).has_value(); }) &&
                     std::all_of(fb.begin(), fb.end(),
                                 [&](int f) { return b.cube_code(f).has_value(); });
  auto pair_id = [&](int i, int j) {
    if (coded) {
      std::string code = *a.cube_code(i) + *b.cube_code(j);
      return code.empty() ? std::string("pt") : code;  // point x point
    }
    return "(" + a.id_of(i) + "|" + b.id_of(j) + ")";
  };
  std::vector<FaceSpec> faces;
  for (int i : fa)
    for (int j : fb) {
      FaceSpec f;
      f.id = pair_id(i, j);
      f.dim = a.dim(i) + b.dim(j);
      if (coded) f.code = *a.cube_code(i) + *b.cube_code(j);
      if (f.dim >= 1) {
        for (int i2 : a.poset().lower_covers(i))
          if (i2 != a.empty_index()) f.covers.push_back(pair_id(i2, j));
        for (int j2 : b.poset().lower_covers(j))
          if (j2 != b.empty_index()) f.covers.push_back(pair_id(i, j2));
      }
      faces.push_back(std::move(f));
    }
  FaceComplex prod = from_faces(ComplexKind::cubical, faces);
  pairing.assign(static_cast<size_t>(a.size()),
                 std::vector<int>(static_cast<size_t>(b.size()), -1));
  pairing[0][0] = prod.empty_index();
  for (int i : fa)
    for (int j : fb)
      pairing[static_cast<size_t>(i)][static_cast<size_t>(j)] = prod.index_of(pair_id(i, j));
  return prod;
}

int FaceComplex::dimension() const {
  int d = -1;
  for (int f = 1; f < size(); ++f) d = std::max(d, dim(f));
  return d;
}

bool FaceComplex::pure() const {
  const int d = dimension();
  for (int f : facets())
    if (dim(f) != d) return false;
  return true;
}

std::vector<int> FaceComplex::nonempty_faces() const {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(size()) - 1);
  for (int f = 1; f < size(); ++f) out.push_back(f);
  return out;
}

std::vector<int> FaceComplex::faces_of_dim(int k) const {
  std::vector<int> out;
  for (int f = 0; f < size(); ++f)
    if (dim(f) == k) out.push_back(f);
  return out;
}

std::vector<int> FaceComplex::facets() const {
  std::vector<int> out;
  for (int f : poset_.maximal_elements())
    if (f != empty_index()) out.push_back(f);
  return out;
}

std::vector<int> FaceComplex::vertices_below(int face) const {
  std::vector<int> out;
  for (int v : poset_.ideal(face))
    if (dim(v) == 0) out.push_back(v);
  return out;
}

std::vector<long long> FaceComplex::f_vector() const {
  const int d = dimension();
  std::vector<long long> f(static_cast<size_t>(std::max(d + 1, 0)), 0);
  for (int face = 1; face < size(); ++face) ++f[static_cast<size_t>(dim(face))];
  return f;
}

Polynomial FaceComplex::f_polynomial() const {
  std::vector<Coeff> c(static_cast<size_t>(std::max(dimension() + 1, 0)), 0);
  for (int face = 1; face < size(); ++face) c[static_cast<size_t>(dim(face))] += 1;
  return Polynomial(std::move(c));
}

int FaceComplex::face_by_code(const std::string& code) const {
  for (int f = 0; f < size(); ++f)
    if (codes_[static_cast<size_t>(f)] && *codes_[static_cast<size_t>(f)] == code) return f;
  throw std::invalid_argument("face-not-found: no face with code '" + code + "'");
}

FaceComplex FaceComplex::link(int face) const {
  if (face == empty_index())
    throw std::invalid_argument("empty-face: links are taken at nonempty faces");
  std::vector<int> above = poset_.filter(face);
  std::set<int> in_link(above.begin(), above.end());
  std::vector<FaceSpec> faces;
  for (int g : above) {
    if (g == face) continue;
    FaceSpec f;
    f.id = id_of(g);
    f.dim = dim(g) - dim(face) - 1;
    if (f.dim >= 1)
      for (int c : poset_.lower_covers(g))
        if (c != face && in_link.count(c)) f.covers.push_back(id_of(c));
    faces.push_back(std::move(f));
  }
  return from_faces(ComplexKind::simplicial, faces);
}

std::optional<int> FaceComplex::top_cube() const {
  auto top = poset_.maximum();
  if (!top || *top == empty_index()) return std::nullopt;
  return top;
}

std::optional<int> FaceComplex::meet(int f, int g) const {
  std::vector<int> common;
  for (int u = 0; u < size(); ++u)
    if (poset_.less_equal(u, f) && poset_.less_equal(u, g)) common.push_back(u);
  std::vector<int> maximal;
  for (int u : common) {
    bool is_max = true;
    for (int w : common)
      if (w != u && poset_.less_equal(u, w)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(u);
  }
  if (maximal.size() == 1) return maximal[0];
  return std::nullopt;
}

FaceComplex::BoundaryInterior FaceComplex::boundary_interior() const {
  if (dimension() < 0) throw std::invalid_argument("empty-complex: no nonempty faces");
  if (!pure())
    throw std::domain_error("not-pure: boundary/interior requires a pure complex");
  const int d = dimension();
  std::vector<int> facet_list = faces_of_dim(d);
  std::vector<int> seeds;
  for (int r : faces_of_dim(d - 1)) {
    int count = 0;
    for (int f : facet_list)
      if (poset_.less_equal(r, f)) ++count;
    if (count == 1) seeds.push_back(r);
  }
  std::vector<char> in_boundary(static_cast<size_t>(size()), 0);
  for (int s : seeds)
    for (int u : poset_.ideal(s)) in_boundary[static_cast<size_t>(u)] = 1;
  BoundaryInterior out;
  out.boundary_empty = seeds.empty();
  for (int f = 0; f < size(); ++f)
    (in_boundary[static_cast<size_t>(f)] ? out.boundary : out.interior).push_back(f);
  return out;
}

FaceComplex FaceComplex::induced_ideal(const std::vector<int>& faces) const {
  std::set<int> keep(faces.begin(), faces.end());
  keep.erase(empty_index());
  std::vector<FaceSpec> specs;
  for (int f = 1; f < size(); ++f) {
    if (!keep.count(f)) continue;
    FaceSpec spec;
    spec.id = id_of(f);
    spec.dim = dim(f);
    spec.code = cube_code(f);
    if (spec.dim >= 1)
      for (int c : poset_.lower_covers(f)) {
        if (!keep.count(c))
          throw std::invalid_argument("not-an-ideal: face '" + id_of(f) +
                                      "' kept without its subface '" + id_of(c) + "'");
        spec.covers.push_back(id_of(c));
      }
    specs.push_back(std::move(spec));
  }
  return from_faces(kind_, specs);
}

Poset FaceComplex::nonempty_face_poset() const {
  return poset_.induced(nonempty_faces());
}

Poset FaceComplex::truncated_face_poset(int m) const {
  std::vector<int> keep;
  for (int f = 0; f < size(); ++f)
    if (dim(f) >= m) keep.push_back(f);
  return poset_.induced(keep);
}

ValidationReport FaceComplex::validate() const {
  ValidationReport report;
  report.notes.push_back(
      "topological ball/sphere/manifold properties are not decidable from the face poset; "
      "this validation checks combinatorial surrogates only");

  // Dimension labels must match poset rank (empty face at rank 0).
  for (int f = 0; f < size(); ++f) {
    try {
      int r = poset_.rank(f);
      if (r != dim(f) + 1)
        report.issues.push_back({"dim-mismatch", id_of(f),
                                 "poset rank " + std::to_string(r) + " but dimension " +
                                     std::to_string(dim(f))});
    } catch (const std::domain_error& e) {
      report.issues.push_back({"not-graded", id_of(f), e.what()});
    }
  }
  if (!report.issues.empty()) return report;  // structure too broken for interval checks

  if (kind_ == ComplexKind::cubical) {
    // Every lower interval must be a cube face lattice: the dimension profile
    // counts 2^(k-i) * C(k, i) faces per dimension, and all upper intervals
    // inside it are Boolean.
    for (int f = 1; f < size(); ++f) {
      const int k = dim(f);
      std::vector<long long> byd(static_cast<size_t>(k + 1), 0);
      std::vector<int> below = poset_.ideal(f);
      for (int g : below)
        if (g != empty_index()) ++byd[static_cast<size_t>(dim(g))];
      for (int i = 0; i <= k; ++i) {
        long long expect = (1LL << (k - i)) * binomial(k, i);
        if (byd[static_cast<size_t>(i)] != expect) {
          report.issues.push_back({"cube-interval", id_of(f),
                                   "has " + std::to_string(byd[static_cast<size_t>(i)]) +
                                       " faces of dimension " + std::to_string(i) +
                                       ", a " + std::to_string(k) + "-cube has " +
                                       std::to_string(expect)});
        }
      }
      for (int g : below) {
        if (g == empty_index() || g == f) continue;
        if (!poset_.is_boolean_interval(g, f))
          report.issues.push_back({"upper-interval", id_of(g) + " .. " + id_of(f),
                                   "interval above a face of a cube must be Boolean"});
      }
    }
    for (int f = 1; f < size(); ++f) {
      if (!codes_[static_cast<size_t>(f)]) continue;
      if (code_dim(*codes_[static_cast<size_t>(f)]) != dim(f))
        report.issues.push_back({"code-mismatch", id_of(f),
                                 "code '" + *codes_[static_cast<size_t>(f)] +
                                     "' does not match dimension " + std::to_string(dim(f))});
    }
  } else {
    // Simplicial: every lower interval including the empty face is Boolean.
    for (int f = 1; f < size(); ++f) {
      if (!poset_.is_boolean_interval(empty_index(), f))
        report.issues.push_back(
            {"simplex-interval", id_of(f), "lower interval is not a Boolean lattice"});
    }
  }

  // Meet semilattice: any two faces intersect in a single face.
  for (int f = 1; f < size(); ++f)
    for (int g = f + 1; g < size(); ++g) {
      if (!meet(f, g))
        report.issues.push_back({"meet-failure", id_of(f) + " , " + id_of(g),
                                 "common faces have no unique maximum"});
    }
  return report;
}

}  // namespace cubal
