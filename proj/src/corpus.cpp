#include "cubal/corpus.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace cubal {

namespace {

// ---------------------------------------------------------------------------
// Cube-code helpers.  Codes are strings over {0,1,*}; '*' marks a free axis.
// ---------------------------------------------------------------------------

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

std::vector<std::string> code_lower_covers(const std::string& code) {
  std::vector<std::string> out;
  for (size_t i = 0; i < code.size(); ++i) {
    if (code[i] != '*') continue;
    for (char ch : {'0', '1'}) {
      std::string sub = code;
      sub[i] = ch;
      out.push_back(std::move(sub));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Copying faces of an existing complex into FaceSpec form.
// ---------------------------------------------------------------------------

FaceSpec spec_of(const FaceComplex& k, int face) {
  FaceSpec s;
  s.id = k.id_of(face);
  s.dim = k.dim(face);
  s.code = k.cube_code(face);
  for (int c : k.poset().lower_covers(face))
    if (c != k.empty_index()) s.covers.push_back(k.id_of(c));
  return s;
}

std::vector<FaceSpec> specs_of(const FaceComplex& k) {
  std::vector<FaceSpec> out;
  for (int f : k.nonempty_faces()) out.push_back(spec_of(k, f));
  return out;
}

// ---------------------------------------------------------------------------
// Combinatorial cube frames.  A frame assigns every vertex below a face a
// bitmask over the face's parallel-edge classes (its axes), so that faces can
// be addressed by {0,1,*} codes and facets glued coordinate by coordinate.
// ---------------------------------------------------------------------------

struct Frame {
  int axes = 0;
  std::map<int, unsigned> mask_of;    // vertex face index -> coordinate mask
  std::map<unsigned, int> vertex_of;  // coordinate mask -> vertex face index
};

[[noreturn]] void not_a_cube(const FaceComplex& k, int face) {
  throw std::invalid_argument("not-a-cube: face '" + k.id_of(face) +
                              "' is not combinatorially a cube");
}

Frame frame_of(const FaceComplex& k, int face) {
  Frame fr;
  const int dim = k.dim(face);
  const std::vector<int> verts = k.vertices_below(face);
  if (verts.size() != (static_cast<size_t>(1) << dim)) not_a_cube(k, face);
  if (dim == 0) {
    fr.mask_of[verts[0]] = 0;
    fr.vertex_of[0] = verts[0];
    return fr;
  }

  std::vector<int> edges;
  for (int e : k.faces_of_dim(1))
    if (k.poset().less_equal(e, face)) edges.push_back(e);
  std::map<int, int> pos;
  for (size_t i = 0; i < edges.size(); ++i) pos[edges[i]] = static_cast<int>(i);

  // Parallel-edge classes: opposite edges of every square below the face are
  // parallel, and the classes of the transitive closure are the axes.
  std::vector<int> parent(edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  };
  for (int s : k.faces_of_dim(2)) {
    if (!k.poset().less_equal(s, face)) continue;
    const std::vector<int> sides = k.poset().lower_covers(s);
    if (sides.size() != 4) not_a_cube(k, face);
    for (size_t i = 0; i < sides.size(); ++i) {
      const std::vector<int> vi = k.vertices_below(sides[i]);
      for (size_t j = i + 1; j < sides.size(); ++j) {
        const std::vector<int> vj = k.vertices_below(sides[j]);
        bool disjoint = true;
        for (int a : vi)
          for (int b : vj)
            if (a == b) disjoint = false;
        if (disjoint) parent[static_cast<size_t>(find(pos.at(sides[i])))] = find(pos.at(sides[j]));
      }
    }
  }
  std::map<int, int> axis_of_root;
  for (size_t i = 0; i < edges.size(); ++i) {
    const int root = find(static_cast<int>(i));
    if (axis_of_root.find(root) == axis_of_root.end())
      axis_of_root[root] = static_cast<int>(axis_of_root.size());
  }
  if (static_cast<int>(axis_of_root.size()) != dim) not_a_cube(k, face);

  std::map<int, std::vector<std::pair<int, int>>> adj;  // vertex -> (axis, neighbor)
  for (size_t i = 0; i < edges.size(); ++i) {
    const std::vector<int> ends = k.vertices_below(edges[i]);
    if (ends.size() != 2) not_a_cube(k, face);
    const int axis = axis_of_root.at(find(static_cast<int>(i)));
    adj[ends[0]].emplace_back(axis, ends[1]);
    adj[ends[1]].emplace_back(axis, ends[0]);
  }

  fr.axes = dim;
  std::vector<int> queue{verts[0]};
  fr.mask_of[verts[0]] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    const unsigned m = fr.mask_of.at(v);
    for (const auto& [axis, w] : adj[v]) {
      const unsigned mw = m ^ (1u << axis);
      auto it = fr.mask_of.find(w);
      if (it == fr.mask_of.end()) {
        fr.mask_of[w] = mw;
        queue.push_back(w);
      } else if (it->second != mw) {
        not_a_cube(k, face);
      }
    }
  }
  if (fr.mask_of.size() != verts.size()) not_a_cube(k, face);
  for (const auto& [v, m] : fr.mask_of)
    if (!fr.vertex_of.emplace(m, v).second) not_a_cube(k, face);
  return fr;
}

/** Code of a face lying below the frame's host face, in frame coordinates. */
std::string face_code_in(const FaceComplex& k, const Frame& fr, int sub) {
  const std::vector<int> vs = k.vertices_below(sub);
  const unsigned base = fr.mask_of.at(vs[0]);
  unsigned varying = 0;
  for (int v : vs) varying |= base ^ fr.mask_of.at(v);
  std::string code(static_cast<size_t>(fr.axes), '0');
  int stars = 0;
  for (int a = 0; a < fr.axes; ++a) {
    if (varying & (1u << a)) {
      code[static_cast<size_t>(a)] = '*';
      ++stars;
    } else if (base & (1u << a)) {
      code[static_cast<size_t>(a)] = '1';
    }
  }
  if (stars != k.dim(sub) || vs.size() != (static_cast<size_t>(1) << stars)) not_a_cube(k, sub);
  return code;
}

}  // namespace

// ---------------------------------------------------------------------------
// Parametric generators.
// ---------------------------------------------------------------------------

SubdivisionMap gen_segment(int t) {
  if (t < 0)
    throw std::invalid_argument("parameter-out-of-range: gen_segment needs t >= 0, got " +
                                std::to_string(t));
  std::vector<FaceSpec> faces;
  auto v = [](int i) { return "s" + std::to_string(i); };
  for (int i = 0; i <= t + 1; ++i) {
    FaceSpec s;
    s.id = v(i);
    s.dim = 0;
    faces.push_back(std::move(s));
  }
  for (int i = 0; i <= t; ++i) {
    FaceSpec s;
    s.id = "e" + std::to_string(i);
    s.dim = 1;
    s.covers = {v(i), v(i + 1)};
    faces.push_back(std::move(s));
  }
  std::map<std::string, std::string> carrier;
  carrier[v(0)] = "0";
  carrier[v(t + 1)] = "1";
  for (int i = 1; i <= t; ++i) carrier[v(i)] = "*";
  for (int i = 0; i <= t; ++i) carrier["e" + std::to_string(i)] = "*";
  return SubdivisionMap(FaceComplex::from_faces(ComplexKind::cubical, faces),
                        FaceComplex::standard_cube(1), carrier);
}

SubdivisionMap gen_schlegel(int d) {
  if (d < 1)
    throw std::invalid_argument("parameter-out-of-range: gen_schlegel needs d >= 1, got " +
                                std::to_string(d));
  const std::string top(static_cast<size_t>(d) + 1, '*');
  std::string removed(static_cast<size_t>(d), '*');
  removed += '0';
  std::vector<FaceSpec> faces;
  std::map<std::string, std::string> carrier;
  const std::string target_top(static_cast<size_t>(d), '*');
  for (const auto& code : cube_codes(d + 1)) {
    if (code == top || code == removed) continue;
    FaceSpec s;
    s.id = code;
    s.dim = code_dim(code);
    s.covers = code_lower_covers(code);
    faces.push_back(std::move(s));
    carrier[code] = code.back() == '0' ? code.substr(0, static_cast<size_t>(d)) : target_top;
  }
  return SubdivisionMap(FaceComplex::from_faces(ComplexKind::cubical, faces),
                        FaceComplex::standard_cube(d), carrier);
}

namespace {

/**
 * Two d-cubes glued along a facet and mapped onto a single d-cube: the far
 * cube is pushed through the glued facet, which lands in the interior.  The
 * far copy of a code c is c+"@2" and the prism face spanning c is c+"@s".
 */
SubdivisionMap gen_pushed(int d) {
  const FaceComplex cube = FaceComplex::standard_cube(d);
  std::vector<FaceSpec> faces = specs_of(cube);
  const std::string shared = std::string(static_cast<size_t>(d) - 1, '*') + "1";
  const std::string far_top(static_cast<size_t>(d) - 1, '*');
  for (const auto& c : cube_codes(d - 1)) {
    FaceSpec far;
    far.id = c + "@2";
    far.dim = code_dim(c);
    for (const auto& lc : code_lower_covers(c)) far.covers.push_back(lc + "@2");
    faces.push_back(std::move(far));
    FaceSpec span;
    span.id = c + "@s";
    span.dim = code_dim(c) + 1;
    span.covers.push_back(c + "@2");
    span.covers.push_back(c + "1");
    for (const auto& lc : code_lower_covers(c)) span.covers.push_back(lc + "@s");
    faces.push_back(std::move(span));
  }
  std::map<std::string, std::string> carrier;
  const std::string target_top(static_cast<size_t>(d), '*');
  for (const auto& c : cube_codes(d)) carrier[c] = c;
  carrier[shared] = target_top;
  for (const auto& c : cube_codes(d - 1)) {
    carrier[c + "@2"] = shared;
    carrier[c + "@s"] = c == far_top ? target_top : shared;
  }
  return SubdivisionMap(FaceComplex::from_faces(ComplexKind::cubical, faces),
                        FaceComplex::standard_cube(d), carrier);
}

}  // namespace

SubdivisionMap gen_pushed_cube() { return gen_pushed(3); }

SubdivisionMap gen_nongeometric_square() { return gen_pushed(2); }

SubdivisionMap gen_remark_square() {
  // Square with corners a, b, c, d; two extra vertices e, f on edge bc and two
  // extra vertices g, h on edge cd, cut into three quadrilaterals so that one
  // of them (cefg) touches edge bc in two vertices joined to it only through
  // edges carried by bc itself.
  std::vector<FaceSpec> faces;
  for (const char* v : {"a", "b", "c", "d", "e", "f", "g", "h"}) {
    FaceSpec s;
    s.id = v;
    s.dim = 0;
    faces.push_back(std::move(s));
  }
  auto edge = [&faces](const std::string& id, const std::string& u, const std::string& w) {
    FaceSpec s;
    s.id = id;
    s.dim = 1;
    s.covers = {u, w};
    faces.push_back(std::move(s));
  };
  edge("ab", "a", "b");
  edge("be", "b", "e");
  edge("ef", "e", "f");
  edge("fc", "f", "c");
  edge("cg", "c", "g");
  edge("gh", "g", "h");
  edge("hd", "h", "d");
  edge("da", "d", "a");
  edge("de", "d", "e");
  edge("eg", "e", "g");
  auto quad = [&faces](const std::string& id, std::vector<std::string> sides) {
    FaceSpec s;
    s.id = id;
    s.dim = 2;
    s.covers = std::move(sides);
    faces.push_back(std::move(s));
  };
  quad("abed", {"ab", "be", "de", "da"});
  quad("degh", {"de", "eg", "gh", "hd"});
  quad("cefg", {"ef", "fc", "cg", "eg"});
  std::map<std::string, std::string> carrier{
      {"a", "00"},   {"b", "10"},   {"c", "11"},   {"d", "01"},   {"e", "1*"},   {"f", "1*"},
      {"g", "*1"},   {"h", "*1"},   {"ab", "*0"},  {"be", "1*"},  {"ef", "1*"},  {"fc", "1*"},
      {"cg", "*1"},  {"gh", "*1"},  {"hd", "*1"},  {"da", "0*"},  {"de", "**"},  {"eg", "**"},
      {"abed", "**"}, {"degh", "**"}, {"cefg", "**"}};
  return SubdivisionMap(FaceComplex::from_faces(ComplexKind::cubical, faces),
                        FaceComplex::standard_cube(2), carrier);
}

SubdivisionMap gen_crossed_square() {
  // Square with corners a, b, c, d; the edge from b to c subdivided into the
  // path b, s, t1, t2, u, v, c and the edge from c to d into c, y, d.  The
  // quadrilateral bsuv has all four of its vertices on the first of those
  // edges but reaches them through the interior chords su and bv, so no cell
  // has a vertex both of whose incident cell edges are carried by a proper
  // face.  The chords cross every straight-line drawing, so the subdivision
  // has no geometric realization.
  std::vector<FaceSpec> faces;
  for (const char* v : {"a", "b", "c", "d", "s", "t1", "t2", "u", "v", "y",
                        "z0", "z1", "z2", "z3"}) {
    FaceSpec s;
    s.id = v;
    s.dim = 0;
    faces.push_back(std::move(s));
  }
  auto edge = [&faces](const std::string& id, const std::string& u, const std::string& w) {
    FaceSpec s;
    s.id = id;
    s.dim = 1;
    s.covers = {u, w};
    faces.push_back(std::move(s));
  };
  // Boundary: the subdivided edges b..c and c..d, and the untouched ab, da.
  edge("ab", "a", "b");
  edge("bs", "b", "s");
  edge("st1", "s", "t1");
  edge("t1t2", "t1", "t2");
  edge("t2u", "t2", "u");
  edge("uv", "u", "v");
  edge("vc", "v", "c");
  edge("cy", "c", "y");
  edge("yd", "y", "d");
  edge("da", "d", "a");
  // Interior chords and the ladder around the inner square z0 z1 z2 z3.
  edge("su", "s", "u");
  edge("bv", "b", "v");
  edge("by", "b", "y");
  edge("sz0", "s", "z0");
  edge("z0z1", "z0", "z1");
  edge("t1z1", "t1", "z1");
  edge("z1z2", "z1", "z2");
  edge("t2z2", "t2", "z2");
  edge("z2z3", "z2", "z3");
  edge("uz3", "u", "z3");
  edge("z0z3", "z0", "z3");
  auto quad = [&faces](const std::string& id, std::vector<std::string> sides) {
    FaceSpec s;
    s.id = id;
    s.dim = 2;
    s.covers = std::move(sides);
    faces.push_back(std::move(s));
  };
  quad("bsuv", {"bs", "su", "uv", "bv"});
  quad("st1z1z0", {"st1", "t1z1", "z0z1", "sz0"});
  quad("t1t2z2z1", {"t1t2", "t2z2", "z1z2", "t1z1"});
  quad("t2uz3z2", {"t2u", "uz3", "z2z3", "t2z2"});
  quad("sz0z3u", {"sz0", "z0z3", "uz3", "su"});
  quad("z0z1z2z3", {"z0z1", "z1z2", "z2z3", "z0z3"});
  quad("bvcy", {"bv", "vc", "cy", "by"});
  quad("byda", {"by", "yd", "da", "ab"});
  std::map<std::string, std::string> carrier{
      {"a", "00"},     {"b", "10"},      {"c", "11"},        {"d", "01"},
      {"s", "1*"},     {"t1", "1*"},     {"t2", "1*"},       {"u", "1*"},
      {"v", "1*"},     {"y", "*1"},      {"z0", "**"},       {"z1", "**"},
      {"z2", "**"},    {"z3", "**"},     {"ab", "*0"},       {"bs", "1*"},
      {"st1", "1*"},   {"t1t2", "1*"},   {"t2u", "1*"},      {"uv", "1*"},
      {"vc", "1*"},    {"cy", "*1"},     {"yd", "*1"},       {"da", "0*"},
      {"su", "**"},    {"bv", "**"},     {"by", "**"},       {"sz0", "**"},
      {"z0z1", "**"},  {"t1z1", "**"},   {"z1z2", "**"},     {"t2z2", "**"},
      {"z2z3", "**"},  {"uz3", "**"},    {"z0z3", "**"},     {"bsuv", "**"},
      {"st1z1z0", "**"}, {"t1t2z2z1", "**"}, {"t2uz3z2", "**"}, {"sz0z3u", "**"},
      {"z0z1z2z3", "**"}, {"bvcy", "**"}, {"byda", "**"}};
  return SubdivisionMap(FaceComplex::from_faces(ComplexKind::cubical, faces),
                        FaceComplex::standard_cube(2), carrier);
}

SubdivisionMap gen_grid(int d, const std::vector<int>& parts) {
  if (d < 1 || static_cast<int>(parts.size()) != d)
    throw std::invalid_argument(
        "parameter-out-of-range: gen_grid needs d >= 1 and one part count per axis");
  for (int p : parts)
    if (p < 1)
      throw std::invalid_argument("parameter-out-of-range: gen_grid needs positive part counts");
  SubdivisionMap acc = gen_segment(parts[0] - 1);
  for (int i = 1; i < d; ++i) acc = product_subdivision(acc, gen_segment(parts[static_cast<size_t>(i)] - 1));
  return acc;
}

SubdivisionMap gen_stellar(const FaceComplex& k, int facet) {
  if (k.kind() != ComplexKind::cubical)
    throw std::invalid_argument("kind-mismatch: gen_stellar needs a cubical complex");
  if (facet <= 0 || facet >= k.size())
    throw std::invalid_argument("not-a-facet: face index " + std::to_string(facet) +
                                " is out of range");
  if (!k.poset().upper_covers(facet).empty() || k.dim(facet) < 1)
    throw std::invalid_argument("not-a-facet: face '" + k.id_of(facet) +
                                "' must be maximal of dimension >= 1");
  const int d = k.dim(facet);
  const Frame fr = frame_of(k, facet);
  std::map<std::string, std::string> id_by_code;
  for (int f : k.poset().ideal(facet))
    if (f != k.empty_index()) id_by_code[face_code_in(k, fr, f)] = k.id_of(f);

  std::vector<FaceSpec> faces;
  std::map<std::string, std::string> carrier;
  for (int f : k.nonempty_faces()) {
    if (f == facet) continue;
    faces.push_back(spec_of(k, f));
    carrier[k.id_of(f)] = k.id_of(f);
  }
  const std::string top(static_cast<size_t>(d) + 1, '*');
  std::string removed(static_cast<size_t>(d), '*');
  removed += '0';
  for (const auto& code : cube_codes(d + 1)) {
    if (code == top || code == removed || code.back() == '0') continue;
    FaceSpec s;
    s.id = "sd:" + code;
    s.dim = code_dim(code);
    for (const auto& lc : code_lower_covers(code)) {
      if (lc.back() == '0')
        s.covers.push_back(id_by_code.at(lc.substr(0, static_cast<size_t>(d))));
      else
        s.covers.push_back("sd:" + lc);
    }
    carrier[s.id] = k.id_of(facet);
    faces.push_back(std::move(s));
  }
  return SubdivisionMap(FaceComplex::from_faces(k.kind(), faces), k, carrier);
}

namespace {

/** Cubical barycentric subdivision at t = 1: nonempty intervals [s, f]. */
SubdivisionMap cbs_intervals(const FaceComplex& k) {
  const Poset& p = k.poset();
  auto interval_id = [&k](int s, int f) { return "[" + k.id_of(s) + "|" + k.id_of(f) + "]"; };
  std::vector<FaceSpec> faces;
  std::map<std::string, std::string> carrier;
  for (int f : k.nonempty_faces()) {
    for (int s : p.ideal(f)) {
      if (s == k.empty_index()) continue;
      FaceSpec spec;
      spec.id = interval_id(s, f);
      spec.dim = k.dim(f) - k.dim(s);
      for (int s2 : p.upper_covers(s))
        if (p.less_equal(s2, f)) spec.covers.push_back(interval_id(s2, f));
      for (int f2 : p.lower_covers(f))
        if (p.less_equal(s, f2)) spec.covers.push_back(interval_id(s, f2));
      carrier[spec.id] = k.id_of(f);
      faces.push_back(std::move(spec));
    }
  }
  return SubdivisionMap(FaceComplex::from_faces(ComplexKind::cubical, faces), k, carrier);
}

/**
 * Cubical barycentric subdivision for general t: every face of dimension m
 * carries the (2t+1)^m cells interior to a (t+1)-fold grid on it, glued to
 * neighboring faces through shared facets.  Cells are addressed by one token
 * per axis of the owning face: an interior vertex position v1..vt or a
 * segment s0..st.
 */
SubdivisionMap cbs_glued(const FaceComplex& k, int t) {
  struct Token {
    char kind;  // 'v' or 's'
    int p;
  };
  auto cell_id = [&k](int g, const std::vector<Token>& pos) {
    std::string id = k.id_of(g) + ":";
    for (size_t i = 0; i < pos.size(); ++i) {
      if (i) id += '.';
      id += pos[i].kind;
      id += std::to_string(pos[i].p);
    }
    return id;
  };

  std::map<int, Frame> frames;
  for (int f : k.nonempty_faces()) frames.emplace(f, frame_of(k, f));

  // For every face g, axis and side: the facet h it drops to, with the axis
  // bijection and per-axis orientation between the two frames.
  struct Drop {
    int h = -1;
    std::vector<int> g_axis;         // g-axis corresponding to each h-axis
    std::vector<bool> reversed;      // h-axis runs against the g-axis
  };
  std::map<std::tuple<int, int, int>, Drop> drops;
  for (int g : k.nonempty_faces()) {
    const Frame& fg = frames.at(g);
    for (int h : k.poset().lower_covers(g)) {
      if (h == k.empty_index()) continue;
      const Frame& fh = frames.at(h);
      const std::vector<int> hv = k.vertices_below(h);
      const unsigned base = fg.mask_of.at(hv[0]);
      unsigned varying = 0;
      for (int v : hv) varying |= base ^ fg.mask_of.at(v);
      int drop_axis = -1;
      for (int a = 0; a < fg.axes; ++a) {
        if (varying & (1u << a)) continue;
        if (drop_axis != -1) not_a_cube(k, g);
        drop_axis = a;
      }
      if (drop_axis == -1) not_a_cube(k, g);
      const int side = (base >> drop_axis) & 1u;
      Drop d;
      d.h = h;
      d.g_axis.resize(static_cast<size_t>(fh.axes));
      d.reversed.resize(static_cast<size_t>(fh.axes));
      const unsigned g0 = fg.mask_of.at(fh.vertex_of.at(0));
      for (int a = 0; a < fh.axes; ++a) {
        const unsigned diff = g0 ^ fg.mask_of.at(fh.vertex_of.at(1u << a));
        if (diff == 0 || (diff & (diff - 1)) != 0) not_a_cube(k, g);
        const int b = std::countr_zero(diff);
        d.g_axis[static_cast<size_t>(a)] = b;
        d.reversed[static_cast<size_t>(a)] = ((g0 >> b) & 1u) != 0;
      }
      drops[{g, drop_axis, side}] = std::move(d);
    }
  }

  auto boundary_cell = [&](int g, const std::vector<Token>& pos, int axis, int side) {
    const Drop& d = drops.at({g, axis, side});
    const Frame& fh = frames.at(d.h);
    std::vector<Token> hpos(static_cast<size_t>(fh.axes));
    for (int a = 0; a < fh.axes; ++a) {
      Token tok = pos[static_cast<size_t>(d.g_axis[static_cast<size_t>(a)])];
      if (d.reversed[static_cast<size_t>(a)]) tok.p = tok.kind == 'v' ? t + 1 - tok.p : t - tok.p;
      hpos[static_cast<size_t>(a)] = tok;
    }
    return cell_id(d.h, hpos);
  };

  std::vector<FaceSpec> faces;
  std::map<std::string, std::string> carrier;
  for (int g : k.nonempty_faces()) {
    const int kg = frames.at(g).axes;
    std::vector<int> digits(static_cast<size_t>(kg), 0);
    while (true) {
      std::vector<Token> pos(static_cast<size_t>(kg));
      int dim = 0;
      for (int i = 0; i < kg; ++i) {
        const int digit = digits[static_cast<size_t>(i)];
        if (digit <= t) {
          pos[static_cast<size_t>(i)] = {'s', digit};
          ++dim;
        } else {
          pos[static_cast<size_t>(i)] = {'v', digit - t};
        }
      }
      FaceSpec spec;
      spec.id = cell_id(g, pos);
      spec.dim = dim;
      for (int i = 0; i < kg; ++i) {
        if (pos[static_cast<size_t>(i)].kind != 's') continue;
        const int p = pos[static_cast<size_t>(i)].p;
        if (p >= 1) {
          std::vector<Token> q = pos;
          q[static_cast<size_t>(i)] = {'v', p};
          spec.covers.push_back(cell_id(g, q));
        } else {
          spec.covers.push_back(boundary_cell(g, pos, i, 0));
        }
        if (p + 1 <= t) {
          std::vector<Token> q = pos;
          q[static_cast<size_t>(i)] = {'v', p + 1};
          spec.covers.push_back(cell_id(g, q));
        } else {
          spec.covers.push_back(boundary_cell(g, pos, i, 1));
        }
      }
      carrier[spec.id] = k.id_of(g);
      faces.push_back(std::move(spec));
      int i = 0;
      for (; i < kg; ++i) {
        if (++digits[static_cast<size_t>(i)] <= 2 * t) break;
        digits[static_cast<size_t>(i)] = 0;
      }
      if (i == kg) break;
    }
  }
  return SubdivisionMap(FaceComplex::from_faces(ComplexKind::cubical, faces), k, carrier);
}

}  // namespace

SubdivisionMap gen_cubical_barycentric(const FaceComplex& k, int t) {
  if (k.kind() != ComplexKind::cubical)
    throw std::invalid_argument("kind-mismatch: gen_cubical_barycentric needs a cubical complex");
  if (t < 1)
    throw std::invalid_argument("parameter-out-of-range: gen_cubical_barycentric needs t >= 1");
  if (!k.pure())
    throw std::invalid_argument("not-pure: gen_cubical_barycentric needs a pure complex");
  if (t == 1) return cbs_intervals(k);
  return cbs_glued(k, t);
}

FormalSubdivision gen_interval_poset_subdivision(int d) {
  if (d < 1)
    throw std::invalid_argument(
        "parameter-out-of-range: gen_interval_poset_subdivision needs d >= 1");
  auto subset_id = [](unsigned s) {
    std::string id;
    for (int i = 0; i < 31; ++i)
      if (s & (1u << i)) id += static_cast<char>('0' + i);
    return id;
  };
  std::vector<unsigned> subsets;
  for (unsigned s = 1; s < (1u << d); ++s) subsets.push_back(s);
  std::sort(subsets.begin(), subsets.end(), [](unsigned a, unsigned b) {
    return std::make_pair(std::popcount(a), a) < std::make_pair(std::popcount(b), b);
  });

  std::vector<std::string> pelems;
  std::vector<std::pair<std::string, std::string>> pcovers;
  for (unsigned s : subsets) {
    pelems.push_back(subset_id(s));
    for (int x = 0; x < d; ++x)
      if (!(s & (1u << x))) pcovers.emplace_back(subset_id(s), subset_id(s | (1u << x)));
  }
  Poset target = Poset::from_covers(pelems, pcovers);

  auto pair_id = [&subset_id](unsigned s, unsigned f) {
    return "[" + subset_id(s) + "|" + subset_id(f) + "]";
  };
  std::vector<std::string> qelems;
  std::vector<std::pair<std::string, std::string>> qcovers;
  std::map<std::string, std::string> sigma;
  for (unsigned f : subsets) {
    for (unsigned s = f; s != 0; s = (s - 1) & f) {
      qelems.push_back(pair_id(s, f));
      sigma[pair_id(s, f)] = subset_id(f);
      const unsigned free = f & ~s;
      for (int x = 0; x < d; ++x) {
        if (!(free & (1u << x))) continue;
        qcovers.emplace_back(pair_id(s | (1u << x), f), pair_id(s, f));
        qcovers.emplace_back(pair_id(s, f & ~(1u << x)), pair_id(s, f));
      }
    }
  }
  Poset source = Poset::from_covers(qelems, qcovers);
  return FormalSubdivision(std::move(source), std::move(target), sigma);
}

FormalSubdivision gen_annulus() {
  // Target: two hollow triangles capped by one artificial rank-2 element.
  std::vector<std::string> pelems = {"a1", "a2", "a3", "b1",  "b2",  "b3", "e12",
                                     "e13", "e23", "f12", "f13", "f23", "top"};
  std::vector<std::pair<std::string, std::string>> pcovers = {
      {"a1", "e12"}, {"a2", "e12"}, {"a1", "e13"}, {"a3", "e13"}, {"a2", "e23"}, {"a3", "e23"},
      {"b1", "f12"}, {"b2", "f12"}, {"b1", "f13"}, {"b3", "f13"}, {"b2", "f23"}, {"b3", "f23"},
      {"e12", "top"}, {"e13", "top"}, {"e23", "top"}, {"f12", "top"}, {"f13", "top"}, {"f23", "top"}};
  Poset target = Poset::from_covers(pelems, pcovers);

  // Source: the lateral surface of a triangular prism (an annulus), with
  // bottom rim u, top rim w, vertical edges m and quadrilaterals F.
  std::vector<std::string> qelems = {"u1", "u2", "u3", "w1",  "w2",  "w3",  "p12", "p13", "p23",
                                     "q12", "q13", "q23", "m1", "m2", "m3", "F12", "F13", "F23"};
  std::vector<std::pair<std::string, std::string>> qcovers = {
      {"u1", "p12"}, {"u2", "p12"}, {"u1", "p13"}, {"u3", "p13"}, {"u2", "p23"}, {"u3", "p23"},
      {"w1", "q12"}, {"w2", "q12"}, {"w1", "q13"}, {"w3", "q13"}, {"w2", "q23"}, {"w3", "q23"},
      {"u1", "m1"},  {"w1", "m1"},  {"u2", "m2"},  {"w2", "m2"},  {"u3", "m3"},  {"w3", "m3"},
      {"p12", "F12"}, {"q12", "F12"}, {"m1", "F12"}, {"m2", "F12"},
      {"p13", "F13"}, {"q13", "F13"}, {"m1", "F13"}, {"m3", "F13"},
      {"p23", "F23"}, {"q23", "F23"}, {"m2", "F23"}, {"m3", "F23"}};
  Poset source = Poset::from_covers(qelems, qcovers);

  std::map<std::string, std::string> sigma;
  for (int i = 1; i <= 3; ++i) {
    sigma["u" + std::to_string(i)] = "a" + std::to_string(i);
    sigma["w" + std::to_string(i)] = "b" + std::to_string(i);
    sigma["m" + std::to_string(i)] = "top";
  }
  for (const char* ij : {"12", "13", "23"}) {
    sigma[std::string("p") + ij] = std::string("e") + ij;
    sigma[std::string("q") + ij] = std::string("f") + ij;
    sigma[std::string("F") + ij] = "top";
  }
  return FormalSubdivision(std::move(source), std::move(target), sigma);
}

// ---------------------------------------------------------------------------
// The registry.
// ---------------------------------------------------------------------------

namespace {

Polynomial geom_series(int m) {
  Polynomial p;
  for (int i = 0; i <= m; ++i) p = p + Polynomial::monomial(i);
  return p;
}

CorpusMetadata flags(bool lqg, bool qg, bool geometric) {
  CorpusMetadata m;
  m.is_locally_quasi_geometric = lqg;
  m.is_quasi_geometric = qg;
  m.is_geometric = geometric;
  return m;
}

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> es;
  auto add = [&es](std::string name, std::string summary,
                   std::variant<FaceComplex, SubdivisionMap, FormalSubdivision> object,
                   CorpusMetadata metadata) {
    es.push_back(
        CorpusEntry{std::move(name), std::move(summary), std::move(object), std::move(metadata)});
  };
  const Polynomial x = Polynomial::x();
  const Polynomial one = Polynomial::one();

  // Plain complexes.
  {
    CorpusMetadata m;
    m.expected["h-short"] = Polynomial::of({1});
    add("point", "The 0-cube.", FaceComplex::standard_cube(0), m);
  }
  for (int d = 1; d <= 3; ++d) {
    CorpusMetadata m;
    m.expected["h-short"] = Polynomial(Coeff(1) << d);
    add("cube-" + std::to_string(d), "The solid " + std::to_string(d) + "-cube.",
        FaceComplex::standard_cube(d), m);
  }
  {
    CorpusMetadata m;
    m.expected["h-short"] = Polynomial::of({6, 2});
    add("squarepair", "Two squares sharing an edge.", gen_grid(2, {2, 1}).source(), m);
  }
  {
    CorpusMetadata m;
    m.expected["h-short"] = Polynomial::of({4, 4});
    add("boundary-square", "The hollow square, a cubical circle.", FaceComplex::boundary_of_cube(2),
        m);
  }
  {
    CorpusMetadata m;
    m.expected["h-short"] = Polynomial::of({8, 8, 8});
    add("boundary-cube", "The hollow 3-cube, a cubical 2-sphere.", FaceComplex::boundary_of_cube(3),
        m);
  }
  {
    CorpusMetadata m;
    m.expected["h-simplicial"] = Polynomial::of({1, 1, 1, 1});
    add("boundary-simplex-4", "Proper faces of the tetrahedron, a simplicial 2-sphere.",
        FaceComplex::boundary_of_simplex(4), m);
  }

  // Trivial subdivisions.
  {
    CorpusMetadata m = flags(true, true, true);
    m.expected["h-short-source"] = one;
    m.expected["local-h-short"] = one;
    m.expected["local-h-long"] = one;
    add("trivial-point", "Trivial subdivision of the 0-cube.",
        trivial_subdivision(FaceComplex::standard_cube(0)), m);
  }
  for (int d = 2; d <= 3; ++d) {
    CorpusMetadata m = flags(true, true, true);
    m.expected["h-short-source"] = Polynomial(Coeff(1) << d);
    m.expected["local-h-short"] = Polynomial();
    m.expected["local-h-long"] = Polynomial();
    const std::string name = d == 2 ? "trivial-square" : "trivial-cube";
    add(name, "Trivial subdivision of the " + std::to_string(d) + "-cube.",
        trivial_subdivision(FaceComplex::standard_cube(d)), m);
  }

  // Subdivided segments.
  for (int t : {0, 1, 2, 5}) {
    CorpusMetadata m = flags(true, true, true);
    m.expected["h-short-source"] = Polynomial::of({2}) + Coeff(t) * (one + x);
    m.expected["h-long-source"] = Polynomial::of({2}) + Coeff(t) * x;
    m.expected["local-h-short"] = Coeff(t) * (one + x);
    m.expected["local-h-long"] = Coeff(t) * x;
    add("segment-" + std::to_string(t),
        "Segment subdivided into " + std::to_string(t + 1) + " edges.", gen_segment(t), m);
  }

  // Flattened cube boundaries.
  for (int d = 1; d <= 4; ++d) {
    CorpusMetadata m = flags(true, true, true);
    const Coeff scale = Coeff(1) << d;
    m.expected["h-short-source"] =
        scale * (geom_series(d) + geom_series(d - 1));
    m.expected["h-long-source"] = scale * geom_series(d);
    m.expected["local-h-short"] = scale * ((one + x) * geom_series(d - 1));
    m.expected["local-h-long"] = scale * (x * geom_series(d - 1));
    add("schlegel-" + std::to_string(d),
        "Boundary of the " + std::to_string(d + 1) + "-cube flattened onto one facet.",
        gen_schlegel(d), m);
  }

  // Combinatorial subdivisions with no geometric realization.
  {
    CorpusMetadata m = flags(false, false, false);
    m.expected["h-short-source"] = Polynomial::of({6, 2});
    m.expected["local-h-short"] = Polynomial();
    m.expected["local-h-long"] = Polynomial();
    add("nongeometric-square", "Two squares glued along an edge, mapped onto one square.",
        gen_nongeometric_square(), m);
  }
  {
    CorpusMetadata m = flags(false, false, false);
    m.expected["h-short-source"] = Polynomial::of({12, 4});
    m.expected["local-h-short"] = Coeff(-4) * (x * (one + x));
    m.expected["local-h-long"] = Polynomial::of({0, 0, -4});
    add("pushed-cube", "Two 3-cubes glued along a square, mapped onto one 3-cube.",
        gen_pushed_cube(), m);
  }
  {
    CorpusMetadata m = flags(false, true, false);
    m.expected["h-short-source"] = Polynomial::of({8, 4});
    m.expected["local-h-short"] = Polynomial();
    m.expected["local-h-long"] = Polynomial();
    add("remark-square", "Square cut into three quadrilaterals with doubled boundary vertices.",
        gen_remark_square(), m);
  }
  {
    CorpusMetadata m = flags(true, false, false);
    m.experimental = true;
    m.expected["h-short-source"] = Polynomial::of({14, 14, 4});
    m.expected["local-h-short"] = Polynomial::of({4, 8, 4});
    m.expected["local-h-long"] = Polynomial::of({0, 4, 4});
    add("crossed-square", "Square cut into eight quadrilaterals, one with all vertices on one edge.",
        gen_crossed_square(), m);
  }

  // Grids.
  {
    CorpusMetadata m = flags(true, true, true);
    m.expected["h-short-source"] = Polynomial::of({9, 6, 1});
    m.expected["local-h-short"] = (one + x) * (one + x);
    m.expected["local-h-long"] = x * (one + x);
    add("grid-2x2", "Square cut into a 2 by 2 grid.", gen_grid(2, {2, 2}), m);
  }
  {
    CorpusMetadata m = flags(true, true, true);
    m.expected["h-short-source"] = Polynomial::of({12, 4});
    m.expected["local-h-short"] = Polynomial();
    m.expected["local-h-long"] = Polynomial();
    add("grid-3-211", "Cube cut into two boxes; same face poset as pushed-cube, different map.",
        gen_grid(3, {2, 1, 1}), m);
  }

  // Stellar-type subdivisions of one facet.
  {
    CorpusMetadata m = flags(true, true, true);
    m.expected["h-short-source"] = Polynomial::of({5, 3});
    const FaceComplex host = gen_grid(1, {2}).source();
    add("stellar-segpair", "Path of two edges with one edge split at an interior point.",
        gen_stellar(host, host.facets().front()), m);
  }
  {
    CorpusMetadata m = flags(true, true, true);
    m.expected["h-short-source"] = Polynomial::of({10, 10, 4});
    const FaceComplex host = gen_grid(2, {2, 1}).source();
    add("stellar-squarepair", "Two squares sharing an edge, one replaced by its flattened boundary.",
        gen_stellar(host, host.facets().front()), m);
  }
  {
    CorpusMetadata m = flags(true, true, true);
    m.expected["h-short-source"] = Polynomial::of({20, 20, 16, 8});
    const FaceComplex host = gen_grid(3, {2, 1, 1}).source();
    add("stellar-cubepair", "Two 3-cubes sharing a square, one replaced by its flattened boundary.",
        gen_stellar(host, host.facets().front()), m);
  }

  // Cubical barycentric subdivisions.
  {
    CorpusMetadata m = flags(true, true, true);
    m.expected["h-short-source"] = Polynomial::of({15, 14, 3});
    add("cbs-squarepair-1", "Barycentric cover of two squares sharing an edge.",
        gen_cubical_barycentric(gen_grid(2, {2, 1}).source(), 1), m);
  }
  {
    CorpusMetadata m = flags(true, true, true);
    m.expected["h-short-source"] = Polynomial::of({16, 16, 4});
    m.expected["local-h-short"] = Coeff(4) * ((one + x) * (one + x));
    m.expected["local-h-long"] = Coeff(4) * (x * (one + x));
    add("cbs-square-2", "Square barycentrically subdivided with parameter two.",
        gen_cubical_barycentric(FaceComplex::standard_cube(2), 2), m);
  }

  // Formal subdivisions of posets.
  {
    CorpusMetadata m;
    m.expected["h-general-source"] = Polynomial::of({7, 4, 1});
    m.expected["local-h-general"] = Polynomial::of({1, 1, 1});
    add("interval-simplex-3", "Interval poset of the faces of a triangle over its face poset.",
        gen_interval_poset_subdivision(3), m);
  }
  {
    CorpusMetadata m;
    m.expected["h-general-source"] = Polynomial::of({6, 6});
    m.expected["local-h-general"] = Polynomial::of({0, 6});
    add("annulus", "Prism lateral surface over two hollow triangles with an artificial top.",
        gen_annulus(), m);
  }

  return es;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build_corpus();
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const CorpusEntry& e : corpus())
    if (e.name == name) return e;
  throw std::invalid_argument("unknown-entry: '" + name + "'");
}

}  // namespace cubal
