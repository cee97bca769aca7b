#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubal/complex.hpp"

using cubal::ComplexKind;
using cubal::FaceComplex;
using cubal::FaceSpec;

namespace {

long long choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/**
 * Two squares glued along two opposite edges (a combinatorial cylinder).
 * Valid as a poset but not a meet semilattice: the squares intersect in two
 * disjoint edges, the side edges pairwise in two vertices.
 */
FaceComplex cylinder() {
  std::vector<FaceSpec> faces;
  for (const char* v : {"a", "b", "c", "d"}) faces.push_back({v, 0, {}, {}});
  faces.push_back({"ab", 1, {"a", "b"}, {}});
  faces.push_back({"cd", 1, {"c", "d"}, {}});
  faces.push_back({"e1", 1, {"a", "c"}, {}});
  faces.push_back({"f1", 1, {"b", "d"}, {}});
  faces.push_back({"e2", 1, {"a", "c"}, {}});
  faces.push_back({"f2", 1, {"b", "d"}, {}});
  faces.push_back({"Q1", 2, {"ab", "cd", "e1", "f1"}, {}});
  faces.push_back({"Q2", 2, {"ab", "cd", "e2", "f2"}, {}});
  return FaceComplex::from_faces(ComplexKind::cubical, faces);
}

std::set<std::string> ids_of(const FaceComplex& k, const std::vector<int>& faces) {
  std::set<std::string> out;
  for (int f : faces) out.insert(k.id_of(f));
  return out;
}

}  // namespace

TEST_CASE("from_faces rejects malformed input") {
  using Catch = std::invalid_argument;
  auto mk = [](std::vector<FaceSpec> fs) {
    return FaceComplex::from_faces(ComplexKind::simplicial, fs);
  };
  CHECK_THROWS_WITH_AS(mk({{"", 0, {}, {}}}), doctest::Contains("malformed-complex"), Catch);
  CHECK_THROWS_WITH_AS(mk({{"a", -1, {}, {}}}), doctest::Contains("negative dimension"), Catch);
  CHECK_THROWS_WITH_AS(mk({{"a", 0, {}, {}}, {"a", 0, {}, {}}}),
                       doctest::Contains("duplicate face id"), Catch);
  CHECK_THROWS_WITH_AS(mk({{"a", 0, {"x"}, {}}}), doctest::Contains("lists covered faces"), Catch);
  CHECK_THROWS_WITH_AS(mk({{"a", 0, {}, {}}, {"e", 1, {}, {}}}),
                       doctest::Contains("no covered faces"), Catch);
  CHECK_THROWS_WITH_AS(mk({{"a", 0, {}, {}}, {"e", 1, {"a", "zz"}, {}}}),
                       doctest::Contains("unknown id"), Catch);
  // Dimension gap: a 2-face may only cover 1-faces.
  CHECK_THROWS_WITH_AS(mk({{"a", 0, {}, {}}, {"t", 2, {"a"}, {}}}),
                       doctest::Contains("covers 'a' (dim 0)"), Catch);
}

TEST_CASE("standard cube has the right face counts") {
  for (int d = 0; d <= 4; ++d) {
    CAPTURE(d);
    FaceComplex c = FaceComplex::standard_cube(d);
    long long total = 1;
    for (int i = 0; i < d; ++i) total *= 3;
    CHECK(c.size() == total + 1);  // 3^d nonempty faces plus the empty face
    CHECK(c.dimension() == d);
    CHECK(c.pure());
    for (int k = 0; k <= d; ++k)
      CHECK(static_cast<long long>(c.faces_of_dim(k).size()) == (1LL << (d - k)) * choose(d, k));
    REQUIRE(c.top_cube().has_value());
    CHECK(c.dim(*c.top_cube()) == d);
    CHECK(c.validate().ok());
  }
}

TEST_CASE("cube codes index faces and respect containment") {
  FaceComplex c = FaceComplex::standard_cube(3);
  int f = c.face_by_code("0**");
  CHECK(c.dim(f) == 2);
  CHECK(c.cube_code(f).value() == "0**");
  CHECK(c.poset().less_equal(c.face_by_code("01*"), f));
  CHECK_FALSE(c.poset().less_equal(c.face_by_code("11*"), f));
  CHECK_THROWS_WITH_AS(c.face_by_code("2**"), doctest::Contains("face-not-found"),
                       std::invalid_argument);
  CHECK(c.vertices_below(*c.top_cube()).size() == 8);
}

TEST_CASE("boundary of the cube is a sphere-like complex") {
  FaceComplex s = FaceComplex::boundary_of_cube(3);
  CHECK(s.size() == 27);  // 3^3 - 1 proper faces plus the empty face
  CHECK(s.f_vector() == std::vector<long long>{8, 12, 6});
  CHECK(s.pure());
  CHECK(s.dimension() == 2);
  CHECK_FALSE(s.top_cube().has_value());
  CHECK(s.validate().ok());
  auto bi = s.boundary_interior();
  CHECK(bi.boundary_empty);
  CHECK(bi.boundary.empty());
  CHECK(static_cast<int>(bi.interior.size()) == s.size());
}

TEST_CASE("simplex generators") {
  FaceComplex t = FaceComplex::simplex(3);
  CHECK(t.size() == 8);  // all subsets of three vertices
  CHECK(t.f_vector() == std::vector<long long>{3, 3, 1});
  CHECK(t.kind() == ComplexKind::simplicial);
  CHECK(t.validate().ok());
  CHECK(t.index_of("v1+v2") > 0);

  FaceComplex b = FaceComplex::boundary_of_simplex(4);
  CHECK(b.f_vector() == std::vector<long long>{4, 6, 4});
  CHECK(b.validate().ok());
  CHECK(b.boundary_interior().boundary_empty);
}

TEST_CASE("facet vertex sets close downward") {
  FaceComplex path = FaceComplex::from_facet_vertex_sets({{"a", "b"}, {"b", "c"}});
  CHECK(path.f_vector() == std::vector<long long>{3, 2});
  CHECK(path.validate().ok());

  auto bi = path.boundary_interior();
  CHECK_FALSE(bi.boundary_empty);
  CHECK(ids_of(path, bi.boundary) == std::set<std::string>{"", "a", "c"});
  CHECK(ids_of(path, bi.interior) == std::set<std::string>{"b", "a+b", "b+c"});

  CHECK_THROWS_WITH_AS(FaceComplex::from_facet_vertex_sets({{"a", "a"}}),
                       doctest::Contains("repeats a vertex"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(FaceComplex::from_facet_vertex_sets({{"a+b"}}),
                       doctest::Contains("contains '+'"), std::invalid_argument);
}

TEST_CASE("boundary and interior in dimension zero") {
  FaceComplex pt = FaceComplex::from_facet_vertex_sets({{"a"}});
  auto bi = pt.boundary_interior();
  // The empty face is the unique codimension-1 face of a single vertex.
  CHECK_FALSE(bi.boundary_empty);
  CHECK(ids_of(pt, bi.boundary) == std::set<std::string>{""});
  CHECK(ids_of(pt, bi.interior) == std::set<std::string>{"a"});

  FaceComplex two = FaceComplex::from_facet_vertex_sets({{"a"}, {"b"}});
  auto bi2 = two.boundary_interior();
  CHECK(bi2.boundary_empty);  // the empty face lies in both facets
  CHECK(ids_of(two, bi2.interior) == std::set<std::string>{"", "a", "b"});
}

TEST_CASE("boundary_interior requires a pure complex") {
  FaceComplex k = FaceComplex::from_facet_vertex_sets({{"a", "b"}, {"c"}});
  CHECK_THROWS_WITH_AS(k.boundary_interior(), doctest::Contains("not-pure"), std::domain_error);
}

TEST_CASE("links rebase dimensions") {
  FaceComplex s = FaceComplex::boundary_of_cube(3);
  FaceComplex lk = s.link(s.index_of("000"));
  CHECK(lk.kind() == ComplexKind::simplicial);
  CHECK(lk.f_vector() == std::vector<long long>{3, 3});  // a triangle circle
  CHECK(lk.validate().ok());
  CHECK(ids_of(lk, lk.faces_of_dim(0)) == std::set<std::string>{"00*", "0*0", "*00"});
  CHECK(ids_of(lk, lk.faces_of_dim(1)) == std::set<std::string>{"0**", "*0*", "**0"});
  CHECK_THROWS_WITH_AS(s.link(s.empty_index()), doctest::Contains("empty-face"),
                       std::invalid_argument);

  // Link of an edge of the solid cube: the two squares and the cube above it,
  // a path (a 1-ball).
  FaceComplex c = FaceComplex::standard_cube(3);
  FaceComplex le = c.link(c.index_of("00*"));
  CHECK(le.f_vector() == std::vector<long long>{2, 1});
}

TEST_CASE("meets and their failure") {
  FaceComplex c = FaceComplex::standard_cube(2);
  auto m = c.meet(c.face_by_code("0*"), c.face_by_code("*0"));
  REQUIRE(m.has_value());
  CHECK(c.id_of(*m) == "00");
  // Disjoint faces meet in the empty face.
  auto e = c.meet(c.face_by_code("0*"), c.face_by_code("1*"));
  REQUIRE(e.has_value());
  CHECK(*e == c.empty_index());

  FaceComplex cyl = cylinder();
  CHECK_FALSE(cyl.meet(cyl.index_of("Q1"), cyl.index_of("Q2")).has_value());
  CHECK_FALSE(cyl.meet(cyl.index_of("e1"), cyl.index_of("e2")).has_value());
  auto report = cyl.validate();
  CHECK_FALSE(report.ok());
  // (Q1,Q2), (e1,e2), (f1,f2), and each square against the other's side edges.
  CHECK(report.issues.size() == 7);
  for (const auto& issue : report.issues) CHECK(issue.check == "meet-failure");
}

TEST_CASE("cylinder boundary is its two side circles") {
  FaceComplex cyl = cylinder();
  auto bi = cyl.boundary_interior();
  CHECK(ids_of(cyl, bi.boundary) ==
        std::set<std::string>{"", "a", "b", "c", "d", "e1", "e2", "f1", "f2"});
  CHECK(ids_of(cyl, bi.interior) == std::set<std::string>{"ab", "cd", "Q1", "Q2"});
}

TEST_CASE("products multiply cubes") {
  FaceComplex p = FaceComplex::product(FaceComplex::standard_cube(1), FaceComplex::standard_cube(2));
  CHECK(p.poset().same_structure(FaceComplex::standard_cube(3).poset()));
  CHECK(p.validate().ok());

  FaceComplex pts = FaceComplex::product(FaceComplex::standard_cube(0), FaceComplex::standard_cube(0));
  CHECK(pts.size() == 2);
  CHECK(pts.dimension() == 0);

  // Segments as simplicial complexes have no cube codes; ids become pairs.
  FaceComplex seg = FaceComplex::simplex(2);
  FaceComplex sq = FaceComplex::product(seg, seg);
  CHECK(sq.f_vector() == std::vector<long long>{4, 4, 1});
  CHECK(sq.kind() == ComplexKind::cubical);
  CHECK(sq.validate().ok());
  CHECK(sq.index_of("(v1|v2)") > 0);
}

TEST_CASE("f polynomial counts nonempty faces by dimension") {
  CHECK(FaceComplex::standard_cube(2).f_polynomial() == cubal::Polynomial::of({4, 4, 1}));
  CHECK(FaceComplex::boundary_of_cube(3).f_polynomial() == cubal::Polynomial::of({8, 12, 6}));
  CHECK(FaceComplex::boundary_of_simplex(3).f_polynomial() == cubal::Polynomial::of({3, 3}));
  CHECK(FaceComplex::from_facet_vertex_sets({{"a"}}).f_polynomial() == cubal::Polynomial::of({1}));
}

TEST_CASE("induced ideal keeps downward closed sets") {
  FaceComplex c = FaceComplex::standard_cube(2);
  std::vector<int> keep = c.poset().ideal(c.face_by_code("*0"));
  FaceComplex edge = c.induced_ideal(keep);
  CHECK(edge.f_vector() == std::vector<long long>{2, 1});
  CHECK(edge.cube_code(edge.index_of("*0")).value() == "*0");

  std::vector<int> bad{c.face_by_code("**")};
  CHECK_THROWS_WITH_AS(c.induced_ideal(bad), doctest::Contains("not-an-ideal"),
                       std::invalid_argument);
}

TEST_CASE("face poset truncations") {
  FaceComplex c = FaceComplex::standard_cube(2);
  CHECK(c.truncated_face_poset(-1).size() == 10);  // empty face included
  CHECK(c.truncated_face_poset(0).size() == 9);
  CHECK(c.truncated_face_poset(1).size() == 5);
  CHECK(c.nonempty_face_poset().size() == 9);
  CHECK(c.truncated_face_poset(1).maximum().has_value());
}

TEST_CASE("validation flags broken cube intervals") {
  // A "square" with only three vertices: its ideal cannot be a cube lattice.
  std::vector<FaceSpec> faces;
  for (const char* v : {"a", "b", "c"}) faces.push_back({v, 0, {}, {}});
  faces.push_back({"ab", 1, {"a", "b"}, {}});
  faces.push_back({"bc", 1, {"b", "c"}, {}});
  faces.push_back({"ca", 1, {"c", "a"}, {}});
  faces.push_back({"T", 2, {"ab", "bc", "ca"}, {}});
  FaceComplex k = FaceComplex::from_faces(ComplexKind::cubical, faces);
  auto report = k.validate();
  CHECK_FALSE(report.ok());
  bool saw_profile = false;
  for (const auto& issue : report.issues) saw_profile |= issue.check == "cube-interval";
  CHECK(saw_profile);
  // The same poset is fine as a simplicial complex.
  FaceComplex t = FaceComplex::from_faces(ComplexKind::simplicial, faces);
  CHECK(t.validate().ok());
}

TEST_CASE("kind names round trip") {
  CHECK(cubal::to_string(ComplexKind::cubical) == "cubical");
  CHECK(cubal::complex_kind_from_string("simplicial") == ComplexKind::simplicial);
  CHECK_THROWS_WITH_AS(cubal::complex_kind_from_string("other"),
                       doctest::Contains("kind-mismatch"), std::invalid_argument);
}
