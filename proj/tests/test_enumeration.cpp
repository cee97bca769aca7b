#include <doctest.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubal/complex.hpp"
#include "cubal/enumeration.hpp"
#include "cubal/polynomial.hpp"

using cubal::ComplexKind;
using cubal::FaceComplex;
using cubal::FaceSpec;
using cubal::Polynomial;

namespace {

/** Path of `edges` consecutive segments as a cubical complex. */
FaceComplex cubical_path(int edges) {
  std::vector<FaceSpec> faces;
  for (int i = 0; i <= edges; ++i) faces.push_back({"p" + std::to_string(i), 0, {}, {}});
  for (int i = 0; i < edges; ++i)
    faces.push_back({"e" + std::to_string(i), 1,
                     {"p" + std::to_string(i), "p" + std::to_string(i + 1)}, {}});
  return FaceComplex::from_faces(ComplexKind::cubical, faces);
}

FaceComplex simplicial_path3() {
  return FaceComplex::from_facet_vertex_sets({{"a", "b"}, {"b", "c"}});
}

}  // namespace

TEST_CASE("simplicial h-polynomials of standard examples") {
  for (int n : {1, 2, 3, 4}) {
    CAPTURE(n);
    auto h = cubal::h_simplicial(FaceComplex::simplex(n));
    CHECK(h.poly == Polynomial::one());
    CHECK(h.d == n);
  }
  CHECK(cubal::h_simplicial(FaceComplex::boundary_of_simplex(3)).poly ==
        Polynomial::of({1, 1, 1}));
  CHECK(cubal::h_simplicial(FaceComplex::boundary_of_simplex(4)).poly ==
        Polynomial::of({1, 1, 1, 1}));
  CHECK(cubal::h_simplicial(simplicial_path3()).poly == Polynomial::of({1, 1}));

  // Complex consisting of the empty face alone.
  FaceComplex trivial = FaceComplex::from_faces(ComplexKind::simplicial, {});
  auto h = cubal::h_simplicial(trivial);
  CHECK(h.poly == Polynomial::one());
  CHECK(h.d == 0);
}

TEST_CASE("simplicial interior h satisfies reciprocity on balls and spheres") {
  // Ball: the full simplex has interior h = x^d.
  auto full = FaceComplex::simplex(3);
  auto h = cubal::h_simplicial(full);
  auto hi = cubal::h_simplicial_interior(full);
  CHECK(hi.poly == Polynomial::monomial(3));
  CHECK(cubal::reflect(h.poly, h.d) == hi.poly);

  // Ball: a path of two edges.
  auto path = simplicial_path3();
  CHECK(cubal::h_simplicial_interior(path).poly == Polynomial::of({0, 1, 1}));
  CHECK(cubal::reflect(cubal::h_simplicial(path).poly, 2) == Polynomial::of({0, 1, 1}));

  // Sphere: empty boundary, so the interior sum runs over all faces.
  auto sphere = FaceComplex::boundary_of_simplex(4);
  CHECK(cubal::h_simplicial_interior(sphere).poly == cubal::h_simplicial(sphere).poly);
  CHECK(cubal::is_palindromic(cubal::h_simplicial(sphere).poly, 3));
}

TEST_CASE("short cubical h-polynomials") {
  CHECK(cubal::h_short_cubical(FaceComplex::standard_cube(0)).poly == Polynomial::one());
  CHECK(cubal::h_short_cubical(FaceComplex::standard_cube(1)).poly == Polynomial::of({2}));
  CHECK(cubal::h_short_cubical(FaceComplex::standard_cube(2)).poly == Polynomial::of({4}));
  CHECK(cubal::h_short_cubical(FaceComplex::standard_cube(3)).poly == Polynomial::of({8}));

  // Subdivided segment with t interior vertices: t + 2 + t x.
  for (int t : {0, 1, 2, 5}) {
    CAPTURE(t);
    auto h = cubal::h_short_cubical(cubical_path(t + 1));
    CHECK(h.poly == Polynomial::of({t + 2, t}));
    CHECK(h.d == 1);
  }

  auto sphere = cubal::h_short_cubical(FaceComplex::boundary_of_cube(3));
  CHECK(sphere.poly == Polynomial::of({8, 8, 8}));
  CHECK(sphere.d == 2);
  CHECK(cubal::is_palindromic(sphere.poly, 2));

  // Multiplicative under products.
  auto a = cubical_path(2);
  auto b = cubical_path(3);
  CHECK(cubal::h_short_cubical(FaceComplex::product(a, b)).poly ==
        cubal::h_short_cubical(a).poly * cubal::h_short_cubical(b).poly);
}

TEST_CASE("short cubical interior h satisfies reciprocity") {
  auto square = FaceComplex::standard_cube(2);
  CHECK(cubal::h_short_cubical_interior(square).poly == Polynomial::of({0, 0, 4}));
  CHECK(cubal::reflect(cubal::h_short_cubical(square).poly, 2) == Polynomial::of({0, 0, 4}));

  auto seg = cubical_path(2);  // one interior vertex
  CHECK(cubal::h_short_cubical_interior(seg).poly == Polynomial::of({1, 3}));
  CHECK(cubal::reflect(cubal::h_short_cubical(seg).poly, 1) == Polynomial::of({1, 3}));

  // Spheres are their own interior.
  auto sphere = FaceComplex::boundary_of_cube(3);
  CHECK(cubal::h_short_cubical_interior(sphere).poly == cubal::h_short_cubical(sphere).poly);
}

TEST_CASE("reduced Euler characteristic") {
  for (int d : {0, 1, 2, 3}) {
    CAPTURE(d);
    CHECK(cubal::reduced_euler(FaceComplex::standard_cube(d)) == 0);
  }
  CHECK(cubal::reduced_euler(FaceComplex::boundary_of_cube(3)) == 1);   // 2-sphere
  CHECK(cubal::reduced_euler(FaceComplex::boundary_of_simplex(3)) == -1);  // circle
  FaceComplex two_points = FaceComplex::from_facet_vertex_sets({{"a"}, {"b"}});
  CHECK(cubal::reduced_euler(two_points) == 1);

  // h_sc(-1) = 2^dim * (1 + reduced Euler characteristic).
  for (const FaceComplex& k :
       {FaceComplex::boundary_of_cube(3), FaceComplex::standard_cube(2), cubical_path(3)}) {
    cubal::Coeff expected = (cubal::Coeff(1) << k.dimension()) *
                            cubal::Coeff(1 + cubal::reduced_euler(k));
    CHECK(cubal::h_short_cubical(k).poly.eval(-1) == expected);
  }
}

TEST_CASE("long cubical h-polynomials") {
  CHECK(cubal::h_long_cubical(FaceComplex::standard_cube(0)).poly == Polynomial::one());
  CHECK(cubal::h_long_cubical(FaceComplex::standard_cube(1)).poly == Polynomial::of({2}));
  CHECK(cubal::h_long_cubical(FaceComplex::standard_cube(2)).poly == Polynomial::of({4}));

  // Subdivided segment: 2 + t x.
  for (int t : {0, 1, 2, 5}) {
    CAPTURE(t);
    CHECK(cubal::h_long_cubical(cubical_path(t + 1)).poly == Polynomial::of({2, t}));
  }

  auto sphere = cubal::h_long_cubical(FaceComplex::boundary_of_cube(3));
  CHECK(sphere.poly == Polynomial::of({4, 4, 4, 4}));
  CHECK(sphere.d == 2);
  CHECK(cubal::is_palindromic(sphere.poly, sphere.d + 1));

  // The defining relation: (x + 1) h_c = 2^d + x h_sc + (-2)^d euler x^(d+2).
  for (const FaceComplex& k : {FaceComplex::boundary_of_cube(3), cubical_path(4)}) {
    auto hc = cubal::h_long_cubical(k);
    auto hsc = cubal::h_short_cubical(k);
    cubal::Coeff sign_pow = hc.d % 2 == 0 ? (cubal::Coeff(1) << hc.d) : -(cubal::Coeff(1) << hc.d);
    Polynomial rhs = Polynomial(cubal::Coeff(1) << hc.d) + Polynomial::x() * hsc.poly +
                     Polynomial::monomial(hc.d + 2, sign_pow * cubal::reduced_euler(k));
    CHECK(Polynomial::of({1, 1}) * hc.poly == rhs);
  }
}

TEST_CASE("vertex link decomposition sums to the short cubical h") {
  auto check_sum = [](const FaceComplex& k) {
    Polynomial sum;
    for (const auto& [v, h] : cubal::hetyei_decomposition(k)) sum = sum + h.poly;
    CHECK(sum == cubal::h_short_cubical(k).poly);
  };
  check_sum(FaceComplex::standard_cube(2));
  check_sum(FaceComplex::standard_cube(3));
  check_sum(FaceComplex::boundary_of_cube(3));
  check_sum(cubical_path(3));

  // Per-vertex values for the path with one interior vertex: the endpoints
  // contribute 1, the interior vertex 1 + x.
  auto path = cubical_path(2);
  std::map<std::string, Polynomial> by_id;
  for (const auto& [v, h] : cubal::hetyei_decomposition(path)) by_id[path.id_of(v)] = h.poly;
  CHECK(by_id.at("p0") == Polynomial::one());
  CHECK(by_id.at("p2") == Polynomial::one());
  CHECK(by_id.at("p1") == Polynomial::of({1, 1}));

  // Every vertex of the boundary of the cube links to a triangle boundary.
  for (const auto& [v, h] : cubal::hetyei_decomposition(FaceComplex::boundary_of_cube(3)))
    CHECK(h.poly == Polynomial::of({1, 1, 1}));

  FaceComplex lopsided = FaceComplex::from_faces(
      ComplexKind::cubical,
      {{"a", 0, {}, {}}, {"b", 0, {}, {}}, {"c", 0, {}, {}}, {"ab", 1, {"a", "b"}, {}}});
  CHECK_THROWS_WITH_AS(cubal::hetyei_decomposition(lopsided), doctest::Contains("not-pure"),
                       std::domain_error);
}

TEST_CASE("explicit ambient dimension parameter") {
  auto path = simplicial_path3();
  CHECK(cubal::h_simplicial(path, 3).poly == Polynomial::of({1, 0, -1}));
  CHECK(cubal::h_simplicial(path, 3).d == 3);
  CHECK_THROWS_WITH_AS(cubal::h_simplicial(FaceComplex::simplex(2), 1),
                       doctest::Contains("parameter-out-of-range"), std::invalid_argument);

  auto seg = FaceComplex::standard_cube(1);
  CHECK(cubal::h_short_cubical(seg, 2).poly == Polynomial::of({2, -2}));
  CHECK_THROWS_WITH_AS(cubal::h_short_cubical(FaceComplex::standard_cube(2), 1),
                       doctest::Contains("parameter-out-of-range"), std::invalid_argument);
}
