#include "cubal/verify.hpp"

#include <stdexcept>
#include <utility>
#include <variant>

#include "cubal/corpus.hpp"
#include "cubal/enumeration.hpp"
#include "cubal/formal.hpp"
#include "cubal/polynomial.hpp"

namespace cubal {

namespace {

bool divides(const Polynomial& divisor, const Polynomial& p) {
  try {
    exact_div(p, divisor);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool unimodal(const Polynomial& p) {
  const auto& c = p.coeffs();
  size_t i = 1;
  while (i < c.size() && c[i - 1] <= c[i]) ++i;
  while (i < c.size() && c[i - 1] >= c[i]) ++i;
  return i >= c.size();
}

void check(Report& report, const std::string& suite, const std::string& key, bool pass,
           const std::string& detail) {
  report.results[suite + "/" + key] = pass;
  if (!pass) report.fail(suite, key, detail);
}

void observe(Report& report, const std::string& key, bool value) {
  report.results["observed/" + key] = value;
}

// ---------------------------------------------------------------------------
// Instance collections.
// ---------------------------------------------------------------------------

struct NamedMap {
  std::string name;
  const SubdivisionMap* map;
};

struct NamedComplex {
  std::string name;
  const FaceComplex* complex;
};

struct NamedFormal {
  std::string name;
  const FormalSubdivision* formal;
  const SubdivisionMap* origin;  // non-null when lifted from a face-level map
};

const std::vector<NamedMap>& map_instances() {
  static const std::vector<NamedMap> instances = [] {
    std::vector<NamedMap> out;
    for (const auto& e : corpus()) {
      const auto* s = std::get_if<SubdivisionMap>(&e.object);
      if (s != nullptr) out.push_back({e.name, s});
    }
    for (const auto& d : derived_instances()) out.push_back({"derived/" + d.name, &d.map});
    return out;
  }();
  return instances;
}

const std::vector<NamedComplex>& complex_instances() {
  static const std::vector<NamedComplex> instances = [] {
    std::vector<NamedComplex> out;
    for (const auto& e : corpus()) {
      if (const auto* k = std::get_if<FaceComplex>(&e.object)) out.push_back({e.name, k});
      if (const auto* s = std::get_if<SubdivisionMap>(&e.object)) {
        out.push_back({e.name + "/source", &s->source()});
        out.push_back({e.name + "/target", &s->target()});
      }
    }
    for (const auto& d : derived_instances())
      out.push_back({"derived/" + d.name + "/source", &d.map.source()});
    return out;
  }();
  return instances;
}

const std::vector<NamedFormal>& formal_instances() {
  // Owns the poset lifts of the face-level corpus subdivisions; filled
  // completely before any address is taken.
  static const std::vector<FormalSubdivision> lifted = [] {
    std::vector<FormalSubdivision> out;
    for (const auto& e : corpus())
      if (const auto* s = std::get_if<SubdivisionMap>(&e.object))
        out.push_back(lift_to_formal(*s));
    return out;
  }();
  static const std::vector<NamedFormal> instances = [] {
    std::vector<NamedFormal> out;
    for (const auto& e : corpus())
      if (const auto* f = std::get_if<FormalSubdivision>(&e.object))
        out.push_back({e.name, f, nullptr});
    size_t next = 0;
    for (const auto& e : corpus())
      if (const auto* s = std::get_if<SubdivisionMap>(&e.object))
        out.push_back({e.name + "/lifted", &lifted[next++], s});
    return out;
  }();
  return instances;
}

// ---------------------------------------------------------------------------
// Per-instance identity batteries.
// ---------------------------------------------------------------------------

void reciprocity_complex(Report& report, const std::string& name, const FaceComplex& k) {
  if (k.kind() == ComplexKind::simplicial) {
    const HVector h = h_simplicial(k);
    const HVector interior = h_simplicial_interior(k);
    check(report, "reciprocity", name, reflect(h.poly, h.d) == interior.poly,
          "interior h-polynomial is not the degree reversal of h");
  } else {
    const HVector h = h_short_cubical(k);
    const HVector interior = h_short_cubical_interior(k);
    check(report, "reciprocity", name, reflect(h.poly, h.d) == interior.poly,
          "interior short cubical h-polynomial is not the degree reversal of the full one");
  }
}

void euler_complex(Report& report, const std::string& name, const FaceComplex& k) {
  if (k.kind() != ComplexKind::cubical) return;
  const HVector h = h_short_cubical(k);
  Coeff two_pow = 1;
  for (int i = 0; i < h.d; ++i) two_pow *= 2;
  const Coeff euler = Coeff(reduced_euler(k)) + 1;
  check(report, "reciprocity", name + "/euler", h.poly.eval(-1) == two_pow * euler,
        "evaluation of the short cubical h-polynomial at -1 misses 2^d times the Euler "
        "characteristic");
}

void symmetry_map(Report& report, const std::string& name, const SubdivisionMap& s) {
  if (!s.target().top_cube().has_value()) return;  // local h is defined over a single cube
  const LocalHVector ell = local_h_short(s);
  std::string diag;
  check(report, "symmetry", name + "/short-palindromic", is_palindromic(ell.poly, ell.d, &diag),
        diag.empty() ? "local h-polynomial is not palindromic" : diag);
  if (ell.d >= 1) {
    check(report, "symmetry", name + "/short-divisible",
          divides(Polynomial::of({1, 1}), ell.poly),
          "local h-polynomial is not divisible by x + 1");
    const LocalHVector lng = local_h_long(s);
    std::string diag2;
    check(report, "symmetry", name + "/long-palindromic",
          is_palindromic(lng.poly, lng.d + 1, &diag2),
          diag2.empty() ? "long local h-polynomial is not palindromic" : diag2);
    check(report, "symmetry", name + "/long-divisible", divides(Polynomial::x(), lng.poly),
          "long local h-polynomial is not divisible by x");
    check(report, "symmetry", name + "/bridge",
          Polynomial::x() * ell.poly == Polynomial::of({1, 1}) * lng.poly,
          "x times the short local h-polynomial differs from (x + 1) times the long one");
  }

  // Coefficient identities read off carrier dimensions: the constant and top
  // coefficients count interior vertices, and the linear coefficient is
  // -d*f0i + 2*f1i - g0, with f0i/f1i the interior vertex/edge counts and g0
  // the number of vertices carried to the relative interior of a facet.
  const int d = ell.d;
  Coeff f0i = 0, f1i = 0, g0 = 0;
  for (int v : s.source().faces_of_dim(0)) {
    const int dim = s.target().dim(s.carrier(v));
    if (dim == d) ++f0i;
    if (dim == d - 1) ++g0;
  }
  for (int e : s.source().faces_of_dim(1))
    if (s.target().dim(s.carrier(e)) == d) ++f1i;
  check(report, "symmetry", name + "/ell0-interior-vertices",
        ell.poly.coeff(0) == f0i && ell.poly.coeff(d) == f0i,
        "constant or top coefficient differs from the interior vertex count");
  check(report, "symmetry", name + "/ell1-face-counts",
        ell.poly.coeff(1) == Coeff(-d) * f0i + 2 * f1i - g0,
        "linear coefficient differs from the interior face-count formula");

  Polynomial contribution_sum;
  bool each_palindromic = true;
  for (int v : s.source().faces_of_dim(0)) {
    const Polynomial c = vertex_contribution(s, v);
    contribution_sum = contribution_sum + c;
    if (!is_palindromic(c, d)) each_palindromic = false;
  }
  check(report, "symmetry", name + "/contribution-sum", contribution_sum == ell.poly,
        "vertex contributions do not sum to the local h-polynomial");
  check(report, "symmetry", name + "/contribution-palindromic", each_palindromic,
        "some vertex contribution is not palindromic");
}

void symmetry_formal(Report& report, const std::string& name, const FormalSubdivision& f) {
  const Polynomial ell = local_h_general(f);
  const int d = f.target().length();
  std::string diag;
  check(report, "symmetry", name + "/general-palindromic", is_palindromic(ell, d, &diag),
        diag.empty() ? "generalized local h-polynomial is not palindromic" : diag);
}

void locality_map(Report& report, const std::string& name, const SubdivisionMap& s) {
  try {
    const LocalityDecomposition dec = locality_decompose_short(s);
    check(report, "locality", name + "/short", dec.lhs.poly == dec.rhs.poly,
          "short locality decomposition does not balance");
  } catch (const std::exception& e) {
    check(report, "locality", name + "/short", false, e.what());
  }
  if (s.target().dimension() >= 1) {
    try {
      const LocalityDecomposition dec = locality_decompose_long(s);
      check(report, "locality", name + "/long", dec.lhs.poly == dec.rhs.poly,
            "long locality decomposition does not balance");
    } catch (const std::exception& e) {
      check(report, "locality", name + "/long", false, e.what());
    }
  }
}

void locality_formal(Report& report, const std::string& name, const FormalSubdivision& f) {
  try {
    const auto sides = general_locality(f);
    check(report, "locality", name + "/general", sides.first == sides.second,
          "generalized locality decomposition does not balance");
  } catch (const std::exception& e) {
    check(report, "locality", name + "/general", false, e.what());
  }
}

void excess_map(Report& report, const std::string& name, const SubdivisionMap& s) {
  if (!s.target().top_cube().has_value()) return;
  try {
    const LocalHVector direct = local_h_short(s);
    const LocalHVector via_excess = local_h_short_via_excess(s);
    check(report, "locality", name + "/excess", direct.poly == via_excess.poly,
          "defining sum and excess formula disagree");
  } catch (const std::exception& e) {
    check(report, "locality", name + "/excess", false, e.what());
  }
}

void hetyei_complex(Report& report, const std::string& name, const FaceComplex& k) {
  if (k.kind() != ComplexKind::cubical || !k.pure()) return;
  Polynomial sum;
  for (const auto& [vertex, h] : hetyei_decomposition(k)) sum = sum + h.poly;
  check(report, "product", name + "/link-sum", sum == h_short_cubical(k).poly,
        "vertex link h-polynomials do not sum to the short cubical h-polynomial");
}

void product_pair(Report& report, const std::string& a, const std::string& b) {
  const auto& sa = std::get<SubdivisionMap>(corpus_entry(a).object);
  const auto& sb = std::get<SubdivisionMap>(corpus_entry(b).object);
  const SubdivisionMap prod = product_subdivision(sa, sb);
  const Polynomial expected = local_h_short(sa).poly * local_h_short(sb).poly;
  check(report, "product", "multiplicativity(" + a + "," + b + ")",
        local_h_short(prod).poly == expected,
        "local h-polynomial of the product differs from the product of the factors");
}

void nonnegativity_map(Report& report, const std::string& name, const SubdivisionMap& s) {
  const bool lqg = is_locally_quasi_geometric(s);
  const bool cube_target = s.target().top_cube().has_value();
  const Polynomial ell = cube_target ? local_h_short(s).poly : Polynomial();
  if (cube_target) observe(report, "nonnegative-local-h/" + name, is_nonnegative(ell));
  if (!lqg) return;

  if (cube_target) {
    check(report, "nonnegativity", name + "/local-h", is_nonnegative(ell),
          "local h-polynomial of a locally quasi-geometric subdivision has a negative "
          "coefficient");
    bool contributions_ok = true;
    for (int v : s.source().faces_of_dim(0))
      if (!is_nonnegative(vertex_contribution(s, v))) contributions_ok = false;
    check(report, "nonnegativity", name + "/contributions", contributions_ok,
          "some vertex contribution has a negative coefficient");
    observe(report, "unimodal-local-h/" + name, unimodal(ell));
    if (s.target().dimension() >= 1)
      observe(report, "nonnegative-long-local-h/" + name, is_nonnegative(local_h_long(s).poly));
  }

  const int d = s.target().dimension();
  const Polynomial gap =
      h_short_cubical(s.source()).poly - h_short_cubical(s.target(), d).poly;
  check(report, "nonnegativity", name + "/monotone", is_nonnegative(gap),
        "subdividing decreased a short cubical h-vector entry");
}

void formal_instance(Report& report, const std::string& name, const FormalSubdivision& f,
                     const SubdivisionMap* origin) {
  const ValidationReport v = validate_formal(f);
  std::string detail = "formal subdivision conditions fail:";
  for (const auto& issue : v.issues) detail += " " + issue.check;
  check(report, "formal", name + "/conditions", v.ok(), detail);
  if (!v.ok()) return;

  check(report, "formal", name + "/acceptable", acceptability_check(f),
        "restriction h-function is not acceptable for the rank kernel");
  if (origin != nullptr && origin->target().top_cube().has_value()) {
    check(report, "formal", name + "/reduces", local_h_general(f) == local_h_short(*origin).poly,
          "generalized local h-polynomial differs from the cubical local h-polynomial");
  }
}

// ---------------------------------------------------------------------------
// Suite drivers.
// ---------------------------------------------------------------------------

void run_reciprocity(Report& report) {
  for (const auto& [name, k] : complex_instances()) {
    reciprocity_complex(report, name, *k);
    euler_complex(report, name, *k);
  }
}

void run_symmetry(Report& report) {
  for (const auto& [name, s] : map_instances()) symmetry_map(report, name, *s);
  for (const auto& inst : formal_instances())
    if (inst.origin == nullptr) symmetry_formal(report, inst.name, *inst.formal);
}

void run_locality(Report& report) {
  for (const auto& [name, s] : map_instances()) {
    locality_map(report, name, *s);
    excess_map(report, name, *s);
  }
  for (const auto& inst : formal_instances())
    if (inst.origin == nullptr) locality_formal(report, inst.name, *inst.formal);
}

void run_product(Report& report) {
  for (const auto& [name, k] : complex_instances()) hetyei_complex(report, name, *k);
  const std::vector<std::pair<const char*, const char*>> pairs = {
      {"segment-1", "segment-1"},       {"segment-1", "segment-2"},
      {"segment-2", "segment-5"},       {"segment-0", "schlegel-2"},
      {"segment-1", "nongeometric-square"}, {"nongeometric-square", "nongeometric-square"},
      {"segment-2", "schlegel-2"},      {"nongeometric-square", "schlegel-2"},
      {"segment-1", "pushed-cube"},
  };
  for (const auto& [a, b] : pairs) product_pair(report, a, b);
}

void run_nonnegativity(Report& report) {
  for (const auto& [name, s] : map_instances()) nonnegativity_map(report, name, *s);
}

void run_formal(Report& report) {
  for (const auto& inst : formal_instances())
    formal_instance(report, inst.name, *inst.formal, inst.origin);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "reciprocity", "symmetry", "locality", "product", "nonnegativity", "formal"};
  return names;
}

const std::vector<DerivedInstance>& derived_instances() {
  static const std::vector<DerivedInstance> instances = [] {
    std::vector<DerivedInstance> out;
    const auto map_of = [](const std::string& name) -> const SubdivisionMap& {
      return std::get<SubdivisionMap>(corpus_entry(name).object);
    };

    const std::vector<std::string> segments = {"segment-0", "segment-1", "segment-2",
                                               "segment-5"};
    for (const auto& a : segments)
      for (const auto& b : segments)
        out.push_back({"product(" + a + "," + b + ")",
                       product_subdivision(map_of(a), map_of(b))});
    for (const auto& a : segments) {
      out.push_back({"product(" + a + ",nongeometric-square)",
                     product_subdivision(map_of(a), map_of("nongeometric-square"))});
      out.push_back({"product(" + a + ",schlegel-2)",
                     product_subdivision(map_of(a), map_of("schlegel-2"))});
    }
    out.push_back({"product(nongeometric-square,schlegel-2)",
                   product_subdivision(map_of("nongeometric-square"), map_of("schlegel-2"))});

    const auto restrictions_of = [&](const std::string& name, int min_dim, int max_dim) {
      const SubdivisionMap& s = map_of(name);
      for (int f : s.target().nonempty_faces()) {
        if (s.target().dim(f) < min_dim || s.target().dim(f) > max_dim) continue;
        out.push_back({"restriction(" + name + "," + s.target().id_of(f) + ")",
                       restriction(s, f)});
      }
    };
    restrictions_of("schlegel-3", 1, 3);  // 12 edges, 6 squares, the solid cube
    restrictions_of("pushed-cube", 2, 2);  // the 6 squares
    if (out.size() != 50)
      throw std::logic_error("derived instance registry holds " + std::to_string(out.size()) +
                             " entries, expected 50");
    return out;
  }();
  return instances;
}

Report run_suite(const std::string& suite) {
  Report report;
  report.command = "verify " + suite;
  if (suite == "reciprocity") {
    run_reciprocity(report);
  } else if (suite == "symmetry") {
    run_symmetry(report);
  } else if (suite == "locality") {
    run_locality(report);
  } else if (suite == "product") {
    run_product(report);
  } else if (suite == "nonnegativity") {
    run_nonnegativity(report);
  } else if (suite == "formal") {
    run_formal(report);
  } else if (suite == "all") {
    run_reciprocity(report);
    run_symmetry(report);
    run_locality(report);
    run_product(report);
    run_nonnegativity(report);
    run_formal(report);
  } else {
    throw std::invalid_argument("unknown-suite: '" + suite + "' is not one of " +
                                [] {
                                  std::string names;
                                  for (const auto& n : suite_names()) names += n + ", ";
                                  return names + "all";
                                }());
  }
  report.notes.push_back(std::to_string(derived_instances().size()) +
                         " derived instances joined the corpus entries");
  return report;
}

}  // namespace cubal
