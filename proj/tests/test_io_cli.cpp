#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cubal/cli.hpp"
#include "cubal/corpus.hpp"
#include "cubal/enumeration.hpp"
#include "cubal/io.hpp"
#include "cubal/verify.hpp"

using cubal::FaceComplex;
using cubal::FormalSubdivision;
using cubal::Json;
using cubal::Polynomial;
using cubal::Poset;
using cubal::SubdivisionMap;

namespace {

/** Temporary directory removed when the test scope ends. */
struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("cubal-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  static int& counter() {
    static int n = 0;
    return n;
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cubal::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("polynomials round-trip through JSON") {
  const Polynomial p = Polynomial::of({4, -8, 0, 3});
  CHECK(cubal::polynomial_from_json(cubal::polynomial_to_json(p)) == p);
  CHECK(cubal::polynomial_to_json(Polynomial()).dump() == "[]");
  CHECK(cubal::polynomial_from_json(Json::array()) == Polynomial());

  SUBCASE("trailing zeros trim on parse") {
    CHECK(cubal::polynomial_from_json(Json::parse("[1, 2, 0, 0]")) == Polynomial::of({1, 2}));
  }

  SUBCASE("coefficients beyond 64 bits travel as decimal strings") {
    const Polynomial big = Polynomial::monomial(1, cubal::power(Polynomial::of({0, 2}), 80).coeff(80));
    const Json j = cubal::polynomial_to_json(big);
    CHECK(j.at(1).is_string());
    CHECK(cubal::polynomial_from_json(j) == big);
  }

  SUBCASE("malformed input is rejected") {
    CHECK_THROWS_WITH_AS(cubal::polynomial_from_json(Json::parse("{}")),
                         doctest::Contains("parse-error"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(cubal::polynomial_from_json(Json::parse("[1.5]")),
                         doctest::Contains("parse-error"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(cubal::polynomial_from_json(Json::parse("[\"ten\"]")),
                         doctest::Contains("parse-error"), std::invalid_argument);
  }
}

TEST_CASE("posets round-trip through JSON") {
  const Poset p = FaceComplex::standard_cube(2).nonempty_face_poset();
  const Poset back = cubal::poset_from_json(cubal::poset_to_json(p));
  CHECK(back.same_structure(p));
  CHECK(back.elements() == p.elements());

  SUBCASE("rank overrides are accepted when consistent and rejected otherwise") {
    Json j = cubal::poset_to_json(p);
    Json ranks = Json::object();
    for (const auto& id : p.elements()) ranks[id] = p.rank(p.index_of(id));
    j["ranks"] = ranks;
    CHECK(cubal::poset_from_json(j).same_structure(p));
    j["ranks"][p.elements().front()] = 7;
    CHECK_THROWS_WITH_AS(cubal::poset_from_json(j), doctest::Contains("rank-override-mismatch"),
                         std::invalid_argument);
  }

  SUBCASE("missing keys are parse errors") {
    CHECK_THROWS_WITH_AS(cubal::poset_from_json(Json::parse("{\"elements\": []}")),
                         doctest::Contains("parse-error"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(cubal::poset_from_json(Json::parse("{\"covers\": []}")),
                         doctest::Contains("parse-error"), std::invalid_argument);
  }

  SUBCASE("semantic errors propagate from the poset constructor") {
    const Json j = Json::parse(R"({"elements": ["a"], "covers": [["a", "b"]]})");
    CHECK_THROWS_WITH_AS(cubal::poset_from_json(j), doctest::Contains("unknown-element"),
                         std::invalid_argument);
  }
}

TEST_CASE("complexes and subdivisions round-trip through JSON") {
  for (const char* name : {"boundary-cube", "boundary-simplex-4", "squarepair"}) {
    const auto& k = std::get<FaceComplex>(cubal::corpus_entry(name).object);
    const FaceComplex back = cubal::complex_from_json(cubal::complex_to_json(k));
    CAPTURE(name);
    CHECK(back.kind() == k.kind());
    CHECK(back.poset().same_structure(k.poset()));
    CHECK(back.f_vector() == k.f_vector());
  }

  SUBCASE("cube codes survive the trip") {
    const FaceComplex cube = FaceComplex::standard_cube(2);
    const FaceComplex back = cubal::complex_from_json(cubal::complex_to_json(cube));
    CHECK(back.cube_code(back.index_of("**")).has_value());
    CHECK(back.top_cube().has_value());
  }

  SUBCASE("subdivision carriers survive the trip") {
    const auto& s = std::get<SubdivisionMap>(cubal::corpus_entry("pushed-cube").object);
    const SubdivisionMap back = cubal::subdivision_from_json(cubal::subdivision_to_json(s));
    for (int f : back.source().nonempty_faces()) {
      const int original = s.source().index_of(back.source().id_of(f));
      CHECK(back.target().id_of(back.carrier(f)) == s.target().id_of(s.carrier(original)));
    }
    CHECK(cubal::local_h_short(back).poly == cubal::local_h_short(s).poly);
  }

  SUBCASE("formal subdivisions survive the trip") {
    const auto& f = std::get<FormalSubdivision>(cubal::corpus_entry("annulus").object);
    const FormalSubdivision back = cubal::formal_from_json(cubal::formal_to_json(f));
    CHECK(back.source().same_structure(f.source()));
    CHECK(cubal::local_h_general(back) == cubal::local_h_general(f));
  }

  SUBCASE("unknown kinds are parse errors") {
    Json j = cubal::complex_to_json(FaceComplex::standard_cube(1));
    j["kind"] = "polyhedral";
    CHECK_THROWS_WITH_AS(cubal::complex_from_json(j), doctest::Contains("parse-error"),
                         std::invalid_argument);
  }
}

TEST_CASE("object detection picks the right format") {
  const auto& seg = std::get<SubdivisionMap>(cubal::corpus_entry("segment-1").object);
  CHECK(std::holds_alternative<SubdivisionMap>(
      cubal::object_from_json(cubal::subdivision_to_json(seg))));
  CHECK(std::holds_alternative<FaceComplex>(
      cubal::object_from_json(cubal::complex_to_json(seg.source()))));
  CHECK(std::holds_alternative<Poset>(
      cubal::object_from_json(cubal::poset_to_json(seg.source().poset()))));
  const auto& ann = std::get<FormalSubdivision>(cubal::corpus_entry("annulus").object);
  CHECK(std::holds_alternative<FormalSubdivision>(
      cubal::object_from_json(cubal::formal_to_json(ann))));
  CHECK_THROWS_WITH_AS(cubal::object_from_json(Json::parse("{\"x\": 1}")),
                       doctest::Contains("parse-error"), std::invalid_argument);
}

TEST_CASE("digests and reports serialize deterministically") {
  CHECK(cubal::fnv1a_digest("") == "cbf29ce484222325");
  CHECK(cubal::fnv1a_digest("abc") == "e71fa2190541574b");

  cubal::Report r;
  r.command = "demo";
  r.inputs["b.json"] = "22";
  r.inputs["a.json"] = "11";
  r.results["zeta"] = true;
  r.results["alpha"] = Json::array({1, 2});
  r.fail("symmetry", "someplace", "details");
  const std::string once = cubal::report_to_json(r).dump(2);
  const std::string twice = cubal::report_to_json(r).dump(2);
  CHECK(once == twice);
  CHECK(once.find("\"a.json\"") < once.find("\"b.json\""));
  CHECK(once.find("\"alpha\"") < once.find("\"zeta\""));
  CHECK(!r.ok());
}

TEST_CASE("derived verification instances are deterministic and complete") {
  const auto& derived = cubal::derived_instances();
  REQUIRE(derived.size() == 50);
  int products = 0, restrictions = 0;
  for (const auto& inst : derived) {
    if (inst.name.rfind("product(", 0) == 0) ++products;
    if (inst.name.rfind("restriction(", 0) == 0) ++restrictions;
  }
  CHECK(products == 25);
  CHECK(restrictions == 25);
  CHECK(derived.front().name == cubal::derived_instances().front().name);
}

TEST_CASE("every verification suite passes over the corpus") {
  for (const auto& suite : cubal::suite_names()) {
    CAPTURE(suite);
    const cubal::Report report = cubal::run_suite(suite);
    CHECK(report.ok());
    CHECK(!report.results.empty());
  }
  CHECK_THROWS_WITH_AS(cubal::run_suite("everything"), doctest::Contains("unknown-suite"),
                       std::invalid_argument);
}

TEST_CASE("the nonnegativity suite records sign observations without asserting them") {
  const cubal::Report report = cubal::run_suite("nonnegativity");
  REQUIRE(report.ok());
  // The pushed-in cube is not locally quasi-geometric and its local h-polynomial
  // has negative entries; that must surface as an observation, not a failure.
  CHECK(report.results.contains("observed/nonnegative-local-h/pushed-cube"));
  CHECK(report.results.at("observed/nonnegative-local-h/pushed-cube") == false);
  CHECK(!report.results.contains("nonnegativity/pushed-cube/local-h"));
  CHECK(report.results.at("nonnegativity/grid-2x2/local-h") == true);
}

TEST_CASE("cli computes h-polynomials from emitted corpus files") {
  TempDir dir;
  REQUIRE(run({"corpus", "emit", "boundary-cube", dir.path.string(), "--quiet"}).exit_code == 0);
  REQUIRE(run({"corpus", "emit", "segment-2", dir.path.string(), "--quiet"}).exit_code == 0);

  const CliRun hvec = run({"hvec", dir.file("boundary-cube.json"), "--kind", "short"});
  CHECK(hvec.exit_code == 0);
  CHECK(hvec.out == "h-short-cubical(d=2) = [8, 8, 8]\n");

  const CliRun seg = run({"hvec", dir.file("segment-2.json"), "--kind", "short"});
  CHECK(seg.exit_code == 2);  // a subdivision file is not a complex
  const CliRun segl = run({"localh", dir.file("segment-2.json")});
  CHECK(segl.exit_code == 0);
  CHECK(segl.out == "local-h-short(d=1) = [2, 2]\n");

  SUBCASE("the long kind pads one slot further") {
    REQUIRE(run({"corpus", "emit", "schlegel-2", dir.path.string(), "--quiet"}).exit_code == 0);
    const CliRun lng = run({"localh", dir.file("schlegel-2.json"), "--kind", "long"});
    CHECK(lng.exit_code == 0);
    CHECK(lng.out == "local-h-long(d=2) = [0, 4, 4, 0]\n");
  }

  SUBCASE("general local h works on formal and lifted subdivision files") {
    REQUIRE(run({"corpus", "emit", "interval-simplex-3", dir.path.string(), "--quiet"}).exit_code ==
            0);
    const CliRun gen = run({"localh", dir.file("interval-simplex-3.json"), "--kind", "general"});
    CHECK(gen.exit_code == 0);
    CHECK(gen.out == "local-h-general(d=2) = [1, 1, 1]\n");

    const CliRun lifted = run({"localh", dir.file("segment-2.json"), "--kind", "general"});
    CHECK(lifted.exit_code == 0);
    CHECK(lifted.out == "local-h-general(d=1) = [2, 2]\n");
  }

  SUBCASE("the general h-polynomial accepts bare poset files") {
    const auto& ann = std::get<FormalSubdivision>(cubal::corpus_entry("annulus").object);
    cubal::write_json_file(dir.file("annulus-q.json"), cubal::poset_to_json(ann.source()));
    const CliRun gen = run({"hvec", dir.file("annulus-q.json"), "--kind", "general"});
    CHECK(gen.exit_code == 0);
    CHECK(gen.out == "h-general(d=2) = [6, 6]\n");
  }

  SUBCASE("kind mismatches exit 2") {
    const CliRun bad = run({"hvec", dir.file("boundary-cube.json"), "--kind", "simplicial"});
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.find("kind-mismatch") != std::string::npos);
  }
}

TEST_CASE("cli flag surface produces the optional sections") {
  TempDir dir;
  REQUIRE(run({"corpus", "emit", "pushed-cube", dir.path.string(), "--quiet"}).exit_code == 0);
  const std::string report_path = dir.file("report.json");

  const CliRun r = run({"localh", dir.file("pushed-cube.json"), "--both-paths", "--contributions",
                        "--predicates", "--json", report_path});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("local-h-short(d=3) = [0, -4, -4, 0]") != std::string::npos);
  CHECK(r.out.find("both-paths (excess formula): agree") != std::string::npos);
  CHECK(r.out.find("locally-quasi-geometric = false") != std::string::npos);

  const Json report = cubal::read_json_file(report_path);
  CHECK(report.at("results").at("local-h").at("coeffs") == Json::array({0, -4, -4, 0}));
  CHECK(report.at("results").at("both-paths") == true);
  CHECK(report.at("results").at("predicates").at("quasi-geometric") == false);
  CHECK(report.at("results").at("contributions").size() ==
        std::get<SubdivisionMap>(cubal::corpus_entry("pushed-cube").object)
            .source()
            .faces_of_dim(0)
            .size());
  CHECK(report.at("failures").empty());

  SUBCASE("quiet suppresses stdout but not the report") {
    const CliRun q = run({"localh", dir.file("pushed-cube.json"), "--quiet", "--json",
                          report_path});
    CHECK(q.exit_code == 0);
    CHECK(q.out.empty());
    CHECK(cubal::read_json_file(report_path).at("results").contains("local-h"));
  }
}

TEST_CASE("cli validation and verification exit codes follow the contract") {
  TempDir dir;
  REQUIRE(run({"corpus", "emit", "segment-1", dir.path.string(), "--quiet"}).exit_code == 0);

  Json corrupted = cubal::read_json_file(dir.file("segment-1.json"));
  corrupted["carrier"]["s1"] = "0";
  cubal::write_json_file(dir.file("corrupted.json"), corrupted);

  CHECK(run({"validate", dir.file("segment-1.json")}).exit_code == 0);
  const CliRun bad = run({"validate", dir.file("corrupted.json")});
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("failure") != std::string::npos);

  CHECK(run({"localh", dir.file("corrupted.json")}).exit_code == 1);
  CHECK(run({"localh", dir.file("corrupted.json"), "--force", "--quiet"}).exit_code == 0);

  CHECK(run({"verify", "symmetry", "--quiet"}).exit_code == 0);
  CHECK(run({"verify", "everything"}).exit_code == 2);

  SUBCASE("parse problems exit 2") {
    std::ofstream(dir.file("broken.json")) << "{nope";
    CHECK(run({"hvec", dir.file("broken.json")}).exit_code == 2);
    CHECK(run({"hvec", dir.file("missing.json")}).exit_code == 2);
    CHECK(run({"frobnicate"}).exit_code == 2);
  }
}

TEST_CASE("emitted corpus files agree with their expected-value companions") {
  TempDir dir;
  REQUIRE(run({"corpus", "emit-all", dir.path.string(), "--quiet"}).exit_code == 0);

  size_t entries = 0;
  for (const auto& entry : cubal::corpus()) {
    ++entries;
    CAPTURE(entry.name);
    REQUIRE(std::filesystem::exists(dir.file(entry.name + ".json")));
    REQUIRE(std::filesystem::exists(dir.file(entry.name + ".expected.json")));

    const Json expected = cubal::read_json_file(dir.file(entry.name + ".expected.json"));
    CHECK(expected.at("name") == entry.name);
    CHECK(expected.at("flags").at("locally-quasi-geometric") ==
          entry.metadata.is_locally_quasi_geometric);

    // Reload the instance through the parser and recompute one headline value.
    const cubal::AnyObject object =
        cubal::object_from_json(cubal::read_json_file(dir.file(entry.name + ".json")));
    if (expected.at("expected").contains("h-short")) {
      const auto& k = std::get<FaceComplex>(object);
      CHECK(cubal::polynomial_to_json(cubal::h_short_cubical(k).poly) ==
            expected.at("expected").at("h-short"));
    }
    if (expected.at("expected").contains("local-h-short")) {
      const auto& s = std::get<SubdivisionMap>(object);
      CHECK(cubal::polynomial_to_json(cubal::local_h_short(s).poly) ==
            expected.at("expected").at("local-h-short"));
    }
    if (expected.at("expected").contains("local-h-general")) {
      const auto& f = std::get<FormalSubdivision>(object);
      CHECK(cubal::polynomial_to_json(cubal::local_h_general(f)) ==
            expected.at("expected").at("local-h-general"));
    }
  }
  CHECK(entries == cubal::corpus().size());

  SUBCASE("corpus list names every entry") {
    const CliRun list = run({"corpus", "list"});
    CHECK(list.exit_code == 0);
    for (const auto& entry : cubal::corpus())
      CHECK(list.out.find(entry.name) != std::string::npos);
  }

  SUBCASE("unknown corpus names exit 2") {
    CHECK(run({"corpus", "emit", "no-such-entry", dir.path.string()}).exit_code == 2);
    CHECK(run({"corpus", "frobnicate"}).exit_code == 2);
  }
}
