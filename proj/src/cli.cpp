#include "cubal/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "cubal/corpus.hpp"
#include "cubal/enumeration.hpp"
#include "cubal/formal.hpp"
#include "cubal/io.hpp"
#include "cubal/subdivision.hpp"
#include "cubal/verify.hpp"

namespace cubal {

namespace {

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("parse-error: cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/** Shared per-invocation state: streams, report and the global flags. */
struct Context {
  std::ostream& out;
  std::ostream& err;
  bool quiet = false;
  std::string json_path;
  Report report;

  void say(const std::string& line) {
    if (!quiet) out << line << '\n';
  }

  Json load(const std::string& path) {
    const std::string bytes = read_bytes(path);
    report.inputs[path] = fnv1a_digest(bytes);
    try {
      return Json::parse(bytes);
    } catch (const std::exception& e) {
      throw std::invalid_argument("parse-error: file '" + path + "' is not valid JSON: " +
                                  e.what());
    }
  }

  int finish() {
    if (!json_path.empty()) write_json_file(json_path, report_to_json(report));
    if (!report.ok()) {
      for (const auto& f : report.failures)
        say("failure " + f.check + (f.location.empty() ? "" : " at " + f.location) + ": " +
            f.detail);
      say(std::to_string(report.failures.size()) + " check(s) failed");
      return 1;
    }
    return 0;
  }
};

Json coeff_array(const Polynomial& p, int pad_to = 0) {
  Json out = polynomial_to_json(p);
  while (static_cast<int>(out.size()) < pad_to) out.push_back(0);
  return out;
}

std::string bracket(const Json& array) {
  std::string s = "[";
  for (size_t i = 0; i < array.size(); ++i) {
    if (i > 0) s += ", ";
    s += array[i].is_string() ? array[i].get<std::string>() : array[i].dump();
  }
  return s + "]";
}

[[noreturn]] void kind_mismatch(const std::string& wanted, const std::string& got) {
  throw std::invalid_argument("kind-mismatch: --kind " + wanted + " needs " + got);
}

// ---------------------------------------------------------------------------
// hvec
// ---------------------------------------------------------------------------

int cmd_hvec(Context& ctx, const std::string& file, const std::string& kind, bool interior,
             bool links, bool euler) {
  const AnyObject object = object_from_json(ctx.load(file));
  const FaceComplex* k = std::get_if<FaceComplex>(&object);

  std::string label;
  HVector h;
  if (kind == "simplicial") {
    if (k == nullptr || k->kind() != ComplexKind::simplicial)
      kind_mismatch(kind, "a simplicial complex file");
    label = "h-simplicial";
    h = h_simplicial(*k);
  } else if (kind == "short" || kind == "long") {
    if (k == nullptr || k->kind() != ComplexKind::cubical)
      kind_mismatch(kind, "a cubical complex file");
    label = kind == "short" ? "h-short-cubical" : "h-long-cubical";
    h = kind == "short" ? h_short_cubical(*k) : h_long_cubical(*k);
  } else {  // general
    label = "h-general";
    if (k != nullptr) {
      h = h_general(k->nonempty_face_poset());
    } else if (const Poset* p = std::get_if<Poset>(&object)) {
      h = h_general(*p);
    } else {
      kind_mismatch(kind, "a complex or poset file");
    }
  }

  ctx.report.results["h"] = hvector_to_json(label, h.poly, h.d);
  ctx.say(label + "(d=" + std::to_string(h.d) + ") = " + bracket(coeff_array(h.poly)));

  if (interior) {
    if (kind == "simplicial" || kind == "short") {
      const HVector in = kind == "simplicial" ? h_simplicial_interior(*k)
                                              : h_short_cubical_interior(*k);
      ctx.report.results["interior"] = hvector_to_json(label + "-interior", in.poly, in.d);
      ctx.say(label + "-interior(d=" + std::to_string(in.d) + ") = " +
              bracket(coeff_array(in.poly)));
    } else {
      ctx.report.notes.push_back("--interior applies to the simplicial and short kinds only");
    }
  }
  if (links) {
    if (k != nullptr && k->kind() == ComplexKind::cubical) {
      Json per_vertex = Json::object();
      for (const auto& [v, link_h] : hetyei_decomposition(*k)) {
        per_vertex[k->id_of(v)] = coeff_array(link_h.poly);
        ctx.say("link(" + k->id_of(v) + ") = " + bracket(coeff_array(link_h.poly)));
      }
      ctx.report.results["links"] = std::move(per_vertex);
    } else {
      ctx.report.notes.push_back("--links applies to cubical complex files only");
    }
  }
  if (euler) {
    if (k != nullptr) {
      const long long chi = reduced_euler(*k);
      ctx.report.results["reduced-euler"] = chi;
      ctx.say("reduced-euler = " + std::to_string(chi));
    } else {
      ctx.report.notes.push_back("--euler applies to complex files only");
    }
  }
  return ctx.finish();
}

// ---------------------------------------------------------------------------
// localh
// ---------------------------------------------------------------------------

int cmd_localh(Context& ctx, const std::string& file, const std::string& kind, bool both_paths,
               bool contributions, bool predicates, bool force) {
  const AnyObject object = object_from_json(ctx.load(file));
  const SubdivisionMap* s = std::get_if<SubdivisionMap>(&object);
  const FormalSubdivision* formal = std::get_if<FormalSubdivision>(&object);

  if (kind == "general") {
    if (s == nullptr && formal == nullptr)
      kind_mismatch(kind, "a subdivision or formal subdivision file");
  } else if (s == nullptr) {
    kind_mismatch(kind, "a subdivision file");
  }

  // Validate before computing; --force demotes failures to echoed notes.
  ValidationReport validation;
  if (s != nullptr)
    validation = validate_subdivision(*s);
  else
    validation = validate_formal(*formal);
  if (!validation.ok()) {
    for (const auto& issue : validation.issues) {
      if (force)
        ctx.report.notes.push_back("ignored (--force) " + issue.check + " at " + issue.location +
                                   ": " + issue.detail);
      else
        ctx.report.failures.push_back(issue);
    }
    if (!force) {
      ctx.report.results["validation"] = "failed";
      return ctx.finish();
    }
  }

  if (kind == "short" || kind == "long") {
    const LocalHVector ell = kind == "short" ? local_h_short(*s) : local_h_long(*s);
    const int width = ell.d + (kind == "short" ? 1 : 2);
    const std::string label = kind == "short" ? "local-h-short" : "local-h-long";
    ctx.report.results["local-h"] = hvector_to_json(label, ell.poly, ell.d);
    ctx.report.results["local-h"]["coeffs"] = coeff_array(ell.poly, width);
    ctx.say(label + "(d=" + std::to_string(ell.d) + ") = " +
            bracket(coeff_array(ell.poly, width)));

    if (both_paths) {
      bool agree;
      std::string how;
      if (kind == "short") {
        agree = local_h_short_via_excess(*s).poly == ell.poly;
        how = "excess formula";
      } else {
        agree = short_long_relation_check(*s);
        how = "short-long bridge relation";
      }
      ctx.report.results["both-paths"] = agree;
      if (!agree) ctx.report.fail("both-paths", file, how + " disagrees with the defining sum");
      ctx.say(std::string("both-paths (") + how + "): " + (agree ? "agree" : "DISAGREE"));
    }
    if (contributions) {
      if (kind == "short") {
        Json per_vertex = Json::object();
        Polynomial sum;
        for (int v : s->source().faces_of_dim(0)) {
          const Polynomial c = vertex_contribution(*s, v);
          sum = sum + c;
          per_vertex[s->source().id_of(v)] = coeff_array(c, width);
          ctx.say("contribution(" + s->source().id_of(v) + ") = " + bracket(coeff_array(c, width)));
        }
        ctx.report.results["contributions"] = std::move(per_vertex);
        if (sum != ell.poly)
          ctx.report.fail("contributions", file,
                          "vertex contributions do not sum to the local h-polynomial");
      } else {
        ctx.report.notes.push_back("--contributions applies to the short kind only");
      }
    }
  } else {  // general
    Polynomial ell;
    int d = 0;
    if (formal != nullptr) {
      ell = local_h_general(*formal);
      d = formal->target().length();
    } else {
      const FormalSubdivision lifted = lift_to_formal(*s);
      ell = local_h_general(lifted);
      d = lifted.target().length();
    }
    ctx.report.results["local-h"] = hvector_to_json("local-h-general", ell, d);
    ctx.report.results["local-h"]["coeffs"] = coeff_array(ell, d + 1);
    ctx.say("local-h-general(d=" + std::to_string(d) + ") = " + bracket(coeff_array(ell, d + 1)));
    if (both_paths)
      ctx.report.notes.push_back("--both-paths applies to the short and long kinds only");
    if (contributions)
      ctx.report.notes.push_back("--contributions applies to the short kind only");
  }

  if (predicates) {
    if (s != nullptr) {
      const bool lqg = is_locally_quasi_geometric(*s);
      const bool qg = is_quasi_geometric(*s);
      Json p = Json::object();
      p["locally-quasi-geometric"] = lqg;
      p["quasi-geometric"] = qg;
      ctx.report.results["predicates"] = std::move(p);
      ctx.say(std::string("locally-quasi-geometric = ") + (lqg ? "true" : "false"));
      ctx.say(std::string("quasi-geometric = ") + (qg ? "true" : "false"));
    } else {
      ctx.report.notes.push_back("--predicates applies to face-level subdivision files only");
    }
  }
  return ctx.finish();
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

int cmd_validate(Context& ctx, const std::string& file) {
  const AnyObject object = object_from_json(ctx.load(file));
  ValidationReport validation;
  if (const auto* k = std::get_if<FaceComplex>(&object)) {
    validation = k->validate();
  } else if (const auto* s = std::get_if<SubdivisionMap>(&object)) {
    validation = validate_subdivision(*s);
  } else if (const auto* f = std::get_if<FormalSubdivision>(&object)) {
    validation = validate_formal(*f);
  } else {
    const Poset& p = std::get<Poset>(object);
    Json props = Json::object();
    props["lower-graded"] = p.is_lower_graded();
    props["graded"] = p.is_graded();
    props["locally-eulerian"] = p.is_locally_eulerian();
    ctx.report.results["poset"] = std::move(props);
    ctx.say("poset with " + std::to_string(p.size()) + " elements; nothing to validate");
    return ctx.finish();
  }

  ctx.report.failures = validation.issues;
  for (const auto& note : validation.notes) ctx.report.notes.push_back(note);
  ctx.report.results["ok"] = validation.ok();
  ctx.report.results["issue-count"] = validation.issues.size();
  if (validation.ok()) ctx.say("ok");
  return ctx.finish();
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int cmd_verify(Context& ctx, const std::string& suite) {
  Report suite_report = run_suite(suite);
  suite_report.inputs = ctx.report.inputs;
  ctx.report = std::move(suite_report);

  int checks = 0;
  for (const auto& [key, value] : ctx.report.results.items()) {
    (void)value;
    if (key.rfind("observed/", 0) != 0) ++checks;
  }
  ctx.say("suite " + suite + ": " + std::to_string(checks - static_cast<int>(ctx.report.failures.size())) +
          "/" + std::to_string(checks) + " checks passed");
  return ctx.finish();
}

// ---------------------------------------------------------------------------
// corpus
// ---------------------------------------------------------------------------

Json entry_instance_json(const CorpusEntry& entry) {
  if (const auto* k = std::get_if<FaceComplex>(&entry.object)) return complex_to_json(*k);
  if (const auto* s = std::get_if<SubdivisionMap>(&entry.object)) return subdivision_to_json(*s);
  return formal_to_json(std::get<FormalSubdivision>(entry.object));
}

Json entry_expected_json(const CorpusEntry& entry) {
  Json out = Json::object();
  out["name"] = entry.name;
  out["summary"] = entry.summary;
  Json flags = Json::object();
  flags["locally-quasi-geometric"] = entry.metadata.is_locally_quasi_geometric;
  flags["quasi-geometric"] = entry.metadata.is_quasi_geometric;
  flags["geometric"] = entry.metadata.is_geometric;
  flags["experimental"] = entry.metadata.experimental;
  out["flags"] = std::move(flags);
  Json expected = Json::object();
  for (const auto& [key, poly] : entry.metadata.expected) expected[key] = polynomial_to_json(poly);
  out["expected"] = std::move(expected);
  return out;
}

void emit_entry(Context& ctx, const CorpusEntry& entry, const std::filesystem::path& dir) {
  const std::filesystem::path instance = dir / (entry.name + ".json");
  const std::filesystem::path expected = dir / (entry.name + ".expected.json");
  write_json_file(instance.string(), entry_instance_json(entry));
  write_json_file(expected.string(), entry_expected_json(entry));
  ctx.report.results["written"].push_back(instance.string());
  ctx.report.results["written"].push_back(expected.string());
  ctx.say("wrote " + instance.string());
  ctx.say("wrote " + expected.string());
}

int cmd_corpus(Context& ctx, const std::string& action, const std::vector<std::string>& rest) {
  if (action == "list") {
    size_t width = 0;
    for (const auto& entry : corpus()) width = std::max(width, entry.name.size());
    for (const auto& entry : corpus())
      ctx.say(entry.name + std::string(width + 2 - entry.name.size(), ' ') + entry.summary);
    ctx.report.results["entries"] = corpus().size();
    return ctx.finish();
  }
  if (action == "emit") {
    if (rest.empty()) throw std::invalid_argument("usage: corpus emit <name> [outdir]");
    const CorpusEntry& entry = corpus_entry(rest.at(0));
    const std::filesystem::path dir = rest.size() > 1 ? rest.at(1) : ".";
    std::filesystem::create_directories(dir);
    emit_entry(ctx, entry, dir);
    return ctx.finish();
  }
  if (action == "emit-all") {
    if (rest.empty()) throw std::invalid_argument("usage: corpus emit-all <outdir>");
    const std::filesystem::path dir = rest.at(0);
    std::filesystem::create_directories(dir);
    for (const auto& entry : corpus()) emit_entry(ctx, entry, dir);
    ctx.report.results["entries"] = corpus().size();
    return ctx.finish();
  }
  throw std::invalid_argument("unknown corpus action '" + action +
                              "'; expected list, emit or emit-all");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact face-enumeration invariants of cubical and simplicial complexes"};
  app.name("cubal");
  app.require_subcommand(0, 1);

  Context ctx{out, err, false, {}, {}};
  app.add_option("--json", ctx.json_path, "write a machine-readable report to this path");
  app.add_flag("--quiet", ctx.quiet, "suppress human-readable output");

  std::string hvec_file, hvec_kind = "short";
  bool hvec_interior = false, hvec_links = false, hvec_euler = false;
  CLI::App* hvec = app.add_subcommand("hvec", "h-polynomials of a complex or poset file");
  hvec->fallthrough();
  hvec->add_option("file", hvec_file, "input JSON file")->required();
  hvec->add_option("--kind", hvec_kind, "simplicial, short, long or general")
      ->check(CLI::IsMember({"simplicial", "short", "long", "general"}));
  hvec->add_flag("--interior", hvec_interior, "also print the interior h-polynomial");
  hvec->add_flag("--links", hvec_links, "also print each vertex link h-polynomial");
  hvec->add_flag("--euler", hvec_euler, "also print the reduced Euler characteristic");

  std::string localh_file, localh_kind = "short";
  bool localh_both = false, localh_contrib = false, localh_pred = false, localh_force = false;
  CLI::App* localh = app.add_subcommand("localh", "local h-polynomial of a subdivision file");
  localh->fallthrough();
  localh->add_option("file", localh_file, "input JSON file")->required();
  localh->add_option("--kind", localh_kind, "short, long or general")
      ->check(CLI::IsMember({"short", "long", "general"}));
  localh->add_flag("--both-paths", localh_both, "cross-check two computation paths");
  localh->add_flag("--contributions", localh_contrib, "also print per-vertex contributions");
  localh->add_flag("--predicates", localh_pred, "also print the quasi-geometry predicates");
  localh->add_flag("--force", localh_force, "compute even when validation fails");

  std::string validate_file;
  CLI::App* validate = app.add_subcommand("validate", "structural validation of any input file");
  validate->fallthrough();
  validate->add_option("file", validate_file, "input JSON file")->required();

  std::string verify_suite;
  CLI::App* verify = app.add_subcommand("verify", "run an identity suite over the corpus");
  verify->fallthrough();
  verify->add_option("suite", verify_suite,
                     "reciprocity, symmetry, locality, product, nonnegativity, formal or all")
      ->required();

  std::string corpus_action;
  std::vector<std::string> corpus_rest;
  CLI::App* corpus_cmd = app.add_subcommand("corpus", "list or emit the built-in instances");
  corpus_cmd->fallthrough();
  corpus_cmd->add_option("action", corpus_action, "list, emit or emit-all")->required();
  corpus_cmd->add_option("args", corpus_rest, "entry name and/or output directory");

  std::vector<const char*> argv;
  argv.push_back("cubal");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  std::ostringstream command;
  command << "cubal";
  for (const auto& a : args) command << ' ' << a;
  ctx.report.command = command.str();

  try {
    if (hvec->parsed())
      return cmd_hvec(ctx, hvec_file, hvec_kind, hvec_interior, hvec_links, hvec_euler);
    if (localh->parsed())
      return cmd_localh(ctx, localh_file, localh_kind, localh_both, localh_contrib, localh_pred,
                        localh_force);
    if (validate->parsed()) return cmd_validate(ctx, validate_file);
    if (verify->parsed()) return cmd_verify(ctx, verify_suite);
    if (corpus_cmd->parsed()) return cmd_corpus(ctx, corpus_action, corpus_rest);
    out << app.help();
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace cubal
