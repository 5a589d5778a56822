#include "cli.hpp"

#include <omp.h>

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "sset/checks.hpp"
#include "sset/generate.hpp"
#include "sset/groupoid.hpp"
#include "sset/io.hpp"
#include "sset/pi0.hpp"
#include "sset/standard.hpp"

namespace sset::cli {

using nlohmann::ordered_json;

namespace {

constexpr int kHolds = 0;
constexpr int kFailed = 1;
constexpr int kInvalid = 2;

struct Options {
  std::string format = "json";
  std::uint64_t seed = 42;
  std::size_t trials = 500;
  int max_dim = 2;
  int max_cells = 6;
  int jobs = 0;
  int truncation = -1;
  bool no_buffer = false;
  std::string bundle_dir;
  std::string output;
};

std::string scalar(const ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Same layout as render_text(CheckReport): verdict line, witness line, stats.
std::string report_text(const ordered_json& r) {
  std::ostringstream os;
  os << r["stats"]["check"].get<std::string>() << ": " << (r["verdict"].get<bool>() ? "true" : "false") << "\n";
  if (r.contains("witness")) {
    os << "witness: " << r["witness"]["kind"].get<std::string>();
    for (const auto& item : r["witness"].items())
      if (item.key() != "kind") os << " " << item.key() << "=" << scalar(item.value());
    os << "\n";
  }
  for (const auto& item : r["stats"].items())
    if (item.key() != "check" && !(item.value().is_string() && item.value().get<std::string>().empty()))
      os << item.key() << ": " << scalar(item.value()) << "\n";
  return os.str();
}

// Flattened "a.b: value" lines for everything else.
void flatten(const ordered_json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& item : j.items()) flatten(item.value(), prefix.empty() ? item.key() : prefix + "." + item.key(), os);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const auto& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), os);
  } else {
    os << prefix << ": " << scalar(j) << "\n";
  }
}

void emit(const Options& o, std::ostream& out, const ordered_json& j, bool is_report) {
  if (o.format == "text") {
    if (is_report) {
      out << report_text(j);
    } else {
      flatten(j, "", out);
    }
  } else {
    out << j.dump(2) << "\n";
  }
}

bool is_map_document(const ordered_json& j) { return j.is_object() && j.contains("level"); }

GenConfig config_of(const Options& o) {
  GenConfig c;
  c.seed = o.seed;
  c.trials = o.trials;
  c.max_nondegenerate_dim = o.max_dim;
  c.max_cells_per_degree = o.max_cells;
  c.check();
  return c;
}

int cmd_validate(const Options& o, const std::string& file, std::ostream& out) {
  const ordered_json doc = read_json(file);
  const ValidationOptions vo{!o.no_buffer};
  if (!is_map_document(doc)) {
    const ordered_json r = validation_to_json(validate(object_from_json(doc), vo));
    emit(o, out, r, true);
    return r["verdict"].get<bool>() ? kHolds : kFailed;
  }
  const SimplicialMap f = map_from_json(doc, std::filesystem::path(file).parent_path());
  for (const TruncatedSSet* x : {&f.source(), &f.target()}) {
    const ValidationReport r = validate(*x, vo);
    if (!r.ok) {
      ordered_json j = validation_to_json(r);
      j["stats"]["message"] = std::string(x == &f.source() ? "source: " : "target: ") + r.message;
      emit(o, out, j, true);
      return kFailed;
    }
  }
  const ordered_json r = validation_to_json(validate_map(f));
  emit(o, out, r, true);
  return r["verdict"].get<bool>() ? kHolds : kFailed;
}

ordered_json partition_json(const ComponentPartition& p) {
  return {{"components", p.count}, {"vertices", p.components}};
}

int cmd_pi0(const Options& o, const std::string& file, std::ostream& out) {
  const ordered_json doc = read_json(file);
  if (!is_map_document(doc)) {
    emit(o, out, partition_json(pi0(object_from_json(doc))), false);
    return kHolds;
  }
  const SimplicialMap f = map_from_json(doc, std::filesystem::path(file).parent_path());
  const ComponentPartition a = pi0(f.source());
  const ComponentPartition b = pi0(f.target());
  emit(o, out, {{"source", partition_json(a)}, {"target", partition_json(b)}, {"map", pi0_map(f, a, b)}}, false);
  return kHolds;
}

int cmd_pi1(const Options& o, const std::string& file, std::ostream& out) {
  const GroupoidPresentation p = pi1_presentation(read_object(file));
  if (o.format == "text") {
    out << render_presentation(p);
    return kHolds;
  }
  ordered_json arrows = ordered_json::array();
  for (const Arrow& a : p.generators) arrows.push_back({a.source, a.target});
  ordered_json relations = ordered_json::array();
  for (const auto& r : p.relations) {
    if (r.kind == GroupoidPresentation::Relation::Kind::identity)
      relations.push_back({{"kind", "identity"}, {"vertex", r.simplex}, {"arrow", r.lhs}});
    else
      relations.push_back({{"kind", "triangle"}, {"simplex", r.simplex}, {"composite", r.lhs},
                           {"first", r.first}, {"second", r.second}});
  }
  out << ordered_json{{"objects", p.objects}, {"arrows", arrows}, {"relations", relations}}.dump(2) << "\n";
  return kHolds;
}

int cmd_check(const Options& o, const std::string& kind, const std::string& file, std::ostream& out) {
  const SimplicialMap h = read_map(file);
  CheckReport r;
  if (kind == "trivial-covering")
    r = trivial_covering_check(h);
  else if (kind == "covering")
    r = covering_check(h);
  else if (kind == "kan")
    r = kan_check(h);
  else if (kind == "separable-direct")
    r = separable_direct(h);
  else
    r = separable_via_lifting(h);
  if (o.format == "text")
    out << render_text(r);
  else
    out << report_to_json(r).dump(2) << "\n";
  return r.verdict ? kHolds : kFailed;
}

int cmd_verify(const Options& o, const std::string& statement, const std::string& file, std::ostream& out) {
  if (!file.empty()) {
    const SimplicialMap h = read_map(file);
    if (statement == "chain") {
      const ChainReport r = implication_chain(h);
      emit(o, out, chain_to_json(r), false);
      return r.holds ? kHolds : kFailed;
    }
    const AgreementReport r = statement == "theorem1" ? theorem1_verdict(h) : theorem2_verdict(h);
    emit(o, out, agreement_to_json(r), false);
    return r.agree ? kHolds : kFailed;
  }
  const CampaignReport r = run_campaign(config_of(o));
  if (!o.bundle_dir.empty()) write_disagreement_bundles(r, o.bundle_dir);
  emit(o, out, campaign_to_json(r), false);
  bool ok = r.passed();
  if (statement == "theorem1") ok = r.theorem1_disagreements == 0;
  if (statement == "theorem2") ok = r.theorem2_disagreements == 0 && r.kan_covering_missing_lift == 0;
  if (statement == "chain") ok = r.chain_violations == 0;
  return ok ? kHolds : kFailed;
}

void write_document(const Options& o, std::ostream& out, const ordered_json& j) {
  if (o.output.empty())
    out << dump(j);
  else
    write_text(o.output, dump(j));
}

int cmd_gen(const Options& o, const std::string& what, std::ostream& out) {
  const GenConfig c = config_of(o);
  if (what == "object")
    write_document(o, out, object_to_json(gen_sset(c)));
  else
    write_document(o, out, map_to_json(gen_morphism(c)));
  return kHolds;
}

int cmd_standard(const Options& o, const std::string& spec, const std::string& fixture, std::ostream& out) {
  if (!fixture.empty()) {
    write_document(o, out, map_to_json(build_fixture(fixture)));
    return kHolds;
  }
  if (spec.empty()) throw InputError("standard needs an object spec or --map <fixture>");
  const StandardObjectSpec s = StandardObjectSpec::parse(spec);
  s.check();
  const int n = o.truncation < 0 ? s.nondegenerate_dim() + 1 : o.truncation;
  write_document(o, out, object_to_json(build_standard(s, n)));
  return kHolds;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite simplicial sets: validation, components, and covering/separability checks"};
  app.name("sset");
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("--format", o.format, "Report rendering")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", o.jobs, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);

  std::string file, kind, statement, what, spec, fixture;

  auto* validate_cmd = app.add_subcommand("validate", "Check the simplicial identities of an object or map file");
  validate_cmd->add_option("file", file)->required();
  validate_cmd->add_flag("--no-buffer", o.no_buffer, "Allow nondegenerate simplices in the top degree");

  auto* pi0_cmd = app.add_subcommand("pi0", "Connected components of an object (or the induced map)");
  pi0_cmd->add_option("file", file)->required();

  auto* pi1_cmd = app.add_subcommand("pi1", "Fundamental groupoid presentation of an object");
  pi1_cmd->add_option("file", file)->required();

  auto* check_cmd = app.add_subcommand("check", "Run one check on a map file");
  check_cmd->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"trivial-covering", "covering", "kan", "separable-direct", "separable-lifting"}));
  check_cmd->add_option("file", file)->required();

  auto add_gen_options = [&](CLI::App* c) {
    c->add_option("--seed", o.seed);
    c->add_option("--max-dim", o.max_dim);
    c->add_option("--max-cells", o.max_cells);
  };

  auto* verify_cmd = app.add_subcommand("verify", "Equivalence verdicts on a map file, or a random campaign");
  verify_cmd->add_option("statement", statement)->required()->check(CLI::IsMember({"theorem1", "theorem2", "chain"}));
  verify_cmd->add_option("file", file);
  add_gen_options(verify_cmd);
  verify_cmd->add_option("--trials", o.trials);
  verify_cmd->add_option("--bundle-dir", o.bundle_dir, "Write disagreement bundles here");

  auto* gen_cmd = app.add_subcommand("gen", "Generate a random object or map");
  gen_cmd->add_option("what", what)->required()->check(CLI::IsMember({"object", "map"}));
  add_gen_options(gen_cmd);
  gen_cmd->add_option("-o,--output", o.output);

  auto* standard_cmd = app.add_subcommand("standard", "Emit a standard object or a named fixture map");
  standard_cmd->add_option("spec", spec, "e.g. simplex:2, horn:2:1, circle, cyclic-cover:3, simplex:1+circle");
  standard_cmd->add_option("--map", fixture, "Fixture name, e.g. cyclic-cover:2, fold:simplex:1");
  standard_cmd->add_option("--truncation", o.truncation);
  standard_cmd->add_option("-o,--output", o.output);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }

  try {
    if (o.jobs > 0) omp_set_num_threads(o.jobs);
    if (validate_cmd->parsed()) return cmd_validate(o, file, out);
    if (pi0_cmd->parsed()) return cmd_pi0(o, file, out);
    if (pi1_cmd->parsed()) return cmd_pi1(o, file, out);
    if (check_cmd->parsed()) return cmd_check(o, kind, file, out);
    if (verify_cmd->parsed()) return cmd_verify(o, statement, file, out);
    if (gen_cmd->parsed()) return cmd_gen(o, what, out);
    if (standard_cmd->parsed()) return cmd_standard(o, spec, fixture, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace sset::cli
