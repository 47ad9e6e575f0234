#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dousha/evaluator.hpp"
#include "dousha/io.hpp"
#include "dousha/profiler.hpp"
#include "dousha/resolver.hpp"
#include "dousha/synthgen.hpp"

namespace {

using dousha::AnaphorParticle;
using dousha::Corpus;
using dousha::MethodId;

// Exit codes: 2 usage, 3 unreadable or unwritable file, 4 validation
// failure, 5 data error, 6 accuracy floor unmet.
enum ExitCode {
  kOk = 0,
  kUsage = 2,
  kIoError = 3,
  kValidation = 4,
  kDataError = 5,
  kFloorUnmet = 6,
};

struct CliError {
  int code;
  std::string message;
};

struct CommonOpts {
  std::string in_path;
  std::string out_path;
  std::string format = "text";
  std::string particle = "both";

  bool records() const { return format == "records"; }
  std::vector<AnaphorParticle> particles() const {
    if (particle == "ga") return {AnaphorParticle::Ga};
    if (particle == "ha") return {AnaphorParticle::Ha};
    return {AnaphorParticle::Ga, AnaphorParticle::Ha};
  }
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_particle = true) {
  cmd->add_option("--in", opts.in_path, "input corpus file (JSONL)")->required();
  cmd->add_option("--out", opts.out_path, "output file (default: stdout)");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "records"}))
      ->capture_default_str();
  if (with_particle) {
    cmd->add_option("--particle", opts.particle, "anaphor particles to process")
        ->check(CLI::IsMember({"ga", "ha", "both"}))
        ->capture_default_str();
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kIoError, "cannot read '" + path + "'"};
  return in;
}

Corpus load_from(const std::string& path) {
  std::ifstream in = open_input(path);
  try {
    return dousha::load_corpus(in);
  } catch (const dousha::CorpusLoadError& e) {
    throw CliError{kValidation, path + ": " + e.what()};
  }
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw CliError{kIoError, "cannot write '" + out_path + "'"};
  out << content;
  out.flush();
  if (!out.good()) throw CliError{kIoError, "error writing '" + out_path + "'"};
}

// Documents sorted by doc_id so output order never depends on input order.
std::vector<const dousha::Document*> sorted_documents(const Corpus& corpus) {
  std::vector<const dousha::Document*> docs;
  docs.reserve(corpus.documents.size());
  for (const auto& d : corpus.documents) docs.push_back(&d);
  std::sort(docs.begin(), docs.end(),
            [](const auto* a, const auto* b) { return a->doc_id < b->doc_id; });
  return docs;
}

int run_validate(const CommonOpts& opts) {
  std::ifstream in = open_input(opts.in_path);
  dousha::ValidationReport report = dousha::validate_corpus(in);
  std::ostringstream out;
  if (opts.records()) {
    for (const auto& issue : report.issues) {
      nlohmann::ordered_json j;
      j["line"] = issue.line;
      j["doc_id"] = issue.doc_id;
      j["message"] = issue.message;
      out << j.dump() << '\n';
    }
    nlohmann::ordered_json summary;
    summary["documents"] = report.documents;
    summary["issues"] = report.issues.size();
    out << summary.dump() << '\n';
  } else {
    for (const auto& issue : report.issues) {
      out << "line " << issue.line;
      if (!issue.doc_id.empty()) out << " doc '" << issue.doc_id << "'";
      out << ": " << issue.message << '\n';
    }
    out << report.documents << " documents, " << report.issues.size() << " issues\n";
  }
  write_output(opts.out_path, out.str());
  return report.clean() ? kOk : kValidation;
}

struct ResolveOpts {
  CommonOpts common;
  std::string method = "all";
  std::string rule_order;
  std::optional<std::size_t> subject_window;
};

int run_resolve(const ResolveOpts& opts) {
  std::optional<std::vector<dousha::RuleId>> order;
  if (!opts.rule_order.empty()) {
    order = dousha::parse_rule_order(opts.rule_order);
    if (!order) {
      throw CliError{kUsage, "invalid --rule-order '" + opts.rule_order + "'"};
    }
  }
  dousha::ResolveOptions roptions;
  roptions.subject_window = opts.subject_window;

  Corpus corpus = load_from(opts.common.in_path);
  const auto particles = opts.common.particles();
  std::ostringstream out;

  for (const dousha::Document* doc : sorted_documents(corpus)) {
    dousha::DocumentIndex index(*doc);
    for (const auto& entry : index.mentions()) {
      const dousha::Mention& m = *entry.mention;
      if (m.kind != dousha::MentionKind::Anaphor || !m.particle) continue;
      const auto ap = dousha::to_anaphor_particle(*m.particle);
      if (!ap) continue;
      if (std::find(particles.begin(), particles.end(), *ap) == particles.end()) continue;

      const MethodId cascade =
          *ap == AnaphorParticle::Ga ? MethodId::Method2Ga : MethodId::Method3Ha;
      std::vector<MethodId> methods;
      if (opts.method == "scm") {
        methods = {MethodId::Scm};
      } else if (opts.method == "m2") {
        if (cascade != MethodId::Method2Ga) continue;
        methods = {cascade};
      } else if (opts.method == "m3") {
        if (cascade != MethodId::Method3Ha) continue;
        methods = {cascade};
      } else {
        methods = {MethodId::Scm, cascade};
      }

      for (MethodId method : methods) {
        dousha::Resolution res;
        if (order && method != MethodId::Scm) {
          res = dousha::resolve_with_rules(index, m, *order, roptions);
        } else {
          res = dousha::resolve(index, m, method, roptions);
        }
        const bool has_gold = m.gold_ref.has_value();
        const bool correct =
            has_gold && res.predicted && *res.predicted == *m.gold_ref;
        if (opts.common.records()) {
          nlohmann::ordered_json j;
          j["doc_id"] = doc->doc_id;
          j["anaphor_id"] = m.mention_id;
          j["method"] = dousha::method_key(method);
          j["predicted"] = res.predicted ? nlohmann::ordered_json(*res.predicted)
                                         : nlohmann::ordered_json(nullptr);
          j["rule"] = res.rule ? nlohmann::ordered_json(dousha::rule_key(*res.rule))
                               : nlohmann::ordered_json(nullptr);
          if (has_gold) j["correct"] = correct;
          out << j.dump() << '\n';
        } else {
          out << doc->doc_id << '\t' << m.mention_id << '\t'
              << dousha::method_key(method) << '\t'
              << (res.predicted ? *res.predicted : "-") << '\t'
              << (res.rule ? dousha::rule_key(*res.rule) : "-") << '\t'
              << (has_gold ? (correct ? "correct" : "wrong") : "-") << '\n';
        }
      }
    }
  }
  write_output(opts.common.out_path, out.str());
  return kOk;
}

struct EvaluateOpts {
  CommonOpts common;
  std::string method;  // empty: comparison grid
  bool grid = false;
  bool by_location = false;
  bool by_rule = false;
  std::optional<double> min_accuracy;
  std::optional<std::size_t> subject_window;
};

int run_evaluate(const EvaluateOpts& opts) {
  dousha::ResolveOptions roptions;
  roptions.subject_window = opts.subject_window;
  Corpus corpus = load_from(opts.common.in_path);

  std::vector<dousha::EvalReport> reports;
  std::ostringstream out;
  if (opts.grid || opts.method.empty()) {
    dousha::MethodComparison cmp = dousha::compare_methods(corpus, roptions);
    out << (opts.common.records() ? dousha::comparison_records(cmp)
                                  : dousha::render_comparison(cmp));
    reports = {cmp.scm_ga, cmp.cascade_ga, cmp.scm_ha, cmp.cascade_ha};
  } else {
    const auto method = dousha::parse_method(opts.method);
    if (!method) throw CliError{kUsage, "unknown method '" + opts.method + "'"};
    std::vector<AnaphorParticle> particles = opts.common.particles();
    if (*method == MethodId::Method2Ga) particles = {AnaphorParticle::Ga};
    if (*method == MethodId::Method3Ha) particles = {AnaphorParticle::Ha};
    if (opts.common.particle == "ga" && *method == MethodId::Method3Ha) {
      throw CliError{kUsage, "method m3 only evaluates ha anaphors"};
    }
    if (opts.common.particle == "ha" && *method == MethodId::Method2Ga) {
      throw CliError{kUsage, "method m2 only evaluates ga anaphors"};
    }
    for (AnaphorParticle p : particles) {
      reports.push_back(dousha::evaluate(corpus, *method, p, roptions));
    }
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (opts.common.records()) {
        out << dousha::eval_record(reports[i], opts.by_location, opts.by_rule);
      } else {
        if (i > 0) out << '\n';
        out << dousha::render_report(reports[i], opts.by_location, opts.by_rule);
      }
    }
  }
  write_output(opts.common.out_path, out.str());

  if (opts.min_accuracy) {
    for (const auto& r : reports) {
      if (!r.accuracy || *r.accuracy < *opts.min_accuracy) return kFloorUnmet;
    }
  }
  return kOk;
}

int run_profile(const CommonOpts& opts) {
  Corpus corpus = load_from(opts.in_path);
  std::ostringstream out;
  bool first = true;
  for (AnaphorParticle p : opts.particles()) {
    dousha::LocationContextProfile prof = dousha::profile(corpus, p);
    if (opts.records()) {
      out << dousha::profile_records(prof);
    } else {
      if (!first) out << '\n';
      out << dousha::render_profile(prof);
    }
    first = false;
  }
  dousha::DistantReferentStat stat = dousha::distant_particle_stat(corpus);
  if (opts.records()) {
    out << dousha::distant_stat_record(stat);
  } else {
    out << '\n' << dousha::render_distant_stat(stat);
  }
  write_output(opts.out_path, out.str());
  return kOk;
}

struct GenerateOpts {
  std::string spec_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
};

int run_generate(const GenerateOpts& opts) {
  std::ifstream in = open_input(opts.spec_path);
  std::vector<dousha::GenSpec> specs;
  try {
    specs = dousha::load_genspecs(in);
  } catch (const dousha::DoushaError& e) {
    throw CliError{kValidation, opts.spec_path + ": " + e.what()};
  }
  if (opts.seed) {
    for (std::size_t i = 0; i < specs.size(); ++i) {
      specs[i].seed = *opts.seed + i;
    }
  }
  Corpus corpus = dousha::generate_corpus(specs);
  std::ostringstream out;
  dousha::serialize_corpus(corpus, out);
  write_output(opts.out_path, out.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reference resolution toolkit for company anaphors"};
  app.require_subcommand(1);

  CommonOpts validate_opts;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check a corpus file, report every issue");
  add_common(validate_cmd, validate_opts, false);

  ResolveOpts resolve_opts;
  CLI::App* resolve_cmd =
      app.add_subcommand("resolve", "predict referents for each anaphor");
  add_common(resolve_cmd, resolve_opts.common);
  resolve_cmd->add_option("--method", resolve_opts.method,
                          "scm, m2, m3, or all (baseline plus matching cascade)")
      ->check(CLI::IsMember({"scm", "m2", "m3", "all"}))
      ->capture_default_str();
  resolve_cmd->add_option("--rule-order", resolve_opts.rule_order,
                          "comma-separated cascade override, e.g. "
                          "'subject_particle_closest,closest_fallback'");
  resolve_cmd->add_option("--subject-window", resolve_opts.subject_window,
                          "max sentences back for the subject-particle rule");

  EvaluateOpts evaluate_opts;
  CLI::App* evaluate_cmd =
      app.add_subcommand("evaluate", "score methods against gold links");
  add_common(evaluate_cmd, evaluate_opts.common);
  evaluate_cmd->add_option("--method", evaluate_opts.method,
                           "scm, m2, or m3; omit for the comparison grid");
  evaluate_cmd->add_flag("--grid", evaluate_opts.grid,
                         "baseline vs cascade grid for both particles");
  evaluate_cmd->add_flag("--by-location", evaluate_opts.by_location,
                         "break scores down by referent location");
  evaluate_cmd->add_flag("--by-rule", evaluate_opts.by_rule,
                         "break scores down by fired rule");
  evaluate_cmd->add_option("--min-accuracy", evaluate_opts.min_accuracy,
                           "exit 6 unless every reported accuracy reaches this");
  evaluate_cmd->add_option("--subject-window", evaluate_opts.subject_window,
                           "max sentences back for the subject-particle rule");

  CommonOpts profile_opts;
  CLI::App* profile_cmd = app.add_subcommand(
      "profile", "location/context matrix of gold referents plus distant-referent stat");
  add_common(profile_cmd, profile_opts);

  GenerateOpts generate_opts;
  CLI::App* generate_cmd =
      app.add_subcommand("generate", "build a synthetic corpus from a genspec file");
  generate_cmd->add_option("--spec", generate_opts.spec_path, "genspec file (JSONL)")
      ->required();
  generate_cmd->add_option("--out", generate_opts.out_path,
                           "output corpus file (default: stdout)");
  generate_cmd->add_option("--seed", generate_opts.seed,
                           "override spec seeds with this base plus the record index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate_cmd) return run_validate(validate_opts);
    if (*resolve_cmd) return run_resolve(resolve_opts);
    if (*evaluate_cmd) return run_evaluate(evaluate_opts);
    if (*profile_cmd) return run_profile(profile_opts);
    if (*generate_cmd) return run_generate(generate_opts);
  } catch (const CliError& e) {
    std::cerr << "dousha: " << e.message << '\n';
    return e.code;
  } catch (const dousha::DoushaError& e) {
    std::cerr << "dousha: " << e.what() << '\n';
    return kDataError;
  } catch (const std::exception& e) {
    std::cerr << "dousha: " << e.what() << '\n';
    return kDataError;
  }
  return kUsage;
}
