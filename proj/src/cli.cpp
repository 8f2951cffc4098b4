#include "vghjudge/cli.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vghjudge/errors.hpp"
#include "vghjudge/gsl.hpp"
#include "vghjudge/report.hpp"

namespace vghjudge {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitValidation = 2;
constexpr int kExitEvaluation = 3;

struct SharedFlags {
  std::string pos = "noun";
  std::string metric_name = "wup";
  std::string weights = "constant";
  std::string agg = "max";
  std::string nominalize_path;
  std::string format = "text";
  bool strict = false;
};

void add_shared_flags(CLI::App* cmd, SharedFlags& flags, bool with_csv) {
  cmd->add_option("--pos", flags.pos, "Part of speech of the hierarchy terms")
      ->check(CLI::IsMember({"noun", "verb"}))
      ->capture_default_str();
  cmd->add_option("--metric", flags.metric_name, "Similarity metric")->capture_default_str();
  cmd->add_option("--weights", flags.weights, "Level weight scheme")
      ->check(CLI::IsMember({"constant", "level"}))
      ->capture_default_str();
  cmd->add_option("--agg", flags.agg, "Per-level aggregation of transition losses")
      ->check(CLI::IsMember({"max", "avg"}))
      ->capture_default_str();
  cmd->add_option("--nominalize", flags.nominalize_path,
                  "File of 'adjective => noun' rewrites applied before lookup");
  cmd->add_flag("--strict", flags.strict, "Treat unresolved nodes as evaluation errors");
  std::vector<std::string> formats{"text", "json"};
  if (with_csv) formats.push_back("csv");
  cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
}

GslConfig make_config(const SharedFlags& flags) {
  GslConfig cfg;
  const auto pos = pos_from_string(flags.pos);
  if (!pos) throw ConfigError("unknown part of speech '" + flags.pos + "'");
  cfg.pos = *pos;
  const auto scheme = weight_scheme_from_string(flags.weights);
  if (!scheme) throw ConfigError("unknown weight scheme '" + flags.weights + "'");
  cfg.weights = *scheme;
  const auto agg = aggregation_from_string(flags.agg);
  if (!agg) throw ConfigError("unknown aggregation '" + flags.agg + "'");
  cfg.aggregation = *agg;
  metric(flags.metric_name);  // validates the name now
  cfg.metric_name = flags.metric_name;
  cfg.strict = flags.strict;
  return cfg;
}

NominalizationMap load_nominalizations(const SharedFlags& flags) {
  if (flags.nominalize_path.empty()) return {};
  return NominalizationMap::load_file(flags.nominalize_path);
}

int run_eval(const std::string& vgh_path, const std::string& ontology_path,
             const SharedFlags& flags, std::ostream& out) {
  const GslConfig cfg = make_config(flags);
  const NominalizationMap nominalizations = load_nominalizations(flags);
  const Ontology ontology = Ontology::load_file(ontology_path);
  const Vgh vgh = Vgh::parse_file(vgh_path);
  const GslReport report = evaluate_vgh(vgh, ontology, cfg, nominalizations);
  if (flags.format == "json")
    out << render_json(report);
  else if (flags.format == "csv")
    out << render_csv(report);
  else
    out << render_text(report);
  return kExitOk;
}

int run_compare(const std::vector<std::string>& vgh_paths, const std::string& ontology_path,
                const SharedFlags& flags, std::ostream& out, std::ostream& err) {
  if (vgh_paths.size() < 2) throw ConfigError("compare needs at least two hierarchy files");
  const GslConfig cfg = make_config(flags);
  const NominalizationMap nominalizations = load_nominalizations(flags);
  const Ontology ontology = Ontology::load_file(ontology_path);

  std::vector<Vgh> vghs;
  bool parse_failed = false;
  for (const auto& path : vgh_paths) {
    try {
      vghs.push_back(Vgh::parse_file(path));
    } catch (const ParseError& e) {
      err << "error: " << e.what() << "\n";
      parse_failed = true;
    }
  }
  if (parse_failed) return kExitValidation;

  std::vector<GslReport> reports;
  reports.reserve(vghs.size());
  for (const auto& vgh : vghs) reports.push_back(evaluate_vgh(vgh, ontology, cfg, nominalizations));
  const ComparisonResult result = compare_reports(std::move(reports));
  if (flags.format == "json")
    out << render_json(result);
  else if (flags.format == "csv")
    out << render_csv(result);
  else
    out << render_text(result);
  return kExitOk;
}

int run_lint(const std::string& vgh_path, const std::string& ontology_path,
             const SharedFlags& flags, double privacy_floor, bool warn_as_error,
             std::ostream& out) {
  if (privacy_floor < 0) throw ConfigError("--privacy-floor must be non-negative");
  const GslConfig cfg = make_config(flags);
  const NominalizationMap nominalizations = load_nominalizations(flags);
  const Ontology ontology = Ontology::load_file(ontology_path);
  const Vgh original = Vgh::parse_file(vgh_path);
  const GslReport report = evaluate_vgh(original, ontology, cfg, nominalizations);

  LintOptions opts;
  opts.privacy_floor = privacy_floor;
  const std::vector<LintFinding> findings = lint_report(original, report, opts);
  if (flags.format == "json")
    out << render_json(findings);
  else
    out << render_text(findings);

  const bool any_error = std::any_of(findings.begin(), findings.end(),
                                     [](const LintFinding& f) { return f.severity == Severity::error; });
  if (any_error) return kExitFindings;
  if (!findings.empty() && warn_as_error) return kExitFindings;
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scores value generalization hierarchies against a reference ontology"};
  app.name("vgh-judge");
  app.require_subcommand(1);

  SharedFlags eval_flags, compare_flags, lint_flags;
  std::string eval_vgh, eval_ontology;
  std::string compare_ontology;
  std::vector<std::string> compare_vghs;
  std::string lint_vgh, lint_ontology;
  double privacy_floor = 0.02;
  bool warn_as_error = false;

  CLI::App* eval = app.add_subcommand("eval", "Score one hierarchy");
  eval->add_option("--vgh", eval_vgh, "Hierarchy file (VGF)")->required();
  eval->add_option("--ontology", eval_ontology, "Reference ontology file (OVF)")->required();
  add_shared_flags(eval, eval_flags, /*with_csv=*/true);

  CLI::App* compare = app.add_subcommand("compare", "Score and rank several hierarchies");
  compare->add_option("--ontology", compare_ontology, "Reference ontology file (OVF)")
      ->required();
  compare->add_option("vghs", compare_vghs, "Hierarchy files (VGF)");
  add_shared_flags(compare, compare_flags, /*with_csv=*/true);

  CLI::App* lint = app.add_subcommand("lint", "Report structural and semantic anomalies");
  lint->add_option("--vgh", lint_vgh, "Hierarchy file (VGF)")->required();
  lint->add_option("--ontology", lint_ontology, "Reference ontology file (OVF)")->required();
  add_shared_flags(lint, lint_flags, /*with_csv=*/false);
  lint->add_option("--privacy-floor", privacy_floor,
                   "Flag level-1 transitions losing less than this")
      ->capture_default_str();
  lint->add_flag("--warn-as-error", warn_as_error, "Exit 1 when any finding is reported");

  std::vector<const char*> argv;
  argv.push_back("vgh-judge");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (eval->parsed()) return run_eval(eval_vgh, eval_ontology, eval_flags, out);
    if (compare->parsed())
      return run_compare(compare_vghs, compare_ontology, compare_flags, out, err);
    return run_lint(lint_vgh, lint_ontology, lint_flags, privacy_floor, warn_as_error, out);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const EvalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitEvaluation;
  } catch (const std::exception& e) {  // ParseError, ConfigError, anything else
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace vghjudge
