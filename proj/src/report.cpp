#include "vghjudge/report.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "vghjudge/text.hpp"

namespace vghjudge {

using nlohmann::json;

ComparisonResult compare_reports(std::vector<GslReport> reports) {
  ComparisonResult result;
  result.reports = std::move(reports);

  std::vector<std::size_t> order(result.reports.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return result.reports[a].vgh_gsl < result.reports[b].vgh_gsl;
  });
  for (auto i : order) result.ranking.push_back(result.reports[i].vgh_name);

  int max_height = 0;
  for (const auto& r : result.reports) max_height = std::max(max_height, r.height);
  for (int level = 1; level <= max_height; ++level) {
    const GslReport* best = nullptr;
    double best_raw = 0.0;
    for (const auto& r : result.reports) {
      if (level > r.height) continue;
      const double raw = r.levels[static_cast<std::size_t>(level - 1)].raw;
      if (!best || raw < best_raw) {
        best = &r;
        best_raw = raw;
      }
    }
    if (best) result.per_level_winner.push_back({level, best->vgh_name});
  }
  return result;
}

std::string_view to_string(FindingKind kind) {
  switch (kind) {
    case FindingKind::peak: return "peak";
    case FindingKind::unbalanced: return "unbalanced";
    case FindingKind::unresolved: return "unresolved";
    case FindingKind::sister_term: return "sister_term";
    case FindingKind::near_synonym: return "near_synonym";
  }
  return "unknown";
}

std::string_view to_string(Severity severity) {
  return severity == Severity::warn ? "warn" : "error";
}

std::vector<LintFinding> lint_report(const Vgh& original, const GslReport& r,
                                     const LintOptions& opts) {
  std::vector<LintFinding> findings;

  // Shallow leaves in the tree as authored.
  std::vector<std::string> shallow;
  for (const NodeId leaf : original.leaves_any_depth())
    if (original.node(leaf).depth != original.height())
      shallow.push_back(original.node(leaf).term);
  if (!shallow.empty()) {
    std::string detail = "leaf depths differ; shallow leaves replicated during scoring:";
    for (const auto& term : shallow) detail += " " + term;
    findings.push_back({FindingKind::unbalanced, "tree", detail, Severity::warn});
  }

  for (const auto& d : r.diagnostics)
    if (d.kind == "unresolved")
      findings.push_back({FindingKind::unresolved, "node", d.detail, Severity::error});

  // Peaks on the raw per-level scores under the configured aggregation.
  for (std::size_t i = 0; i + 1 < r.levels.size(); ++i) {
    if (r.levels[i].raw > r.levels[i + 1].raw) {
      findings.push_back(
          {FindingKind::peak, "level " + std::to_string(r.levels[i].level),
           "score " + fixed4(r.levels[i].raw) + " exceeds level " +
               std::to_string(r.levels[i + 1].level) + "'s " + fixed4(r.levels[i + 1].raw) +
               ": a child concept is less specific than its parent",
           Severity::warn});
    }
  }

  // Sister terms, grouped per ancestor node.
  std::vector<NodeId> sister_order;
  std::unordered_map<NodeId, std::vector<std::string>> sister_leaves;
  std::unordered_map<NodeId, std::string> sister_terms;
  std::unordered_map<NodeId, int> sister_level;
  for (const auto& s : r.matrix) {
    if (!s.resolved || !s.sister_term) continue;
    if (!sister_leaves.count(s.ancestor)) {
      sister_order.push_back(s.ancestor);
      sister_terms[s.ancestor] = s.ancestor_term;
      sister_level[s.ancestor] = s.level;
    }
    sister_leaves[s.ancestor].push_back(s.leaf_term);
  }
  for (const NodeId ancestor : sister_order) {
    std::string detail = "'" + sister_terms[ancestor] +
                         "' lies outside the hypernym tree of:";
    for (const auto& leaf : sister_leaves[ancestor]) detail += " " + leaf;
    findings.push_back({FindingKind::sister_term,
                        "level " + std::to_string(sister_level[ancestor]), detail,
                        Severity::warn});
  }

  // Privacy-weak level-1 generalizations; replication self-chains are an
  // artifact of balancing, not authored transitions.
  for (const auto& s : r.matrix) {
    if (s.level != 1 || !s.resolved || s.replication) continue;
    if (s.loss < opts.privacy_floor) {
      findings.push_back(
          {FindingKind::near_synonym, "level 1",
           s.leaf_term + " -> " + s.ancestor_term + " loses only " + fixed4(s.loss) +
               "; generalized data may stay identifiable",
           Severity::warn});
    }
  }

  return findings;
}

namespace {

json config_json(const GslConfig& cfg) {
  return json{{"metric", cfg.metric_name},
              {"pos", std::string(pos_name(cfg.pos))},
              {"weights", std::string(to_string(cfg.weights))},
              {"agg", std::string(to_string(cfg.aggregation))},
              {"strict", cfg.strict}};
}

json report_json(const GslReport& r) {
  json matrix = json::array();
  for (const auto& s : r.matrix) {
    json cell{{"leaf", s.leaf_term},
              {"ancestor", s.ancestor_term},
              {"level", s.level},
              {"sister_term", s.sister_term},
              {"replicated", s.replication}};
    if (s.resolved)
      cell["trans_gsl"] = s.loss;
    else
      cell["trans_gsl"] = nullptr;
    matrix.push_back(std::move(cell));
  }

  json levels = json::array();
  for (const auto& l : r.levels)
    levels.push_back(json{{"level", l.level},
                          {"raw_max", l.raw_max},
                          {"raw_avg", l.raw_avg},
                          {"stddev", l.stddev},
                          {"weight", l.weight},
                          {"contribution", l.contribution}});

  json diagnostics = json::array();
  for (const auto& d : r.diagnostics)
    diagnostics.push_back(json{{"kind", d.kind}, {"detail", d.detail}});

  return json{{"vgh_name", r.vgh_name}, {"height", r.height},
              {"config", config_json(r.config)}, {"matrix", std::move(matrix)},
              {"levels", std::move(levels)},    {"vgh_gsl", r.vgh_gsl},
              {"diagnostics", std::move(diagnostics)}};
}

void append_column(std::string& line, const std::string& value, std::size_t width) {
  line += value;
  if (value.size() < width) line.append(width - value.size(), ' ');
}

std::string matrix_text(const GslReport& r) {
  const TransitionTable table = transition_matrix(r);
  if (table.row_labels.empty()) return {};

  std::size_t leaf_width = 4;
  for (const auto& label : table.row_labels) leaf_width = std::max(leaf_width, label.size());
  std::vector<std::string> headers;
  std::vector<std::size_t> widths;
  for (std::size_t c = 0; c < table.column_labels.size(); ++c) {
    headers.push_back("L" + std::to_string(table.column_levels[c]) + ":" +
                      table.column_labels[c]);
    widths.push_back(std::max<std::size_t>(headers.back().size(), 6));
  }

  std::string out;
  std::string line;
  append_column(line, "leaf", leaf_width + 2);
  for (std::size_t c = 0; c < headers.size(); ++c) append_column(line, headers[c], widths[c] + 2);
  out += line + "\n";
  for (std::size_t row = 0; row < table.row_labels.size(); ++row) {
    line.clear();
    append_column(line, table.row_labels[row], leaf_width + 2);
    for (std::size_t c = 0; c < headers.size(); ++c) {
      const auto& cell = table.cells[row][c];
      append_column(line, cell ? fixed4(*cell) : "-", widths[c] + 2);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string levels_text(const GslReport& r) {
  std::string out;
  out += "level  raw_max  raw_avg  stddev  weight  contribution  worst transition\n";
  for (const auto& l : r.levels) {
    std::ostringstream row;
    row << std::left << std::setw(7) << l.level << std::setw(9) << fixed4(l.raw_max)
        << std::setw(9) << fixed4(l.raw_avg) << std::setw(8) << fixed4(l.stddev)
        << std::setw(8) << fixed4(l.weight) << std::setw(14) << fixed4(l.contribution)
        << l.max_leaf_term << " -> " << l.max_ancestor_term;
    out += row.str() + "\n";
  }
  return out;
}

}  // namespace

std::string render_text(const GslReport& r) {
  std::string out;
  out += "VGH: " + r.vgh_name + " (height " + std::to_string(r.height) + ")\n";
  out += "config: metric=" + r.config.metric_name + " pos=" + std::string(pos_name(r.config.pos)) +
         " weights=" + std::string(to_string(r.config.weights)) +
         " agg=" + std::string(to_string(r.config.aggregation)) +
         (r.config.strict ? " strict=on" : " strict=off") + "\n\n";
  const std::string matrix = matrix_text(r);
  if (!matrix.empty()) out += matrix + "\n";
  if (!r.levels.empty()) out += levels_text(r);
  out += "VghGSL: " + fixed4(r.vgh_gsl) + "\n";
  if (!r.diagnostics.empty()) {
    out += "\ndiagnostics:\n";
    for (const auto& d : r.diagnostics) out += "  - " + d.kind + ": " + d.detail + "\n";
  }
  return out;
}

std::string render_text(const ComparisonResult& c) {
  std::string out;
  for (const auto& r : c.reports) {
    out += "VGH: " + r.vgh_name + "\n";
    out += "level  raw      weight  contribution  worst transition\n";
    for (const auto& l : r.levels) {
      std::ostringstream row;
      row << std::left << std::setw(7) << l.level << std::setw(9) << fixed4(l.raw)
          << std::setw(8) << fixed4(l.weight) << std::setw(14) << fixed4(l.contribution)
          << l.max_leaf_term << " -> " << l.max_ancestor_term;
      out += row.str() + "\n";
    }
    out += "VghGSL: " + fixed4(r.vgh_gsl) + "\n\n";
  }
  out += "ranking:";
  for (std::size_t i = 0; i < c.ranking.size(); ++i) {
    const auto it = std::find_if(c.reports.begin(), c.reports.end(),
                                 [&](const GslReport& r) { return r.vgh_name == c.ranking[i]; });
    out += (i ? "  " : " ") + c.ranking[i] + " (" + fixed4(it->vgh_gsl) + ")";
  }
  out += "\nper-level winners:";
  for (const auto& w : c.per_level_winner)
    out += " L" + std::to_string(w.level) + ":" + w.vgh;
  out += "\n";
  return out;
}

std::string render_text(const std::vector<LintFinding>& findings) {
  if (findings.empty()) return "no findings\n";
  std::string out;
  for (const auto& f : findings) {
    std::ostringstream row;
    row << std::left << std::setw(7) << to_string(f.severity) << std::setw(14)
        << to_string(f.kind) << f.location << ": " << f.detail;
    out += row.str() + "\n";
  }
  return out;
}

std::string render_json(const GslReport& r) { return report_json(r).dump(2) + "\n"; }

std::string render_json(const ComparisonResult& c) {
  json reports = json::array();
  for (const auto& r : c.reports) reports.push_back(report_json(r));
  json winners = json::array();
  for (const auto& w : c.per_level_winner)
    winners.push_back(json{{"level", w.level}, {"vgh", w.vgh}});
  return json{{"reports", std::move(reports)},
              {"ranking", c.ranking},
              {"per_level_winner", std::move(winners)}}
             .dump(2) +
         "\n";
}

std::string render_json(const std::vector<LintFinding>& findings) {
  json out = json::array();
  for (const auto& f : findings)
    out.push_back(json{{"kind", std::string(to_string(f.kind))},
                       {"severity", std::string(to_string(f.severity))},
                       {"location", f.location},
                       {"detail", f.detail}});
  return out.dump(2) + "\n";
}

namespace {

std::string csv_rows(const GslReport& r) {
  std::string out;
  for (const auto& l : r.levels) {
    out += r.vgh_name + "," + std::to_string(l.level) + "," + fixed4(l.raw) + "," +
           fixed4(l.weight) + "," + fixed4(l.contribution) + "\n";
  }
  return out;
}

}  // namespace

std::string render_csv(const GslReport& r) {
  return "vgh,level,raw_level_gsl,weight,contribution\n" + csv_rows(r);
}

std::string render_csv(const ComparisonResult& c) {
  std::string out = "vgh,level,raw_level_gsl,weight,contribution\n";
  for (const auto& r : c.reports) out += csv_rows(r);
  return out;
}

}  // namespace vghjudge
