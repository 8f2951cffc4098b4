#include "vghjudge/gsl.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "vghjudge/errors.hpp"
#include "vghjudge/text.hpp"

namespace vghjudge {

std::string_view to_string(WeightScheme scheme) {
  return scheme == WeightScheme::constant ? "constant" : "level";
}

std::string_view to_string(Aggregation agg) {
  return agg == Aggregation::max ? "max" : "avg";
}

std::optional<WeightScheme> weight_scheme_from_string(std::string_view token) {
  if (token == "constant") return WeightScheme::constant;
  if (token == "level" || token == "level_based" || token == "level-based")
    return WeightScheme::level_based;
  return std::nullopt;
}

std::optional<Aggregation> aggregation_from_string(std::string_view token) {
  if (token == "max") return Aggregation::max;
  if (token == "avg") return Aggregation::avg;
  return std::nullopt;
}

double transition_loss(const Ontology& o, const MetricDescriptor& m, const Concept& from,
                       const Concept& to) {
  return m.max_similarity - similarity(m, o, from, to).value;
}

std::vector<double> level_weights(int height, WeightScheme scheme) {
  if (height < 1) throw std::invalid_argument("level weights need height >= 1");
  std::vector<double> w(static_cast<std::size_t>(height));
  if (scheme == WeightScheme::constant) {
    std::fill(w.begin(), w.end(), 1.0 / height);
  } else {
    const double denom = height * (height + 1) / 2.0;
    for (int i = 1; i <= height; ++i) w[static_cast<std::size_t>(i - 1)] = (height + 1 - i) / denom;
  }
  return w;
}

double aggregate_level(const std::vector<double>& losses, Aggregation agg) {
  if (losses.empty()) throw std::invalid_argument("cannot aggregate an empty level");
  if (agg == Aggregation::max) return *std::max_element(losses.begin(), losses.end());
  double sum = 0.0;
  for (double x : losses) sum += x;
  return sum / static_cast<double>(losses.size());
}

double weighted_total(const std::vector<double>& level_values,
                      const std::vector<double>& weights) {
  if (level_values.size() != weights.size())
    throw std::invalid_argument("level values and weights differ in length");
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) total += level_values[i] * weights[i];
  return total;
}

GslReport evaluate_vgh(const Vgh& v, const Ontology& o, const GslConfig& cfg,
                       const NominalizationMap& nominalizations) {
  const MetricDescriptor& m = metric(cfg.metric_name);

  GslReport report;
  report.vgh_name = v.name();
  report.config = cfg;

  Vgh balanced_storage;
  const Vgh* tree = &v;
  if (!v.balanced()) {
    balanced_storage = balance(v);
    tree = &balanced_storage;
    report.diagnostics.push_back(
        {"auto_balanced",
         "leaf depths differ; shallow leaves were replicated down to depth " +
             std::to_string(v.height())});
  }
  report.height = tree->height();

  if (report.height == 0) {
    report.diagnostics.push_back(
        {"degenerate", "single-node hierarchy: no generalization can occur, score is 0"});
    return report;
  }

  const ResolvedVgh resolved = resolve_vgh(*tree, o, cfg.pos, nominalizations);
  if (cfg.strict && !resolved.fully_resolved()) {
    std::string detail;
    for (const auto& u : resolved.unresolved)
      detail += (detail.empty() ? "" : "; ") + u.reason;
    throw EvalError("unresolved nodes in strict mode: " + detail);
  }

  bool any_leaf_resolved = false;
  for (const NodeId leaf : tree->leaves())
    if (resolved.bindings[tree->origin(leaf)]) any_leaf_resolved = true;
  if (!any_leaf_resolved)
    throw EvalError("no hierarchy node could be resolved against the ontology");

  for (const auto& u : resolved.unresolved)
    report.diagnostics.push_back({"unresolved", u.reason});

  report.matrix.reserve(resolved.transitions.size());
  for (const auto& t : resolved.transitions) {
    TransitionScore s;
    s.leaf = t.leaf;
    s.ancestor = t.ancestor;
    s.leaf_term = tree->node(t.leaf).term;
    s.ancestor_term = tree->node(t.ancestor).term;
    s.level = t.level;
    s.replication = t.replication;
    if (t.leaf_concept && t.ancestor_concept) {
      s.resolved = true;
      s.loss = transition_loss(o, m, *t.leaf_concept, *t.ancestor_concept);
      s.sister_term = t.out_of_hypernym;
    }
    report.matrix.push_back(std::move(s));
  }

  const auto weights = level_weights(report.height, cfg.weights);
  report.levels.reserve(static_cast<std::size_t>(report.height));
  for (int level = 1; level <= report.height; ++level) {
    std::vector<double> losses;
    const TransitionScore* worst = nullptr;
    for (const auto& s : report.matrix) {
      if (s.level != level || !s.resolved) continue;
      losses.push_back(s.loss);
      if (!worst || s.loss > worst->loss) worst = &s;
    }
    if (losses.empty())
      throw EvalError("no resolvable transitions at level " + std::to_string(level));

    LevelSummary summary;
    summary.level = level;
    summary.raw_max = aggregate_level(losses, Aggregation::max);
    summary.raw_avg = aggregate_level(losses, Aggregation::avg);
    double variance = 0.0;
    for (double x : losses) variance += (x - summary.raw_avg) * (x - summary.raw_avg);
    summary.stddev = std::sqrt(variance / static_cast<double>(losses.size()));
    summary.raw = cfg.aggregation == Aggregation::max ? summary.raw_max : summary.raw_avg;
    summary.weight = weights[static_cast<std::size_t>(level - 1)];
    summary.contribution = summary.weight * summary.raw;
    summary.max_leaf_term = worst->leaf_term;
    summary.max_ancestor_term = worst->ancestor_term;
    report.vgh_gsl += summary.contribution;

    report.diagnostics.push_back(
        {"max_loss", "level " + std::to_string(level) + ": " + worst->leaf_term + " -> " +
                         worst->ancestor_term + " = " + fixed4(worst->loss)});
    report.levels.push_back(std::move(summary));
  }

  for (std::size_t i = 0; i + 1 < report.levels.size(); ++i) {
    if (report.levels[i].raw > report.levels[i + 1].raw)
      report.diagnostics.push_back(
          {"peak", "level " + std::to_string(report.levels[i].level) + " scores " +
                       fixed4(report.levels[i].raw) + ", above level " +
                       std::to_string(report.levels[i + 1].level) + "'s " +
                       fixed4(report.levels[i + 1].raw) +
                       ": a child concept is less specific than its parent"});
  }

  return report;
}

TransitionTable transition_matrix(const GslReport& r) {
  TransitionTable table;
  if (r.levels.empty()) return table;

  // Every leaf appears exactly once per level; level 1 fixes the row order.
  std::map<NodeId, std::size_t> row_of;
  for (const auto& s : r.matrix) {
    if (s.level != 1) continue;
    row_of.emplace(s.leaf, table.row_labels.size());
    table.row_labels.push_back(s.leaf_term);
  }

  std::map<NodeId, std::size_t> column_of;
  for (int level = 1; level <= r.height; ++level) {
    for (const auto& s : r.matrix) {
      if (s.level != level || column_of.count(s.ancestor)) continue;
      column_of.emplace(s.ancestor, table.column_labels.size());
      table.column_labels.push_back(s.ancestor_term);
      table.column_levels.push_back(level);
    }
  }

  table.cells.assign(table.row_labels.size(),
                     std::vector<std::optional<double>>(table.column_labels.size()));
  for (const auto& s : r.matrix) {
    if (!s.resolved) continue;
    table.cells[row_of.at(s.leaf)][column_of.at(s.ancestor)] = s.loss;
  }
  return table;
}

}  // namespace vghjudge
