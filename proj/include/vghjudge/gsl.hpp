#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vghjudge/ontology.hpp"
#include "vghjudge/resolver.hpp"
#include "vghjudge/similarity.hpp"
#include "vghjudge/vgh.hpp"

namespace vghjudge {

enum class WeightScheme : std::uint8_t { constant, level_based };
enum class Aggregation : std::uint8_t { max, avg };

std::string_view to_string(WeightScheme scheme);
std::string_view to_string(Aggregation agg);
std::optional<WeightScheme> weight_scheme_from_string(std::string_view token);
std::optional<Aggregation> aggregation_from_string(std::string_view token);

struct GslConfig {
  WeightScheme weights = WeightScheme::constant;
  Aggregation aggregation = Aggregation::max;
  std::string metric_name = "wup";
  Pos pos = Pos::noun;
  bool strict = false;  // unresolved nodes abort evaluation
};

/// Semantic loss of one leaf -> ancestor generalization:
/// metric.max_similarity - Sim(leaf, ancestor), in [0, 1).
struct TransitionScore {
  NodeId leaf = kNoNode;
  NodeId ancestor = kNoNode;
  std::string leaf_term;
  std::string ancestor_term;
  int level = 0;
  double loss = 0.0;  // meaningful only when resolved
  bool resolved = false;
  bool sister_term = false;
  bool replication = false;
};

struct LevelSummary {
  int level = 0;
  double raw = 0.0;  // the aggregation the config selects (max or avg)
  double raw_max = 0.0;
  double raw_avg = 0.0;
  double stddev = 0.0;  // population, over the level's resolved transitions
  double weight = 0.0;
  double contribution = 0.0;  // weight * raw
  std::string max_leaf_term;  // first transition attaining raw_max
  std::string max_ancestor_term;
};

struct Diagnostic {
  std::string kind;  // auto_balanced | degenerate | unresolved | max_loss | peak
  std::string detail;
};

struct GslReport {
  std::string vgh_name;
  int height = 0;
  GslConfig config;
  std::vector<TransitionScore> matrix;  // level-major, leaves in document order
  std::vector<LevelSummary> levels;     // levels 1..height
  double vgh_gsl = 0.0;
  std::vector<Diagnostic> diagnostics;
};

double transition_loss(const Ontology& o, const MetricDescriptor& m, const Concept& from,
                       const Concept& to);

// constant: every level 1/h. level_based: level i gets (h+1-i)/(1+2+...+h).
// Both sum to 1. Height must be >= 1.
std::vector<double> level_weights(int height, WeightScheme scheme);

// max or arithmetic mean of one level's losses; the list must be non-empty.
double aggregate_level(const std::vector<double>& losses, Aggregation agg);

double weighted_total(const std::vector<double>& level_values,
                      const std::vector<double>& weights);

/// Scores a hierarchy end to end: balance if needed, bind nodes to ontology
/// concepts, score every (leaf, level) transition, aggregate per level, and
/// sum the weighted level scores. Unresolved transitions are excluded from
/// aggregation and surfaced as diagnostics (or abort under cfg.strict).
GslReport evaluate_vgh(const Vgh& v, const Ontology& o, const GslConfig& cfg,
                       const NominalizationMap& nominalizations);

/// Table view of a report: one row per leaf, one column per distinct ancestor
/// node, columns grouped by level in order of first appearance.
struct TransitionTable {
  std::vector<std::string> row_labels;
  std::vector<std::string> column_labels;
  std::vector<int> column_levels;
  std::vector<std::vector<std::optional<double>>> cells;  // [row][column]
};
TransitionTable transition_matrix(const GslReport& r);

}  // namespace vghjudge
