#include "vghjudge/similarity.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "vghjudge/errors.hpp"

namespace vghjudge {

double wup_similarity(const Ontology& o, const Concept& a, const Concept& b) {
  if (a.pos != b.pos)
    throw EvalError("cannot compare concepts of different parts of speech ('" + a.id +
                    "' is " + std::string(pos_name(a.pos)) + ", '" + b.id + "' is " +
                    std::string(pos_name(b.pos)) + ")");
  const PathLengths n = o.path_lengths(a, b);
  // Both legs zero means both concepts are the subsumer itself, i.e. identical
  // (covers the root/root 0/0 case).
  if (n.first_to_subsumer == 0 && n.second_to_subsumer == 0) return 1.0;
  const double score =
      2.0 * n.subsumer_to_root /
      (n.first_to_subsumer + n.second_to_subsumer + 2.0 * n.subsumer_to_root);
  return std::max(score, kSimilarityFloor);
}

namespace {

std::map<std::string, MetricDescriptor, std::less<>>& registry() {
  static std::map<std::string, MetricDescriptor, std::less<>> metrics = [] {
    std::map<std::string, MetricDescriptor, std::less<>> m;
    m.emplace("wup", MetricDescriptor{"wup", 1.0,
                                      [](const Ontology& o, const Concept& a,
                                         const Concept& b) { return wup_similarity(o, a, b); }});
    return m;
  }();
  return metrics;
}

std::mutex registry_mutex;

}  // namespace

const MetricDescriptor& metric(std::string_view name) {
  std::lock_guard lock(registry_mutex);
  const auto it = registry().find(name);
  if (it == registry().end())
    throw ConfigError("unknown similarity metric '" + std::string(name) + "'");
  return it->second;
}

void register_metric(MetricDescriptor descriptor) {
  std::lock_guard lock(registry_mutex);
  auto name = descriptor.name;
  registry().insert_or_assign(std::move(name), std::move(descriptor));
}

std::vector<std::string> metric_names() {
  std::lock_guard lock(registry_mutex);
  std::vector<std::string> names;
  for (const auto& [name, unused] : registry()) names.push_back(name);
  return names;
}

SimilarityScore similarity(const MetricDescriptor& m, const Ontology& o, const Concept& a,
                           const Concept& b) {
  return SimilarityScore{m.compute(o, a, b)};
}

}  // namespace vghjudge
