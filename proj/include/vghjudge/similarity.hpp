#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "vghjudge/ontology.hpp"

namespace vghjudge {

/// Path-based similarity in (0, 1]; exactly 1 iff the concepts are identical.
struct SimilarityScore {
  double value = 0.0;
};

struct MetricDescriptor {
  std::string name;
  double max_similarity = 1.0;  // the metric's identity-case score
  std::function<double(const Ontology&, const Concept&, const Concept&)> compute;
};

// Positive floor for the degenerate root/non-root pair, which would otherwise
// score 0 and fall outside (0, 1].
inline constexpr double kSimilarityFloor = 1e-9;

// 2*N3 / (N1 + N2 + 2*N3) over is-a link counts through the deepest common
// subsumer. Rejects pairs of different parts of speech.
double wup_similarity(const Ontology& o, const Concept& a, const Concept& b);

const MetricDescriptor& metric(std::string_view name);  // ConfigError if unknown
void register_metric(MetricDescriptor descriptor);
std::vector<std::string> metric_names();

SimilarityScore similarity(const MetricDescriptor& m, const Ontology& o,
                           const Concept& a, const Concept& b);

}  // namespace vghjudge
