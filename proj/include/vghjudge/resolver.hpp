#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "vghjudge/ontology.hpp"
#include "vghjudge/vgh.hpp"

namespace vghjudge {

/// Adjective -> noun rewrites applied to hierarchy terms before any ontology
/// lookup, so noun-only taxonomic metrics stay applicable.
class NominalizationMap {
public:
  NominalizationMap() = default;

  // Reads `adjective => noun` lines; '#' starts a comment.
  static NominalizationMap load(std::istream& in);
  static NominalizationMap load_file(const std::string& path);

  void add(std::string_view from, std::string_view to);
  std::string apply(std::string_view term) const;  // identity on unmapped terms
  std::size_t size() const { return entries_.size(); }

private:
  std::unordered_map<std::string, std::string> entries_;
};

inline std::string nominalize(std::string_view term, const NominalizationMap& m) {
  return m.apply(term);
}

struct ConceptBinding {
  const Concept* concept = nullptr;
  // Set when no candidate sense lay inside the leaf's hypernym tree and the
  // annotated/default sense was used instead (a sister-term generalization).
  bool out_of_hypernym = false;
};

struct ResolveResult {
  std::optional<ConceptBinding> binding;
  std::string error;  // set when binding is empty
};

/// Sense selection for one term against a candidate list from the ontology.
///
/// Leaves take their annotated sense (default sense 1). Ancestors prefer the
/// candidate found in `inherited_hypernyms` — deepest first, ties by smallest
/// id — and fall back to the annotated/default sense flagged out-of-hypernym.
ResolveResult resolve_term(std::string_view nominalized_term, std::optional<int> sense,
                           bool leaf, const Ontology& o, Pos pos,
                           const std::vector<const Concept*>& inherited_hypernyms);

struct UnresolvedNode {
  NodeId node = kNoNode;
  std::string term;
  std::string reason;
};

/// One leaf -> level-i ancestor pair with both endpoints bound where possible.
struct TransitionBinding {
  NodeId leaf = kNoNode;
  NodeId ancestor = kNoNode;
  int level = 0;
  const Concept* leaf_concept = nullptr;      // null when the leaf is unresolved
  const Concept* ancestor_concept = nullptr;  // null when the ancestor is unresolved
  bool out_of_hypernym = false;
  bool replication = false;  // ancestor is part of the leaf's own replication chain
};

struct ResolvedVgh {
  const Vgh* vgh = nullptr;
  // One slot per node id; replicated nodes share their originating leaf's
  // binding. For ancestors seen from several leaves this is the first
  // (document-order) resolution; per-transition senses live in `transitions`.
  std::vector<std::optional<ConceptBinding>> bindings;
  std::vector<UnresolvedNode> unresolved;  // non-replicated nodes, document order
  // Level-major: level 1 for every leaf in document order, then level 2, ...
  std::vector<TransitionBinding> transitions;

  bool fully_resolved() const { return unresolved.empty(); }
};

/// Binds every node of a balanced hierarchy to an ontology concept. Leaves
/// resolve first; each ancestor is then resolved per leaf transition against
/// that leaf's hypernym tree. Missing vocabulary is collected, not fatal.
ResolvedVgh resolve_vgh(const Vgh& v, const Ontology& o, Pos pos,
                        const NominalizationMap& nominalizations);

}  // namespace vghjudge
