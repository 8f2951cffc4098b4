#include "vghjudge/resolver.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <unordered_set>

#include "vghjudge/errors.hpp"
#include "vghjudge/text.hpp"

namespace vghjudge {

NominalizationMap NominalizationMap::load(std::istream& in) {
  NominalizationMap m;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto arrow = line.find("=>");
    if (arrow == std::string::npos)
      throw ParseError("expected 'adjective => noun'", line_no);
    const std::string from = normalize_term(line.substr(0, arrow));
    const std::string to = normalize_term(line.substr(arrow + 2));
    if (from.empty() || to.empty())
      throw ParseError("expected 'adjective => noun'", line_no);
    if (from == to)
      throw ParseError("term '" + from + "' maps to itself", line_no);
    m.entries_[from] = to;
  }
  return m;
}

NominalizationMap NominalizationMap::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open nominalization file '" + path + "'");
  try {
    return load(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void NominalizationMap::add(std::string_view from, std::string_view to) {
  const std::string key = normalize_term(from);
  const std::string value = normalize_term(to);
  if (key.empty() || value.empty())
    throw ParseError("nominalization entries must be non-empty");
  if (key == value) throw ParseError("term '" + key + "' maps to itself");
  entries_[key] = value;
}

std::string NominalizationMap::apply(std::string_view term) const {
  const std::string key = normalize_term(term);
  const auto it = entries_.find(key);
  return it == entries_.end() ? key : it->second;
}

ResolveResult resolve_term(std::string_view nominalized_term, std::optional<int> sense,
                           bool leaf, const Ontology& o, Pos pos,
                           const std::vector<const Concept*>& inherited_hypernyms) {
  const auto candidates = o.concepts_for_word(nominalized_term, pos);
  if (candidates.empty())
    return {std::nullopt, "term '" + std::string(nominalized_term) + "' not found in the ontology (" +
                              std::string(pos_name(pos)) + ")"};

  if (!leaf) {
    std::unordered_set<const Concept*> hypernyms(inherited_hypernyms.begin(),
                                                 inherited_hypernyms.end());
    const Concept* best = nullptr;
    for (const Concept* candidate : candidates) {
      if (!hypernyms.count(candidate)) continue;
      if (!best || candidate->depth > best->depth ||
          (candidate->depth == best->depth && candidate->id < best->id))
        best = candidate;
    }
    if (best) return {ConceptBinding{best, false}, {}};
  }

  const int chosen = sense.value_or(1);
  if (chosen > static_cast<int>(candidates.size()))
    return {std::nullopt, "sense " + std::to_string(chosen) + " of '" +
                              std::string(nominalized_term) + "' out of range (" +
                              std::to_string(candidates.size()) + " senses)"};
  // An ancestor landing here lies outside the leaf's hypernym tree.
  return {ConceptBinding{candidates[chosen - 1], !leaf}, {}};
}

ResolvedVgh resolve_vgh(const Vgh& v, const Ontology& o, Pos pos,
                        const NominalizationMap& nominalizations) {
  if (!v.balanced())
    throw std::logic_error("resolve_vgh requires a balanced hierarchy");

  ResolvedVgh r;
  r.vgh = &v;
  r.bindings.assign(v.node_count(), std::nullopt);

  std::vector<char> attempted(v.node_count(), 0);
  std::vector<std::string> failure(v.node_count());

  const auto leaves = v.leaves();
  const int h = v.height();

  // Leaves first. Replicated leaves share the originating leaf's result.
  for (const NodeId leaf : leaves) {
    const NodeId origin = v.origin(leaf);
    if (!attempted[origin]) {
      attempted[origin] = 1;
      const VghNode& n = v.node(origin);
      auto result = resolve_term(nominalize(n.term, nominalizations), n.sense,
                                 /*leaf=*/true, o, pos, {});
      if (result.binding)
        r.bindings[origin] = *result.binding;
      else
        failure[origin] = result.error;
    }
    if (leaf != origin) {
      attempted[leaf] = 1;
      r.bindings[leaf] = r.bindings[origin];
      failure[leaf] = failure[origin];
    }
  }

  // Hypernym set per bound leaf, including the leaf concept itself so that
  // replicated self-transitions select the identical concept unflagged.
  std::unordered_map<NodeId, std::vector<const Concept*>> hypernyms_of;
  for (const NodeId leaf : leaves) {
    const NodeId origin = v.origin(leaf);
    if (!r.bindings[origin] || hypernyms_of.count(origin)) continue;
    auto closure = o.hypernym_closure(*r.bindings[origin]->concept);
    closure.push_back(r.bindings[origin]->concept);
    hypernyms_of.emplace(origin, std::move(closure));
  }

  static const std::vector<const Concept*> kNoHypernyms;

  for (int level = 1; level <= h; ++level) {
    for (const NodeId leaf : leaves) {
      const NodeId origin = v.origin(leaf);
      const NodeId ancestor = v.ancestor_at_level(leaf, level);
      TransitionBinding t;
      t.leaf = leaf;
      t.ancestor = ancestor;
      t.level = level;
      if (r.bindings[origin]) t.leaf_concept = r.bindings[origin]->concept;

      if (v.node(ancestor).replicated || ancestor == origin) {
        t.ancestor_concept = t.leaf_concept;
        t.replication = true;
        if (v.node(ancestor).replicated && !attempted[ancestor]) {
          attempted[ancestor] = 1;
          r.bindings[ancestor] = r.bindings[origin];
        }
      } else {
        const VghNode& node = v.node(ancestor);
        const auto hyp = hypernyms_of.find(origin);
        auto result =
            resolve_term(nominalize(node.term, nominalizations), node.sense,
                         /*leaf=*/false, o, pos,
                         hyp == hypernyms_of.end() ? kNoHypernyms : hyp->second);
        if (result.binding) {
          t.ancestor_concept = result.binding->concept;
          t.out_of_hypernym = result.binding->out_of_hypernym;
          if (!r.bindings[ancestor]) r.bindings[ancestor] = *result.binding;
        } else if (!attempted[ancestor]) {
          failure[ancestor] = result.error;
        }
        attempted[ancestor] = 1;
      }
      r.transitions.push_back(t);
    }
  }

  // Account for every non-replicated node exactly once.
  for (NodeId id = 0; id < v.node_count(); ++id) {
    if (v.node(id).replicated || r.bindings[id]) continue;
    r.unresolved.push_back({id, v.node(id).term,
                            failure[id].empty() ? "term '" + v.node(id).term +
                                                      "' not found in the ontology (" +
                                                      std::string(pos_name(pos)) + ")"
                                                : failure[id]});
  }
  return r;
}

}  // namespace vghjudge
