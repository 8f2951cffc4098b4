#include "vghjudge/ontology.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "vghjudge/errors.hpp"
#include "vghjudge/text.hpp"

namespace vghjudge {

namespace {

// word_index key; '\x1f' cannot appear in a normalized lemma.
std::string word_key(std::string_view lemma, Pos pos) {
  std::string key(lemma);
  key.push_back('\x1f');
  key.push_back(pos_tag(pos));
  return key;
}

bool is_blank_or_comment(const std::string& line) {
  const auto first = line.find_first_not_of(" \t");
  return first == std::string::npos || line[first] == '#';
}

}  // namespace

char pos_tag(Pos pos) {
  switch (pos) {
    case Pos::noun: return 'n';
    case Pos::verb: return 'v';
    case Pos::adj: return 'a';
    case Pos::adv: return 'r';
  }
  return 'n';
}

std::string_view pos_name(Pos pos) {
  switch (pos) {
    case Pos::noun: return "noun";
    case Pos::verb: return "verb";
    case Pos::adj: return "adj";
    case Pos::adv: return "adv";
  }
  return "noun";
}

std::optional<Pos> pos_from_string(std::string_view token) {
  if (token == "n" || token == "noun") return Pos::noun;
  if (token == "v" || token == "verb") return Pos::verb;
  if (token == "a" || token == "adj" || token == "adjective") return Pos::adj;
  if (token == "r" || token == "adv" || token == "adverb") return Pos::adv;
  return std::nullopt;
}

Ontology Ontology::load(std::istream& in) {
  Ontology o;
  struct PendingEdge {
    std::string child, parent;
    int line;
  };
  std::vector<PendingEdge> pending;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank_or_comment(line)) continue;

    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "C") {
      std::string id, pos_token, lemma_field, extra;
      fields >> id >> pos_token >> lemma_field;
      if (id.empty() || pos_token.empty() || lemma_field.empty())
        throw ParseError("concept line needs <id> <pos> <lemmas>", line_no);
      if (fields >> extra)
        throw ParseError("unexpected trailing token '" + extra + "'", line_no);
      const auto pos = pos_from_string(pos_token);
      if (!pos || pos_token.size() != 1)
        throw ParseError("bad part-of-speech tag '" + pos_token + "' (want n, v, a or r)",
                         line_no);
      if (o.by_id_.count(id))
        throw ParseError("duplicate concept id '" + id + "'", line_no);

      Concept c;
      c.id = id;
      c.pos = *pos;
      std::string lemma;
      std::istringstream lemma_stream(lemma_field);
      while (std::getline(lemma_stream, lemma, '|')) {
        std::string normalized = normalize_term(lemma);
        if (normalized.empty())
          throw ParseError("empty lemma in '" + lemma_field + "'", line_no);
        c.lemmas.push_back(std::move(normalized));
      }
      if (c.lemmas.empty()) throw ParseError("concept has no lemmas", line_no);

      const auto index = static_cast<std::uint32_t>(o.concepts_.size());
      o.by_id_.emplace(id, index);
      for (const auto& l : c.lemmas) o.word_index_[word_key(l, c.pos)].push_back(index);
      o.concepts_.push_back(std::move(c));
    } else if (tag == "H") {
      std::string child, parent, extra;
      fields >> child >> parent;
      if (child.empty() || parent.empty())
        throw ParseError("edge line needs <child-id> <parent-id>", line_no);
      if (fields >> extra)
        throw ParseError("unexpected trailing token '" + extra + "'", line_no);
      pending.push_back({std::move(child), std::move(parent), line_no});
    } else {
      throw ParseError("unknown directive '" + tag + "'", line_no);
    }
  }

  if (o.concepts_.empty()) throw ParseError("ontology has no concepts");

  // Resolve edges; preserve file order for serialization.
  o.parent_index_.resize(o.concepts_.size());
  for (const auto& e : pending) {
    const auto child = o.by_id_.find(e.child);
    if (child == o.by_id_.end())
      throw ParseError("edge references undefined concept '" + e.child + "'", e.line);
    const auto parent = o.by_id_.find(e.parent);
    if (parent == o.by_id_.end())
      throw ParseError("edge references undefined concept '" + e.parent + "'", e.line);
    o.edges_.emplace_back(child->second, parent->second);
    o.parent_index_[child->second].push_back(parent->second);
    o.concepts_[child->second].parents.push_back(e.parent);
  }

  // Exactly one root: the unique concept with no parents.
  std::vector<std::uint32_t> roots;
  for (std::uint32_t i = 0; i < o.concepts_.size(); ++i)
    if (o.parent_index_[i].empty()) roots.push_back(i);
  if (roots.empty())
    throw ParseError("no root concept (every concept has a parent)");
  if (roots.size() > 1) {
    std::string ids;
    for (auto r : roots) ids += (ids.empty() ? "" : ", ") + o.concepts_[r].id;
    throw ParseError("multiple root concepts: " + ids);
  }
  o.root_ = roots.front();

  // Depths via DFS over parents; longest path to the root. A back edge to an
  // in-progress node is a cycle.
  enum : char { unvisited, in_progress, done };
  std::vector<char> state(o.concepts_.size(), unvisited);
  std::vector<int> depth(o.concepts_.size(), 0);
  for (std::uint32_t start = 0; start < o.concepts_.size(); ++start) {
    if (state[start] == done) continue;
    std::vector<std::pair<std::uint32_t, std::size_t>> stack{{start, 0}};
    state[start] = in_progress;
    while (!stack.empty()) {
      auto& [node, next_parent] = stack.back();
      if (next_parent < o.parent_index_[node].size()) {
        const auto parent = o.parent_index_[node][next_parent++];
        if (state[parent] == in_progress)
          throw ParseError("cycle detected involving concept '" + o.concepts_[parent].id +
                           "'");
        if (state[parent] == unvisited) {
          state[parent] = in_progress;
          stack.emplace_back(parent, 0);
        }
      } else {
        int d = 0;
        for (auto parent : o.parent_index_[node]) d = std::max(d, depth[parent] + 1);
        depth[node] = d;
        state[node] = done;
        stack.pop_back();
      }
    }
  }
  for (std::uint32_t i = 0; i < o.concepts_.size(); ++i) o.concepts_[i].depth = depth[i];

  return o;
}

Ontology Ontology::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open ontology file '" + path + "'");
  try {
    return load(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void Ontology::serialize(std::ostream& out) const {
  for (const auto& c : concepts_) {
    out << "C " << c.id << ' ' << pos_tag(c.pos) << ' ';
    for (std::size_t i = 0; i < c.lemmas.size(); ++i) {
      if (i) out << '|';
      for (char ch : c.lemmas[i]) out << (ch == ' ' ? '_' : ch);
    }
    out << '\n';
  }
  for (const auto& [child, parent] : edges_)
    out << "H " << concepts_[child].id << ' ' << concepts_[parent].id << '\n';
}

const Concept* Ontology::find(std::string_view id) const {
  const auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? nullptr : &concepts_[it->second];
}

const Concept& Ontology::at(std::string_view id) const {
  const Concept* c = find(id);
  if (!c) throw std::invalid_argument("unknown concept id '" + std::string(id) + "'");
  return *c;
}

std::uint32_t Ontology::index_of(const Concept& c) const {
  const auto it = by_id_.find(c.id);
  if (it == by_id_.end() || &concepts_[it->second] != &c)
    throw std::invalid_argument("concept '" + c.id + "' does not belong to this ontology");
  return it->second;
}

std::vector<const Concept*> Ontology::concepts_for_word(std::string_view lemma,
                                                        Pos pos) const {
  const auto it = word_index_.find(word_key(normalize_term(lemma), pos));
  std::vector<const Concept*> result;
  if (it == word_index_.end()) return result;
  result.reserve(it->second.size());
  for (auto index : it->second) result.push_back(&concepts_[index]);
  return result;
}

void Ontology::ancestors_or_self_mask(std::uint32_t start, std::vector<char>& mask) const {
  mask.assign(concepts_.size(), 0);
  std::vector<std::uint32_t> stack{start};
  mask[start] = 1;
  while (!stack.empty()) {
    const auto node = stack.back();
    stack.pop_back();
    for (auto parent : parent_index_[node]) {
      if (!mask[parent]) {
        mask[parent] = 1;
        stack.push_back(parent);
      }
    }
  }
}

std::vector<const Concept*> Ontology::hypernym_closure(const Concept& c) const {
  const auto start = index_of(c);
  std::vector<char> mask;
  ancestors_or_self_mask(start, mask);
  std::vector<const Concept*> result;
  for (std::uint32_t i = 0; i < concepts_.size(); ++i)
    if (mask[i] && i != start) result.push_back(&concepts_[i]);
  std::sort(result.begin(), result.end(), [](const Concept* a, const Concept* b) {
    if (a->depth != b->depth) return a->depth > b->depth;
    return a->id < b->id;
  });
  return result;
}

bool Ontology::is_hypernym_of(const Concept& ancestor, const Concept& c) const {
  const auto target = index_of(ancestor);
  const auto start = index_of(c);
  if (target == start) return false;
  std::vector<char> mask;
  ancestors_or_self_mask(start, mask);
  return mask[target] != 0;
}

const Concept& Ontology::least_common_subsumer(const Concept& a, const Concept& b) const {
  const auto ia = index_of(a);
  const auto ib = index_of(b);
  std::vector<char> mask_a;
  ancestors_or_self_mask(ia, mask_a);
  std::vector<char> mask_b;
  ancestors_or_self_mask(ib, mask_b);

  const Concept* best = nullptr;
  for (std::uint32_t i = 0; i < concepts_.size(); ++i) {
    if (!mask_a[i] || !mask_b[i]) continue;
    const Concept* candidate = &concepts_[i];
    if (!best || candidate->depth > best->depth ||
        (candidate->depth == best->depth && candidate->id < best->id))
      best = candidate;
  }
  // A validated taxonomy is connected, so the root is always a candidate.
  return *best;
}

PathLengths Ontology::path_lengths(const Concept& a, const Concept& b) const {
  const Concept& subsumer = least_common_subsumer(a, b);
  return {a.depth - subsumer.depth, b.depth - subsumer.depth, subsumer.depth};
}

}  // namespace vghjudge
