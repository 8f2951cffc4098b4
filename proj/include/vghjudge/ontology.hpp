#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace vghjudge {

enum class Pos : std::uint8_t { noun, verb, adj, adv };

char pos_tag(Pos pos);             // 'n', 'v', 'a', 'r'
std::string_view pos_name(Pos pos);
std::optional<Pos> pos_from_string(std::string_view token);  // accepts tag or name

/// One taxonomy node: a set of synonymous lemmas sharing one meaning.
struct Concept {
  std::string id;
  Pos pos = Pos::noun;
  std::vector<std::string> lemmas;   // normalized, non-empty
  std::vector<std::string> parents;  // is-a targets; empty only for the root
  int depth = 0;                     // longest is-a path down from the root
};

/// Is-a link counts of a concept pair through their deepest common subsumer.
struct PathLengths {
  int first_to_subsumer = 0;
  int second_to_subsumer = 0;
  int subsumer_to_root = 0;
};

/// A rooted acyclic is-a taxonomy with a (lemma, pos) -> senses index.
///
/// Loading validates everything up front (single root, acyclicity, resolvable
/// edges) and caches depths; instances are immutable afterwards, so every
/// query below is pure and safe under concurrent reads.
class Ontology {
public:
  // Reads OVF text:
  //   C <id> <pos> <lemma1>[|<lemma2>|...]   concept (pos in {n,v,a,r}, '_' for spaces)
  //   H <child-id> <parent-id>               is-a edge
  //   # comment / blank                      ignored
  // Concept and edge lines may appear in any order; forward references are fine.
  static Ontology load(std::istream& in);
  static Ontology load_file(const std::string& path);

  // Emits all C lines in original order, then all H lines in original order.
  void serialize(std::ostream& out) const;

  std::size_t size() const { return concepts_.size(); }
  const std::vector<Concept>& concepts() const { return concepts_; }
  const Concept& root() const { return concepts_[root_]; }

  const Concept* find(std::string_view id) const;
  const Concept& at(std::string_view id) const;  // std::invalid_argument if absent

  // Senses of a word, in order of first appearance in the source file.
  // Synonyms fall through automatically because every lemma of a concept is
  // indexed. Empty result is a valid answer.
  std::vector<const Concept*> concepts_for_word(std::string_view lemma, Pos pos) const;

  // Proper ancestors, deepest first (depth ties by id). Excludes `c`,
  // includes the root.
  std::vector<const Concept*> hypernym_closure(const Concept& c) const;

  bool is_hypernym_of(const Concept& ancestor, const Concept& c) const;

  // Deepest ancestor-or-self of both; depth ties broken by smallest id.
  const Concept& least_common_subsumer(const Concept& a, const Concept& b) const;

  PathLengths path_lengths(const Concept& a, const Concept& b) const;

private:
  Ontology() = default;

  std::uint32_t index_of(const Concept& c) const;  // validates membership
  void ancestors_or_self_mask(std::uint32_t start, std::vector<char>& mask) const;

  std::vector<Concept> concepts_;
  std::unordered_map<std::string, std::uint32_t> by_id_;
  std::vector<std::vector<std::uint32_t>> parent_index_;  // parallel to concepts_
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;  // (child, parent), file order
  std::unordered_map<std::string, std::vector<std::uint32_t>> word_index_;
  std::uint32_t root_ = 0;
};

}  // namespace vghjudge
