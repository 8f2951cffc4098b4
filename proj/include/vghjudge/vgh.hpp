#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace vghjudge {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = 0xffffffffu;

struct VghNode {
  std::string term;          // normalized, non-empty
  std::optional<int> sense;  // manual sense choice written "term#k"
  std::vector<NodeId> children;
  NodeId parent = kNoNode;
  int depth = 0;
  bool replicated = false;  // inserted by balance()
};

/// A user-authored generalization tree: leaves are the original attribute
/// values, ancestors the candidate replacement values.
///
/// Levels count upward from a leaf: the ancestor i steps above a leaf is its
/// level-i ancestor; once the tree is balanced the root is every leaf's
/// level-height() ancestor.
class Vgh {
public:
  // Reads VGF text: one node per line, depth = leading spaces / 2 (exact
  // multiple of two), root on the first non-comment line, '#' at line start
  // is a comment. A node token is `term` or `term#<sense>`; terms may contain
  // spaces, the suffix is recognized only as a trailing '#' plus digits.
  static Vgh parse(std::istream& in, std::string name);
  static Vgh parse_file(const std::string& path);

  void serialize(std::ostream& out) const;

  const std::string& name() const { return name_; }
  int height() const { return height_; }
  std::size_t node_count() const { return nodes_.size(); }
  const VghNode& node(NodeId id) const;
  NodeId root_id() const { return 0; }
  const VghNode& root() const { return nodes_[0]; }

  // True when every leaf sits at depth height().
  bool balanced() const;

  // Childless nodes in document order, at any depth.
  std::vector<NodeId> leaves_any_depth() const;

  // Leaves of a balanced tree in document order; throws std::logic_error on
  // an unbalanced tree.
  std::vector<NodeId> leaves() const;

  // The unique ancestor `level` steps above a leaf (1 <= level <= height()).
  NodeId ancestor_at_level(NodeId leaf, int level) const;

  // For a replicated node, the original leaf it copies; identity otherwise.
  NodeId origin(NodeId id) const;

  // Structural comparison: terms, senses, replication flags and tree shape.
  bool same_structure(const Vgh& other) const;

  friend Vgh balance(const Vgh& v);

private:
  Vgh() = default;

  std::vector<VghNode> nodes_;  // index = NodeId; document order for parsed nodes
  std::string name_;
  int height_ = 0;
};

/// Appends a chain of replicated self-copies under every leaf shallower than
/// the height, so all leaves end at the same depth. Height is unchanged and
/// the operation is idempotent.
Vgh balance(const Vgh& v);

}  // namespace vghjudge
