#include "vghjudge/vgh.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "vghjudge/errors.hpp"
#include "vghjudge/text.hpp"

namespace vghjudge {

namespace {

// Splits a trailing "#<digits>" sense suffix off a node token.
std::pair<std::string, std::optional<int>> split_sense(std::string token, int line_no) {
  while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.pop_back();
  const auto hash = token.rfind('#');
  if (hash == std::string::npos || hash + 1 == token.size()) return {token, std::nullopt};
  const std::string digits = token.substr(hash + 1);
  if (!std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c); }))
    return {token, std::nullopt};
  int sense = 0;
  try {
    sense = std::stoi(digits);
  } catch (const std::exception&) {
    throw ParseError("sense annotation '" + digits + "' out of range", line_no);
  }
  if (sense <= 0)
    throw ParseError("sense annotation must be a positive integer", line_no);
  return {token.substr(0, hash), sense};
}

}  // namespace

Vgh Vgh::parse(std::istream& in, std::string name) {
  Vgh v;
  v.name_ = std::move(name);

  std::string line;
  int line_no = 0;
  std::vector<NodeId> stack;  // stack[d] = last node seen at depth d
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') continue;

    const auto content_start = line.find_first_not_of(' ');
    if (content_start == std::string::npos) continue;  // spaces only
    if (line[content_start] == '\t')
      throw ParseError("tabs are not allowed in indentation", line_no);
    if (content_start % 2 != 0)
      throw ParseError("indentation of " + std::to_string(content_start) +
                           " spaces is not a multiple of two",
                       line_no);
    const int depth = static_cast<int>(content_start / 2);

    auto [raw_term, sense] = split_sense(line.substr(content_start), line_no);
    const std::string term = normalize_term(raw_term);
    if (term.empty()) throw ParseError("empty term", line_no);

    if (v.nodes_.empty()) {
      if (depth != 0)
        throw ParseError("the root node must start at column zero", line_no);
    } else {
      if (depth == 0)
        throw ParseError("multiple root nodes ('" + term + "' after '" +
                             v.nodes_[0].term + "')",
                         line_no);
      if (depth > static_cast<int>(stack.size()))
        throw ParseError("indentation skips a level", line_no);
    }

    VghNode node;
    node.term = term;
    node.sense = sense;
    node.depth = depth;
    const auto id = static_cast<NodeId>(v.nodes_.size());
    if (depth > 0) {
      const NodeId parent = stack[depth - 1];
      for (NodeId sibling : v.nodes_[parent].children)
        if (v.nodes_[sibling].term == term)
          throw ParseError("duplicate sibling term '" + term + "'", line_no);
      node.parent = parent;
      v.nodes_[parent].children.push_back(id);
    }
    v.nodes_.push_back(std::move(node));

    stack.resize(depth);
    stack.push_back(id);
    v.height_ = std::max(v.height_, depth);
  }

  if (v.nodes_.empty()) throw ParseError("empty hierarchy");
  return v;
}

Vgh Vgh::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open hierarchy file '" + path + "'");
  std::string name = std::filesystem::path(path).stem().string();
  try {
    return parse(in, std::move(name));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void Vgh::serialize(std::ostream& out) const {
  std::vector<NodeId> stack{root_id()};
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    const VghNode& n = nodes_[id];
    out << std::string(static_cast<std::size_t>(n.depth) * 2, ' ') << n.term;
    if (n.sense) out << '#' << *n.sense;
    out << '\n';
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
  }
}

const VghNode& Vgh::node(NodeId id) const {
  if (id >= nodes_.size()) throw std::out_of_range("no such node");
  return nodes_[id];
}

bool Vgh::balanced() const {
  for (const auto& n : nodes_)
    if (n.children.empty() && n.depth != height_) return false;
  return true;
}

std::vector<NodeId> Vgh::leaves_any_depth() const {
  std::vector<NodeId> result;
  std::vector<NodeId> stack{root_id()};
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    const VghNode& n = nodes_[id];
    if (n.children.empty()) result.push_back(id);
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
  }
  return result;
}

std::vector<NodeId> Vgh::leaves() const {
  if (!balanced())
    throw std::logic_error("leaves() requires a balanced hierarchy; call balance() first");
  return leaves_any_depth();
}

NodeId Vgh::ancestor_at_level(NodeId leaf, int level) const {
  const VghNode& n = node(leaf);
  if (!n.children.empty()) throw std::invalid_argument("node '" + n.term + "' is not a leaf");
  if (level < 1 || level > height_)
    throw std::out_of_range("level " + std::to_string(level) + " outside [1, " +
                            std::to_string(height_) + "]");
  NodeId current = leaf;
  for (int i = 0; i < level; ++i) current = nodes_[current].parent;
  return current;
}

NodeId Vgh::origin(NodeId id) const {
  while (node(id).replicated) id = nodes_[id].parent;
  return id;
}

namespace {

bool same_subtree(const Vgh& a, NodeId na, const Vgh& b, NodeId nb) {
  const VghNode& x = a.node(na);
  const VghNode& y = b.node(nb);
  if (x.term != y.term || x.sense != y.sense || x.replicated != y.replicated) return false;
  if (x.children.size() != y.children.size()) return false;
  for (std::size_t i = 0; i < x.children.size(); ++i)
    if (!same_subtree(a, x.children[i], b, y.children[i])) return false;
  return true;
}

}  // namespace

bool Vgh::same_structure(const Vgh& other) const {
  return same_subtree(*this, root_id(), other, other.root_id());
}

Vgh balance(const Vgh& v) {
  Vgh out = v;
  const int h = out.height_;
  for (const NodeId leaf : v.leaves_any_depth()) {
    const VghNode& original = v.node(leaf);
    if (original.replicated) continue;  // already part of a replication chain
    NodeId current = leaf;
    for (int depth = original.depth; depth < h; ++depth) {
      VghNode copy;
      copy.term = original.term;
      copy.sense = original.sense;
      copy.parent = current;
      copy.depth = depth + 1;
      copy.replicated = true;
      const auto id = static_cast<NodeId>(out.nodes_.size());
      out.nodes_[current].children.push_back(id);
      out.nodes_.push_back(std::move(copy));
      current = id;
    }
  }
  return out;
}

}  // namespace vghjudge
