#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcog/graph.hpp"

namespace pcog {

enum class NodeKind : std::uint8_t { Leaf, Union, Join };

struct CotreeNode {
  NodeKind kind = NodeKind::Leaf;
  Vertex vertex = -1;  // leaves only
  int left = -1;       // internal nodes only
  int right = -1;
};

/// Rooted binary tree whose leaves carry vertex ids and whose internal nodes
/// are tagged Union (no cross edges) or Join (all cross edges). The
/// default-constructed tree is the empty certificate for the 0-vertex graph.
class Cotree {
 public:
  Cotree() = default;

  int add_leaf(Vertex v);
  int add_internal(NodeKind kind, int left, int right);
  void set_root(int id);

  bool empty() const { return root_ < 0; }
  int root() const { return root_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  const CotreeNode& node(int id) const;

  /// Leaf vertices of the subtree rooted at id, left to right.
  void collect_leaves(int id, std::vector<Vertex>& out) const;
  /// Leaf vertices of the whole tree, left to right; empty for the empty tree.
  std::vector<Vertex> leaves() const;

 private:
  std::vector<CotreeNode> nodes_;
  int root_ = -1;
};

/// Adjacency matrix of the graph the cotree describes: a Join node connects
/// every leaf of its left subtree with every leaf of its right subtree, a
/// Union node adds nothing. Returned with k = 0 labels. Throws Error unless
/// the tree has exactly n leaves carrying each of 0..n-1 once.
LabeledGraph realize(const Cotree& t, int n);

/// Every non-root node identifies the tree edge to its parent. Returned in
/// preorder (left subtree first).
std::vector<int> tree_edges(const Cotree& t);

/// Splits the leaves along the tree edge above `below_node`: first the leaves
/// of that subtree, then everything else, both ascending. Throws Error for an
/// invalid edge id (out of range, or the root).
std::pair<std::vector<Vertex>, std::vector<Vertex>> leaf_partition(
    const Cotree& t, int below_node);

/// S-expression form: leaves as 1-based vertex ids, internal nodes as
/// `(join L R)` / `(union L R)`. The empty tree prints as "()".
std::string to_sexp(const Cotree& t);

/// Graphviz form: joins as circles, unions as diamonds, leaves as boxes,
/// labeled with the operator glyph or the 1-based vertex id. `ascii` swaps
/// the glyphs for "x"/"u".
std::string to_dot(const Cotree& t, bool ascii = false);

/// Inverse of to_sexp. Grammar: tree := id | "(" ("join"|"union") tree tree
/// ")", ids 1-based, whitespace-separated; the literal "()" is the empty
/// tree. Throws ParseError with a byte offset on syntax errors and on
/// duplicate or missing leaf ids.
Cotree parse_cotree(std::string_view text);

/// Shape comparison that ignores arena node numbering.
bool structurally_equal(const Cotree& a, const Cotree& b);

/// Copy with every internal node's children ordered by minimum leaf id, so
/// that structurally_equal becomes an order-insensitive certificate check.
Cotree canonicalized(const Cotree& t);

}  // namespace pcog
