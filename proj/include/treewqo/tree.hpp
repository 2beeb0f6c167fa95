#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "treewqo/monoid.hpp"

namespace treewqo {

// Full binary tree with monoid elements on non-root edges.  Nodes are indexed
// in depth-first preorder (root = 0, left subtree before right subtree); every
// array keyed by node id across the library uses this numbering.
struct LabelledTree {
  struct Node {
    int parent = -1;
    int left = -1;   // -1 on leaves
    int right = -1;
    int edge_label = -1;  // label of the edge from parent; -1 on the root
    int depth = 0;
  };

  std::vector<Node> nodes;
  FiniteMonoid monoid;

  int size() const { return static_cast<int>(nodes.size()); }
  int root() const { return 0; }
  bool is_leaf(int v) const { return nodes[static_cast<std::size_t>(v)].left < 0; }
  int parent(int v) const { return nodes[static_cast<std::size_t>(v)].parent; }
  int left(int v) const { return nodes[static_cast<std::size_t>(v)].left; }
  int right(int v) const { return nodes[static_cast<std::size_t>(v)].right; }
  int depth(int v) const { return nodes[static_cast<std::size_t>(v)].depth; }
  int edge_label(int v) const { return nodes[static_cast<std::size_t>(v)].edge_label; }
  int height() const;

  // Ancestor order: x above-or-equal y.
  bool is_ancestor(int x, int y) const;

  void validate() const;
};

// Construction descriptor for hand-built trees: a leaf, or an internal node
// with labelled edges to two subtrees.
struct TreeDesc;
using TreeDescPtr = std::shared_ptr<const TreeDesc>;
struct TreeDesc {
  int left_label = -1, right_label = -1;
  TreeDescPtr left, right;
};
TreeDescPtr td_leaf();
TreeDescPtr td_node(int left_label, TreeDescPtr left, int right_label, TreeDescPtr right);
LabelledTree build_tree(const FiniteMonoid& m, const TreeDescPtr& d);
LabelledTree single_leaf_tree(const FiniteMonoid& m);

// Lowest common ancestor under the ancestor order.
int lca(const LabelledTree& t, int x, int y);

// Product of edge labels on the downward path from x to y; requires x to be
// an ancestor of y.  tlbl(x, x) is the identity and
// tlbl(x, z) = tlbl(x, y) * tlbl(y, z) for x above y above z.
int tlbl(const LabelledTree& t, int x, int y);

// Leaves in sibling order (left to right); for preorder ids this is ascending.
std::vector<int> leaves_in_order(const LabelledTree& t);

// Total order on nodes extending the sibling order: ancestors come first, and
// incomparable nodes compare by which side of their lca they lie on.  Returns
// true when x precedes y; for preorder ids this is x < y.
bool node_before(const LabelledTree& t, int x, int y);

// Linear tree over cells (leaf_label, spine_label): each cell contributes an
// internal node with a left leaf reached by leaf_label and a spine edge
// labelled spine_label to the next cell; the last spine edge ends in a leaf.
LabelledTree build_linear(const FiniteMonoid& m,
                          const std::vector<std::pair<int, int>>& cells);

// Structural equality including edge labels (monoid tables are not compared).
bool same_tree(const LabelledTree& a, const LabelledTree& b);

}  // namespace treewqo
