#include "treewqo/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace treewqo {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

int build_rec(LabelledTree& t, const TreeDescPtr& d, int parent, int edge_label, int depth) {
  int id = t.size();
  LabelledTree::Node n;
  n.parent = parent;
  n.edge_label = edge_label;
  n.depth = depth;
  t.nodes.push_back(n);
  if (d->left) {
    int l = build_rec(t, d->left, id, d->left_label, depth + 1);
    t.nodes[static_cast<std::size_t>(id)].left = l;
    int r = build_rec(t, d->right, id, d->right_label, depth + 1);
    t.nodes[static_cast<std::size_t>(id)].right = r;
  }
  return id;
}

}  // namespace

int LabelledTree::height() const {
  int h = 0;
  for (const auto& n : nodes) h = std::max(h, n.depth);
  return h;
}

bool LabelledTree::is_ancestor(int x, int y) const {
  while (y >= 0 && depth(y) > depth(x)) y = parent(y);
  return y == x;
}

void LabelledTree::validate() const {
  if (nodes.empty()) fail("tree: empty");
  if (nodes[0].parent != -1 || nodes[0].edge_label != -1 || nodes[0].depth != 0)
    fail("tree: malformed root");
  for (int v = 0; v < size(); ++v) {
    const Node& n = nodes[static_cast<std::size_t>(v)];
    if ((n.left < 0) != (n.right < 0)) fail("tree: node " + std::to_string(v) + " is not full binary");
    if (n.left >= 0) {
      if (n.left >= size() || n.right >= size()) fail("tree: child id out of range");
      if (parent(n.left) != v || parent(n.right) != v) fail("tree: parent link mismatch");
      if (depth(n.left) != n.depth + 1 || depth(n.right) != n.depth + 1)
        fail("tree: depth mismatch");
    }
    if (v != 0) {
      if (n.edge_label < 0 || n.edge_label >= monoid.size)
        fail("tree: edge label out of range at node " + std::to_string(v));
      if (n.parent < 0 || n.parent >= size()) fail("tree: parent out of range");
    }
  }
}

TreeDescPtr td_leaf() { return std::make_shared<const TreeDesc>(); }

TreeDescPtr td_node(int left_label, TreeDescPtr left, int right_label, TreeDescPtr right) {
  TreeDesc d;
  d.left_label = left_label;
  d.right_label = right_label;
  d.left = std::move(left);
  d.right = std::move(right);
  return std::make_shared<const TreeDesc>(std::move(d));
}

LabelledTree build_tree(const FiniteMonoid& m, const TreeDescPtr& d) {
  LabelledTree t;
  t.monoid = m;
  build_rec(t, d, -1, -1, 0);
  t.validate();
  return t;
}

LabelledTree single_leaf_tree(const FiniteMonoid& m) { return build_tree(m, td_leaf()); }

int lca(const LabelledTree& t, int x, int y) {
  while (t.depth(x) > t.depth(y)) x = t.parent(x);
  while (t.depth(y) > t.depth(x)) y = t.parent(y);
  while (x != y) {
    x = t.parent(x);
    y = t.parent(y);
  }
  return x;
}

int tlbl(const LabelledTree& t, int x, int y) {
  std::vector<int> labels;
  int v = y;
  while (v != x) {
    if (v < 0 || t.depth(v) <= t.depth(x)) fail("tlbl: first node is not an ancestor of the second");
    labels.push_back(t.edge_label(v));
    v = t.parent(v);
  }
  std::reverse(labels.begin(), labels.end());
  return t.monoid.product(labels);
}

std::vector<int> leaves_in_order(const LabelledTree& t) {
  std::vector<int> out;
  for (int v = 0; v < t.size(); ++v)
    if (t.is_leaf(v)) out.push_back(v);
  return out;
}

bool node_before(const LabelledTree&, int x, int y) { return x < y; }

LabelledTree build_linear(const FiniteMonoid& m,
                          const std::vector<std::pair<int, int>>& cells) {
  if (cells.empty()) fail("build_linear: need at least one cell");
  TreeDescPtr acc = td_leaf();
  for (auto it = cells.rbegin(); it != cells.rend(); ++it)
    acc = td_node(it->first, td_leaf(), it->second, acc);
  return build_tree(m, acc);
}

bool same_tree(const LabelledTree& a, const LabelledTree& b) {
  if (a.size() != b.size()) return false;
  for (int v = 0; v < a.size(); ++v) {
    const auto& x = a.nodes[static_cast<std::size_t>(v)];
    const auto& y = b.nodes[static_cast<std::size_t>(v)];
    if (x.parent != y.parent || x.left != y.left || x.right != y.right ||
        x.edge_label != y.edge_label)
      return false;
  }
  return true;
}

}  // namespace treewqo
