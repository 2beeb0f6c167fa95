#pragma once

// Brute-force reference implementations for testing.  Everything here favours
// directness over speed and is only called on small inputs.

#include <optional>
#include <vector>

#include "treewqo/graph.hpp"
#include "treewqo/interp.hpp"
#include "treewqo/tree.hpp"

namespace oracle {

using treewqo::LabelledGraph;
using treewqo::LabelledTree;
using treewqo::LabelOrder;
using treewqo::MonoidInterpretation;
using treewqo::TreeDescPtr;

// Tries every injective vertex map in lexicographic order and checks the
// embedding conditions directly on each pair.
inline std::optional<std::vector<int>> embed_brute(const LabelledGraph& small,
                                                   const LabelledGraph& big,
                                                   const LabelOrder* ord = nullptr,
                                                   bool respect_order = false) {
  std::vector<int> map(static_cast<std::size_t>(small.n), -1);
  std::vector<bool> used(static_cast<std::size_t>(big.n), false);
  auto label_ok = [&](int v, int u) {
    if (ord) return ord->leq(small.label_name(v), big.label_name(u));
    return small.label_name(v) == big.label_name(u);
  };
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == small.n) return true;
    for (int u = 0; u < big.n; ++u) {
      if (used[static_cast<std::size_t>(u)] || !label_ok(v, u)) continue;
      bool ok = true;
      for (int w = 0; w < v && ok; ++w) {
        int x = map[static_cast<std::size_t>(w)];
        if (small.edge(w, v) != big.edge(x, u)) ok = false;
        if (respect_order && (small.position(w) < small.position(v)) !=
                                 (big.position(x) < big.position(u)))
          ok = false;
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(v)] = u;
      used[static_cast<std::size_t>(u)] = true;
      if (self(self, v + 1)) return true;
      used[static_cast<std::size_t>(u)] = false;
      map[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  if (rec(rec, 0)) return map;
  return std::nullopt;
}

// Edge set of interpret() recomputed pair by pair, with each of the three
// products accumulated by walking explicit parent chains.
inline LabelledGraph interpret_brute(const MonoidInterpretation& i, const LabelledTree& t) {
  auto walk = [&](int from, int to) {
    std::vector<int> path;
    for (int v = to; v != from; v = t.parent(v)) path.push_back(v);
    int acc = t.monoid.identity;
    for (auto it = path.rbegin(); it != path.rend(); ++it)
      acc = t.monoid.mul(acc, t.edge_label(*it));
    return acc;
  };
  std::vector<int> leaves;
  for (int v = 0; v < t.size(); ++v)
    if (t.is_leaf(v)) leaves.push_back(v);
  LabelledGraph g = LabelledGraph::empty(static_cast<int>(leaves.size()));
  std::vector<int> order(leaves.size());
  for (std::size_t k = 0; k < leaves.size(); ++k) order[k] = static_cast<int>(k);
  g.vorder = order;
  for (std::size_t a = 0; a < leaves.size(); ++a)
    for (std::size_t b = a + 1; b < leaves.size(); ++b) {
      int l = leaves[a];
      while (!t.is_ancestor(l, leaves[b])) l = t.parent(l);
      int r = walk(t.root(), l);
      int lx = walk(l, leaves[a]);
      int ly = walk(l, leaves[b]);
      if (i.edges.count({r, lx, ly})) g.set_edge(static_cast<int>(a), static_cast<int>(b), true);
    }
  return g;
}

// All full binary tree shapes with the given leaf count, every edge carrying
// the same label.  Sizes follow the Catalan numbers.
inline std::vector<TreeDescPtr> all_shapes(int leaves, int label) {
  if (leaves == 1) return {treewqo::td_leaf()};
  std::vector<TreeDescPtr> out;
  for (int l = 1; l < leaves; ++l)
    for (const auto& a : all_shapes(l, label))
      for (const auto& b : all_shapes(leaves - l, label))
        out.push_back(treewqo::td_node(label, a, label, b));
  return out;
}

}  // namespace oracle
