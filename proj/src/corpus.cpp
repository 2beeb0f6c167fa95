#include "treewqo/corpus.hpp"

#include <algorithm>

#include "treewqo/gap.hpp"

namespace treewqo {

const std::vector<CorpusMonoid>& corpus_monoids() {
  static const std::vector<CorpusMonoid> table = [] {
    std::vector<CorpusMonoid> v;
    v.push_back({"trivial", trivial_monoid(), true, false, 32});
    v.push_back({"z2", cyclic_monoid(2), true, false, 32});
    v.push_back({"z3", cyclic_monoid(3), true, false, 32});
    v.push_back({"z2xz2", direct_product(cyclic_monoid(2), cyclic_monoid(2)), true, false, 24});
    v.push_back({"z2xz3", direct_product(cyclic_monoid(2), cyclic_monoid(3)), true, false, 24});
    v.push_back({"lz2", left_zero_monoid(2), false, true, 32});
    v.push_back({"lz3", left_zero_monoid(3), false, true, 32});
    v.push_back({"u1", annihilator_monoid(), false, false, 8});
    v.push_back({"u1xz2", direct_product(annihilator_monoid(), cyclic_monoid(2)), false, false, 8});
    return v;
  }();
  return table;
}

namespace {

int random_label(Rng& rng, const FiniteMonoid& m, bool identity_free) {
  if (!identity_free) return static_cast<int>(rng.below(static_cast<std::uint64_t>(m.size)));
  int x = static_cast<int>(rng.below(static_cast<std::uint64_t>(m.size - 1)));
  return x >= m.identity ? x + 1 : x;
}

TreeDescPtr random_shape(Rng& rng, const FiniteMonoid& m, int leaves, bool identity_free) {
  if (leaves == 1) return td_leaf();
  int left = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(leaves - 1)));
  return td_node(random_label(rng, m, identity_free), random_shape(rng, m, left, identity_free),
                 random_label(rng, m, identity_free),
                 random_shape(rng, m, leaves - left, identity_free));
}

}  // namespace

LabelledTree random_tree(Rng& rng, const FiniteMonoid& m, int leaves, bool identity_free) {
  return build_tree(m, random_shape(rng, m, leaves, identity_free));
}

std::optional<SplitInstance> random_split_instance(Rng& rng, Deadline deadline) {
  const auto& monoids = corpus_monoids();
  while (!deadline.expired()) {
    const CorpusMonoid& cm = monoids[static_cast<std::size_t>(rng.below(monoids.size()))];
    int leaves = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cm.max_leaves)));
    LabelledTree t = random_tree(rng, cm.monoid, leaves, cm.identity_free);
    ConstructOutcome c =
        construct_split(t, default_split_budget(cm.monoid), Deadline::after_seconds(0.5));
    if (c.status != SearchStatus::found) continue;
    return SplitInstance{cm.name, std::move(t), std::move(*c.split)};
  }
  return std::nullopt;
}

MonoidInterpretation random_interpretation(Rng& rng, const FiniteMonoid& m) {
  MonoidInterpretation i;
  i.morphism.monoid = m;
  i.morphism.monoid.ensure_names();
  i.morphism.alphabet = i.morphism.monoid.names;
  for (int e = 0; e < m.size; ++e) i.morphism.image.push_back(e);
  for (int a = 0; a < m.size; ++a)
    for (int b = 0; b < m.size; ++b)
      for (int c = 0; c < m.size; ++c)
        if (rng.chance(0.5)) i.edges.insert({a, b, c});
  i.validate();
  return i;
}

namespace {

// Root to M, close the M set under lca, and demote pattern endpoints to D
// until well-marked.  Gives up when the demote/close alternation cycles.
bool repair_marking(MarkedNestedTree& m) {
  int guard = 10 * m.tree.size() + 20;
  while (guard-- > 0) {
    m.marking[0] = Marking::M;
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> ms;
      for (int v = 0; v < m.tree.size(); ++v)
        if (m.mark(v) == Marking::M) ms.push_back(v);
      for (int x : ms)
        for (int y : ms) {
          int l = lca(m.tree, x, y);
          if (m.mark(l) != Marking::M) {
            m.marking[static_cast<std::size_t>(l)] = Marking::M;
            grew = true;
          }
        }
    }
    std::optional<ClauseFailure> f = is_well_marked(m);
    if (!f) return true;
    m.marking[static_cast<std::size_t>(f->nodes.back())] = Marking::D;
  }
  return false;
}

int m_leaf_count(const MarkedNestedTree& m) {
  int count = 0;
  for (int v = 0; v < m.tree.size(); ++v)
    if (m.tree.is_leaf(v) && m.mark(v) == Marking::M) ++count;
  return count;
}

// Closest strict ancestor of v with the same split value, provided every
// value in between is larger.
int class_predecessor(const LabelledTree& t, const Split& s, int v) {
  int k = s.at(v);
  for (int u = t.parent(v); u >= 0; u = t.parent(u)) {
    if (s.at(u) == k) return u;
    if (s.at(u) < k) return -1;
  }
  return -1;
}

struct Insertion {
  MarkedNestedTree big;
  std::vector<int> map;  // original node -> copied node
};

// Copies `small` with a fresh dummy node z spliced in directly above w and a
// fresh dummy leaf as z's other child.  z keeps w's old incoming label and
// value; the edge from z to w carries tlbl(class predecessor of w, w), which
// preserves w's ancestor products under a left-zero table.
Insertion insert_above(Rng& rng, const MarkedNestedTree& small, int w, int w_prev) {
  const LabelledTree& t = small.tree;
  Insertion out;
  out.big.tree.monoid = t.monoid;
  out.big.split.height = small.split.height;
  out.map.assign(static_cast<std::size_t>(t.size()), -1);
  int wk = small.split.at(w);
  int wedge = tlbl(t, w_prev, w);
  int leaf_label = random_label(rng, t.monoid, true);
  int leaf_value = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(small.split.height)));
  bool leaf_first = rng.chance(0.5);

  auto push = [&](int parent, int elabel, int depth, int value, Marking mark) {
    LabelledTree::Node n;
    n.parent = parent;
    n.edge_label = elabel;
    n.depth = depth;
    out.big.tree.nodes.push_back(n);
    out.big.split.value.push_back(value);
    out.big.marking.push_back(mark);
    return out.big.tree.size() - 1;
  };
  auto copy_plain = [&](auto&& self, int v, int parent, int elabel, int depth) -> int {
    int id = push(parent, elabel, depth, small.split.at(v), small.mark(v));
    out.map[static_cast<std::size_t>(v)] = id;
    if (!t.is_leaf(v)) {
      out.big.tree.nodes[static_cast<std::size_t>(id)].left =
          self(self, t.left(v), id, t.edge_label(t.left(v)), depth + 1);
      out.big.tree.nodes[static_cast<std::size_t>(id)].right =
          self(self, t.right(v), id, t.edge_label(t.right(v)), depth + 1);
    }
    return id;
  };
  auto copy_splice = [&](auto&& self, int v, int parent, int elabel, int depth) -> int {
    if (v == w) {
      int z = push(parent, elabel, depth, wk, Marking::D);
      if (leaf_first) {
        out.big.tree.nodes[static_cast<std::size_t>(z)].left =
            push(z, leaf_label, depth + 1, leaf_value, Marking::D);
        out.big.tree.nodes[static_cast<std::size_t>(z)].right =
            copy_plain(copy_plain, w, z, wedge, depth + 1);
      } else {
        out.big.tree.nodes[static_cast<std::size_t>(z)].left =
            copy_plain(copy_plain, w, z, wedge, depth + 1);
        out.big.tree.nodes[static_cast<std::size_t>(z)].right =
            push(z, leaf_label, depth + 1, leaf_value, Marking::D);
      }
      return z;
    }
    int id = push(parent, elabel, depth, small.split.at(v), small.mark(v));
    out.map[static_cast<std::size_t>(v)] = id;
    if (!t.is_leaf(v)) {
      out.big.tree.nodes[static_cast<std::size_t>(id)].left =
          self(self, t.left(v), id, t.edge_label(t.left(v)), depth + 1);
      out.big.tree.nodes[static_cast<std::size_t>(id)].right =
          self(self, t.right(v), id, t.edge_label(t.right(v)), depth + 1);
    }
    return id;
  };
  copy_splice(copy_splice, t.root(), -1, -1, 0);
  out.big.tree.validate();
  out.big.validate();
  return out;
}

}  // namespace

std::optional<MarkedPairInstance> random_marked_pair(Rng& rng, int max_leaves, Deadline deadline) {
  while (!deadline.expired()) {
    FiniteMonoid m = rng.chance(0.5) ? left_zero_monoid(2) : left_zero_monoid(3);
    int leaves =
        4 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(1, max_leaves - 3))));
    MarkedNestedTree small;
    small.tree = random_tree(rng, m, leaves, true);
    small.split.height = 2 + static_cast<int>(rng.below(3));
    for (int v = 0; v < small.tree.size(); ++v)
      small.split.value.push_back(
          1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(small.split.height))));
    for (int v = 0; v < small.tree.size(); ++v)
      small.marking.push_back(static_cast<Marking>(rng.below(3)));
    if (!repair_marking(small)) continue;
    if (m_leaf_count(small) < 2) continue;
    if (validate_ramseyan(small.tree, small.split)) continue;

    std::vector<std::pair<int, int>> candidates;
    for (int w = 1; w < small.tree.size(); ++w) {
      if (small.mark(w) != Marking::D) continue;
      int w_prev = class_predecessor(small.tree, small.split, w);
      if (w_prev >= 0) candidates.emplace_back(w, w_prev);
    }
    if (candidates.empty()) continue;
    auto [w, w_prev] = candidates[static_cast<std::size_t>(rng.below(candidates.size()))];
    Insertion ins = insert_above(rng, small, w, w_prev);
    if (is_well_marked(ins.big)) continue;
    if (validate_ramseyan(ins.big.tree, ins.big.split)) continue;
    std::vector<int> h(ins.map.begin(), ins.map.end());
    if (check_marked_gap(small, ins.big, h)) continue;

    MarkedPairInstance out;
    out.interp = random_interpretation(rng, m);
    out.small = std::move(small);
    out.big = std::move(ins.big);
    out.map_hint = std::move(h);
    return out;
  }
  return std::nullopt;
}

std::optional<BoughInstance> random_bough_instance(Rng& rng, int max_leaves, Deadline deadline) {
  while (!deadline.expired()) {
    std::optional<SplitInstance> si = random_split_instance(rng, deadline);
    if (!si) return std::nullopt;
    if (si->tree.size() < 5 || si->tree.size() > 2 * max_leaves - 1) continue;
    std::vector<BackboneRef> usable;
    for (int k = 1; k <= si->split.height; ++k)
      for (const BackboneRef& b : enumerate_boughs(si->tree, si->split, k, 1))
        for (std::size_t end = 1; end < b.nodes.size(); ++end)
          if (!si->tree.is_leaf(b.nodes[end]))
            usable.push_back(BackboneRef{
                {b.nodes.begin(), b.nodes.begin() + static_cast<long>(end) + 1}, b.level});
    if (usable.empty()) continue;
    BackboneRef pick = usable[static_cast<std::size_t>(rng.below(usable.size()))];
    return BoughInstance{si->monoid_name, std::move(si->tree), std::move(si->split),
                         std::move(pick)};
  }
  return std::nullopt;
}

RegularSequence random_sequence(Rng& rng, int max_base) {
  RegularSequence s;
  int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_base)));
  s.base.n = n;
  for (int v = 0; v < n; ++v) {
    s.base.labels.push_back("l" + std::to_string(v));
    s.base.vlabel.push_back(v);
  }
  s.base.adj.assign(static_cast<std::size_t>(n),
                    std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(0.5)) s.base.set_edge(u, v, true);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (rng.chance(0.5))
        s.close.insert(
            {s.base.labels[static_cast<std::size_t>(u)], s.base.labels[static_cast<std::size_t>(v)]});
      if (rng.chance(0.5))
        s.far.insert(
            {s.base.labels[static_cast<std::size_t>(u)], s.base.labels[static_cast<std::size_t>(v)]});
    }
  s.validate();
  return s;
}

}  // namespace treewqo
