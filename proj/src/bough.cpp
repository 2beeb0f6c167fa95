#include "treewqo/bough.hpp"

#include <algorithm>
#include <stdexcept>

namespace treewqo {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

void validate_backbone(const LabelledTree& t, const Split& s, const BackboneRef& b) {
  if (b.nodes.size() < 2) fail("backbone: needs dimension at least 1");
  for (int v : b.nodes) {
    if (v < 0 || v >= t.size()) fail("backbone: node id out of range");
    if (s.at(v) != b.level) fail("backbone: node value differs from level");
  }
  for (std::size_t i = 0; i + 1 < b.nodes.size(); ++i) {
    int u = b.nodes[i], v = b.nodes[i + 1];
    if (u == v || !t.is_ancestor(u, v)) fail("backbone: nodes not in ancestor order");
    if (gap(t, s, u, v) <= b.level) fail("backbone: consecutive nodes not level-adjacent");
  }
}

std::vector<BackboneRef> enumerate_boughs(const LabelledTree& t, const Split& s, int k,
                                          int min_dim) {
  min_dim = std::max(min_dim, 1);
  std::vector<int> knodes;
  for (int v = 0; v < t.size(); ++v)
    if (s.at(v) == k) knodes.push_back(v);
  // Predecessor: the closest k-ancestor when only values above k intervene.
  std::vector<int> pred(static_cast<std::size_t>(t.size()), -1);
  for (int v : knodes) {
    int min_between = s.height + 1;
    for (int u = t.parent(v); u >= 0; u = t.parent(u)) {
      if (s.at(u) == k) {
        if (min_between > k) pred[static_cast<std::size_t>(v)] = u;
        break;
      }
      min_between = std::min(min_between, s.at(u));
      if (min_between < k) break;
    }
  }
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(t.size()));
  for (int v : knodes)
    if (pred[static_cast<std::size_t>(v)] >= 0)
      succ[static_cast<std::size_t>(pred[static_cast<std::size_t>(v)])].push_back(v);
  std::vector<BackboneRef> out;
  std::vector<int> chain;
  auto dfs = [&](auto&& self, int v) -> void {
    chain.push_back(v);
    if (succ[static_cast<std::size_t>(v)].empty()) {
      if (static_cast<int>(chain.size()) - 1 >= min_dim) {
        BackboneRef b;
        b.nodes = chain;
        b.level = k;
        out.push_back(std::move(b));
      }
    } else {
      for (int w : succ[static_cast<std::size_t>(v)]) self(self, w);
    }
    chain.pop_back();
  };
  for (int v : knodes)
    if (pred[static_cast<std::size_t>(v)] < 0) dfs(dfs, v);
  return out;
}

void Bough::validate() const {
  tree.validate();
  split.validate(tree);
  if (backbone.empty() || backbone.front() != tree.root()) fail("bough: backbone must start at the root");
  BackboneRef ref{backbone, level};
  validate_backbone(tree, split, ref);
  if (!tree.is_leaf(backbone.back())) fail("bough: tail must be a leaf");
}

void BoughContext::validate() const {
  t_root.validate();
  t_left.validate();
  t_right.validate();
  s_root.validate(t_root);
  s_left.validate(t_left);
  s_right.validate(t_right);
  if (s_root.height != s_left.height || s_root.height != s_right.height)
    fail("context: split heights disagree");
  if (hole < 0 || hole >= t_root.size() || !t_root.is_leaf(hole)) fail("context: hole must be a leaf");
  if (m_left < 0 || m_left >= t_left.monoid.size || m_right < 0 || m_right >= t_right.monoid.size)
    fail("context: arm edge labels out of range");
}

namespace {

// Copies the subtree of t rooted at r.  Nodes for which cut(v) holds become
// leaves; map records old ids to new ids.
struct SubtreeCopy {
  LabelledTree tree;
  Split split;
  std::vector<int> map;
};

template <typename Cut>
SubtreeCopy copy_subtree(const LabelledTree& t, const Split& s, int r, Cut cut) {
  SubtreeCopy out;
  out.tree.monoid = t.monoid;
  out.split.height = s.height;
  out.map.assign(static_cast<std::size_t>(t.size()), -1);
  auto emit = [&](auto&& self, int v, int parent, int elabel, int depth) -> int {
    int id = out.tree.size();
    LabelledTree::Node n;
    n.parent = parent;
    n.edge_label = elabel;
    n.depth = depth;
    out.tree.nodes.push_back(n);
    out.split.value.push_back(s.at(v));
    out.map[static_cast<std::size_t>(v)] = id;
    if (!t.is_leaf(v) && !cut(v)) {
      int l = self(self, t.left(v), id, t.edge_label(t.left(v)), depth + 1);
      out.tree.nodes[static_cast<std::size_t>(id)].left = l;
      int rr = self(self, t.right(v), id, t.edge_label(t.right(v)), depth + 1);
      out.tree.nodes[static_cast<std::size_t>(id)].right = rr;
    }
    return id;
  };
  emit(emit, r, -1, -1, 0);
  return out;
}

}  // namespace

Decomposition decompose(const LabelledTree& t, const Split& s, const BackboneRef& b) {
  validate_backbone(t, s, b);
  int b0 = b.nodes.front(), tail = b.nodes.back();
  if (t.is_leaf(tail)) fail("decompose: backbone tail is a leaf; no context arms exist");
  Decomposition d;
  // Host with the bough subtree replaced by a hole leaf.
  SubtreeCopy root_copy = copy_subtree(t, s, t.root(), [&](int v) { return v == b0; });
  d.context.t_root = std::move(root_copy.tree);
  d.context.s_root = std::move(root_copy.split);
  d.context.hole = root_copy.map[static_cast<std::size_t>(b0)];
  d.context.s_root.value[static_cast<std::size_t>(d.context.hole)] = b.level;
  SubtreeCopy left_copy = copy_subtree(t, s, t.left(tail), [](int) { return false; });
  SubtreeCopy right_copy = copy_subtree(t, s, t.right(tail), [](int) { return false; });
  d.context.t_left = std::move(left_copy.tree);
  d.context.s_left = std::move(left_copy.split);
  d.context.t_right = std::move(right_copy.tree);
  d.context.s_right = std::move(right_copy.split);
  d.context.m_left = t.edge_label(t.left(tail));
  d.context.m_right = t.edge_label(t.right(tail));
  SubtreeCopy bough_copy = copy_subtree(t, s, b0, [&](int v) { return v == tail; });
  d.bough.tree = std::move(bough_copy.tree);
  d.bough.split = std::move(bough_copy.split);
  d.bough.level = b.level;
  for (int v : b.nodes) d.bough.backbone.push_back(bough_copy.map[static_cast<std::size_t>(v)]);
  for (std::size_t i = 0; i + 1 < d.bough.backbone.size(); ++i)
    d.blocks.emplace_back(d.bough.backbone[i], d.bough.backbone[i + 1]);
  d.context.validate();
  d.bough.validate();
  return d;
}

Substitution substitute(const BoughContext& c, const Bough& b) {
  c.validate();
  b.validate();
  if (c.s_root.height != b.split.height) fail("substitute: split heights disagree");
  Substitution out;
  out.tree.monoid = b.tree.monoid;
  out.split.height = b.split.height;
  out.from_root.assign(static_cast<std::size_t>(c.t_root.size()), -1);
  out.from_bough.assign(static_cast<std::size_t>(b.tree.size()), -1);
  out.from_left.assign(static_cast<std::size_t>(c.t_left.size()), -1);
  out.from_right.assign(static_cast<std::size_t>(c.t_right.size()), -1);
  int tail = b.backbone.back();

  auto push = [&](int parent, int elabel, int depth, int value) {
    LabelledTree::Node n;
    n.parent = parent;
    n.edge_label = elabel;
    n.depth = depth;
    out.tree.nodes.push_back(n);
    out.split.value.push_back(value);
    return out.tree.size() - 1;
  };
  auto copy_plain = [&](auto&& self, const LabelledTree& t, const Split& s, std::vector<int>& map,
                        int v, int parent, int elabel, int depth) -> int {
    int id = push(parent, elabel, depth, s.at(v));
    map[static_cast<std::size_t>(v)] = id;
    if (!t.is_leaf(v)) {
      out.tree.nodes[static_cast<std::size_t>(id)].left =
          self(self, t, s, map, t.left(v), id, t.edge_label(t.left(v)), depth + 1);
      out.tree.nodes[static_cast<std::size_t>(id)].right =
          self(self, t, s, map, t.right(v), id, t.edge_label(t.right(v)), depth + 1);
    }
    return id;
  };
  auto copy_bough = [&](auto&& self, int v, int parent, int elabel, int depth) -> int {
    int id = push(parent, elabel, depth, b.split.at(v));
    out.from_bough[static_cast<std::size_t>(v)] = id;
    if (v == tail) {
      out.tree.nodes[static_cast<std::size_t>(id)].left = copy_plain(
          copy_plain, c.t_left, c.s_left, out.from_left, c.t_left.root(), id, c.m_left, depth + 1);
      out.tree.nodes[static_cast<std::size_t>(id)].right =
          copy_plain(copy_plain, c.t_right, c.s_right, out.from_right, c.t_right.root(), id,
                     c.m_right, depth + 1);
    } else if (!b.tree.is_leaf(v)) {
      out.tree.nodes[static_cast<std::size_t>(id)].left =
          self(self, b.tree.left(v), id, b.tree.edge_label(b.tree.left(v)), depth + 1);
      out.tree.nodes[static_cast<std::size_t>(id)].right =
          self(self, b.tree.right(v), id, b.tree.edge_label(b.tree.right(v)), depth + 1);
    }
    return id;
  };
  auto copy_root = [&](auto&& self, int v, int parent, int elabel, int depth) -> int {
    if (v == c.hole) {
      int id = copy_bough(copy_bough, b.tree.root(), parent, elabel, depth);
      out.from_root[static_cast<std::size_t>(v)] = id;
      return id;
    }
    int id = push(parent, elabel, depth, c.s_root.at(v));
    out.from_root[static_cast<std::size_t>(v)] = id;
    if (!c.t_root.is_leaf(v)) {
      out.tree.nodes[static_cast<std::size_t>(id)].left = self(
          self, c.t_root.left(v), id, c.t_root.edge_label(c.t_root.left(v)), depth + 1);
      out.tree.nodes[static_cast<std::size_t>(id)].right = self(
          self, c.t_root.right(v), id, c.t_root.edge_label(c.t_root.right(v)), depth + 1);
    }
    return id;
  };
  copy_root(copy_root, c.t_root.root(), -1, -1, 0);
  out.tree.validate();
  out.split.validate(out.tree);
  return out;
}

BoughType bough_type(const LabelledTree& host, const Split& s, const BackboneRef& b, int leaf) {
  validate_backbone(host, s, b);
  int b0 = b.nodes.front(), tail = b.nodes.back();
  if (!host.is_leaf(leaf) || !host.is_ancestor(b0, leaf) || host.is_ancestor(tail, leaf))
    fail("bough_type: leaf is not a bough leaf");
  int bt = lca(host, leaf, tail);
  int block = -1;
  for (std::size_t i = 0; i < b.nodes.size(); ++i)
    if (host.is_ancestor(b.nodes[i], bt)) block = static_cast<int>(i);
  int bl = b.nodes[static_cast<std::size_t>(block)];
  int br = bl == bt ? bl : b.nodes[static_cast<std::size_t>(block) + 1];
  BoughType ty;
  ty.block = block;
  ty.bt = tlbl(host, bt, leaf);
  ty.bl = tlbl(host, bl, bt);
  ty.br = tlbl(host, bt, br);
  ty.broot = tlbl(host, host.root(), bl);
  return ty;
}

int first_idempotent(const Bough& b) {
  return tlbl(b.tree, b.backbone[0], b.backbone[1]);
}

PowerBough power_bough(const Bough& b, int m) {
  if (m < 1) fail("power_bough: exponent must be positive");
  b.validate();
  PowerBough out;
  out.bough.tree.monoid = b.tree.monoid;
  out.bough.split.height = b.split.height;
  out.bough.level = b.level;
  out.copy_map.assign(static_cast<std::size_t>(m),
                      std::vector<int>(static_cast<std::size_t>(b.tree.size()), -1));
  int tail = b.backbone.back();
  auto push = [&](int parent, int elabel, int depth, int value) {
    LabelledTree::Node n;
    n.parent = parent;
    n.edge_label = elabel;
    n.depth = depth;
    out.bough.tree.nodes.push_back(n);
    out.bough.split.value.push_back(value);
    return out.bough.tree.size() - 1;
  };
  auto emit = [&](auto&& self, int j, int v, int parent, int elabel, int depth) -> int {
    int id = push(parent, elabel, depth, b.split.at(v));
    out.copy_map[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)] = id;
    if (v == tail && j + 1 < m) {
      // merge: this node doubles as the next copy's root
      int r = b.tree.root();
      out.copy_map[static_cast<std::size_t>(j) + 1][static_cast<std::size_t>(r)] = id;
      out.bough.tree.nodes[static_cast<std::size_t>(id)].left =
          self(self, j + 1, b.tree.left(r), id, b.tree.edge_label(b.tree.left(r)), depth + 1);
      out.bough.tree.nodes[static_cast<std::size_t>(id)].right =
          self(self, j + 1, b.tree.right(r), id, b.tree.edge_label(b.tree.right(r)), depth + 1);
    } else if (!b.tree.is_leaf(v)) {
      out.bough.tree.nodes[static_cast<std::size_t>(id)].left =
          self(self, j, b.tree.left(v), id, b.tree.edge_label(b.tree.left(v)), depth + 1);
      out.bough.tree.nodes[static_cast<std::size_t>(id)].right =
          self(self, j, b.tree.right(v), id, b.tree.edge_label(b.tree.right(v)), depth + 1);
    }
    return id;
  };
  emit(emit, 0, b.tree.root(), -1, -1, 0);
  for (int j = 0; j < m; ++j)
    for (std::size_t i = (j == 0 ? 0 : 1); i < b.backbone.size(); ++i)
      out.bough.backbone.push_back(
          out.copy_map[static_cast<std::size_t>(j)][static_cast<std::size_t>(b.backbone[i])]);
  out.bough.validate();
  return out;
}

bool compatible_in_context(const BoughContext& c, const Bough& b, const Bough& h) {
  if (b.level != h.level || b.split.height != h.split.height) return false;
  if (first_idempotent(b) != first_idempotent(h)) return false;
  Substitution sub = substitute(c, h);
  return !validate_ramseyan(sub.tree, sub.split).has_value();
}

namespace {

std::vector<std::pair<int, int>> context_leaf_pairs(const BoughContext& c, const Substitution& x,
                                                    const Substitution& y) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < c.t_root.size(); ++v)
    if (c.t_root.is_leaf(v) && v != c.hole)
      pairs.emplace_back(x.from_root[static_cast<std::size_t>(v)],
                         y.from_root[static_cast<std::size_t>(v)]);
  for (int v = 0; v < c.t_left.size(); ++v)
    if (c.t_left.is_leaf(v))
      pairs.emplace_back(x.from_left[static_cast<std::size_t>(v)],
                         y.from_left[static_cast<std::size_t>(v)]);
  for (int v = 0; v < c.t_right.size(); ++v)
    if (c.t_right.is_leaf(v))
      pairs.emplace_back(x.from_right[static_cast<std::size_t>(v)],
                         y.from_right[static_cast<std::size_t>(v)]);
  return pairs;
}

std::vector<int> leaf_vertex_index(const LabelledTree& t) {
  std::vector<int> idx(static_cast<std::size_t>(t.size()), -1);
  int k = 0;
  for (int v : leaves_in_order(t)) idx[static_cast<std::size_t>(v)] = k++;
  return idx;
}

}  // namespace

PerfectOutcome is_perfect_bough(const MonoidInterpretation& i, const BoughContext& c,
                                const Bough& b, Deadline deadline) {
  PerfectOutcome out;
  PowerBough p5 = power_bough(b, 5);
  if (!compatible_in_context(c, b, p5.bough)) {
    out.status = SearchStatus::absent;
    return out;
  }
  Substitution s1 = substitute(c, b);
  Substitution s5 = substitute(c, p5.bough);
  LabelledGraph g1 = interpret(i, s1.tree);
  LabelledGraph g5 = interpret(i, s5.tree);
  std::vector<int> idx1 = leaf_vertex_index(s1.tree);
  std::vector<int> idx5 = leaf_vertex_index(s5.tree);

  int tail = b.backbone.back();
  std::vector<int> bough_leaves;
  for (int v = 0; v < b.tree.size(); ++v)
    if (b.tree.is_leaf(v) && v != tail) bough_leaves.push_back(v);

  BackboneRef bb1{{}, b.level}, bb5{{}, b.level};
  for (int v : b.backbone) bb1.nodes.push_back(s1.from_bough[static_cast<std::size_t>(v)]);
  for (int v : p5.bough.backbone) bb5.nodes.push_back(s5.from_bough[static_cast<std::size_t>(v)]);

  // Middle-copy bough leaves of the power; certified maps must avoid them.
  std::vector<bool> middle(static_cast<std::size_t>(g5.n), false);
  for (int j = 1; j <= 3; ++j)
    for (int v : bough_leaves) {
      int pv = p5.copy_map[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)];
      int sv = s5.from_bough[static_cast<std::size_t>(pv)];
      middle[static_cast<std::size_t>(idx5[static_cast<std::size_t>(sv)])] = true;
    }

  std::vector<std::pair<int, int>> ctx = context_leaf_pairs(c, s1, s5);
  std::size_t nleaves = bough_leaves.size();
  std::uint64_t total = 1ULL << nleaves;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (deadline.expired()) {
      out.status = SearchStatus::deadline;
      return out;
    }
    std::vector<int> f(static_cast<std::size_t>(g1.n), -1);
    for (auto [a, bnode] : ctx)
      f[static_cast<std::size_t>(idx1[static_cast<std::size_t>(a)])] =
          idx5[static_cast<std::size_t>(bnode)];
    std::vector<int> side(nleaves, 0);
    for (std::size_t l = 0; l < nleaves; ++l) {
      // leftmost leaf is the most significant choice; first copy tried first
      side[l] = (mask >> (nleaves - 1 - l)) & 1 ? 1 : 0;
      int copy = side[l] == 0 ? 0 : 4;
      int pv = p5.copy_map[static_cast<std::size_t>(copy)][static_cast<std::size_t>(bough_leaves[l])];
      int sv = s5.from_bough[static_cast<std::size_t>(pv)];
      f[static_cast<std::size_t>(idx1[static_cast<std::size_t>(s1.from_bough[static_cast<std::size_t>(bough_leaves[l])])])] =
          idx5[static_cast<std::size_t>(sv)];
    }
    bool ok = !verify_embedding(g1, g5, f, nullptr, false).has_value();
    for (std::size_t l = 0; ok && l < nleaves; ++l) {
      int copy = side[l] == 0 ? 0 : 4;
      int pv = p5.copy_map[static_cast<std::size_t>(copy)][static_cast<std::size_t>(bough_leaves[l])];
      int sv = s5.from_bough[static_cast<std::size_t>(pv)];
      BoughType t1 = bough_type(s1.tree, s1.split, bb1,
                                s1.from_bough[static_cast<std::size_t>(bough_leaves[l])]);
      BoughType t5 = bough_type(s5.tree, s5.split, bb5, sv);
      if (!t1.same_labels(t5)) ok = false;
    }
    if (ok)
      for (int v : f)
        if (v >= 0 && middle[static_cast<std::size_t>(v)]) ok = false;
    if (ok) {
      PerfectCertificate cert;
      cert.bough_leaves = bough_leaves;
      cert.side = side;
      cert.vertex_map = f;
      out.status = SearchStatus::found;
      out.certificate = std::move(cert);
      return out;
    }
  }
  out.status = SearchStatus::absent;
  return out;
}

bool check_bough_replacement(const MonoidInterpretation& i, const BoughContext& c, const Bough& b,
                             const Bough& h) {
  Substitution sb = substitute(c, b);
  Substitution sh = substitute(c, h);
  LabelledGraph gb = interpret(i, sb.tree);
  LabelledGraph gh = interpret(i, sh.tree);
  std::vector<int> idxb = leaf_vertex_index(sb.tree);
  std::vector<int> idxh = leaf_vertex_index(sh.tree);
  std::vector<std::pair<int, int>> ctx = context_leaf_pairs(c, sb, sh);
  for (std::size_t a = 0; a < ctx.size(); ++a)
    for (std::size_t d = a + 1; d < ctx.size(); ++d) {
      int u1 = idxb[static_cast<std::size_t>(ctx[a].first)];
      int v1 = idxb[static_cast<std::size_t>(ctx[d].first)];
      int u2 = idxh[static_cast<std::size_t>(ctx[a].second)];
      int v2 = idxh[static_cast<std::size_t>(ctx[d].second)];
      if (gb.edge(u1, v1) != gh.edge(u2, v2)) return false;
    }
  return true;
}

}  // namespace treewqo
