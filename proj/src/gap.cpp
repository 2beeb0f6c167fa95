#include "treewqo/gap.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace treewqo {

namespace {

std::vector<int> marked_nodes(const MarkedNestedTree& m, Marking which) {
  std::vector<int> out;
  for (int v = 0; v < m.tree.size(); ++v)
    if (m.mark(v) == which) out.push_back(v);
  return out;
}

std::vector<int> path_between(const LabelledTree& t, int x, int y) {
  std::vector<int> path;
  for (int v = y; v != x; v = t.parent(v)) path.push_back(v);
  path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::optional<ClauseFailure> is_well_marked(const MarkedNestedTree& m, bool z3_strict) {
  const LabelledTree& t = m.tree;
  const Split& s = m.split;
  if (m.mark(t.root()) != Marking::M) return ClauseFailure{"root-marked", {t.root()}};
  std::vector<int> ms = marked_nodes(m, Marking::M);
  for (int x : ms)
    for (int y : ms) {
      if (x == y) continue;
      int l = lca(t, x, y);
      if (m.mark(l) != Marking::M) return ClauseFailure{"lca-closed", {x, y, l}};
    }
  for (int x : ms)
    for (int y : ms) {
      if (x == y || !t.is_ancestor(x, y)) continue;
      std::vector<int> path = path_between(t, x, y);
      int n = static_cast<int>(path.size());
      // suffix_min[i]: least split value strictly between path[i] and y
      std::vector<int> suffix_min(static_cast<std::size_t>(n), s.height + 1);
      for (int i = n - 3; i >= 0; --i)
        suffix_min[static_cast<std::size_t>(i)] =
            std::min(suffix_min[static_cast<std::size_t>(i) + 1],
                     s.at(path[static_cast<std::size_t>(i) + 1]));
      int prefix_min = s.height + 1;  // least value strictly between x and z1
      for (int i = 1; i + 1 <= n - 1; ++i) {
        int z1 = path[static_cast<std::size_t>(i)];
        int k = s.at(z1);
        bool pattern = prefix_min > k && suffix_min[static_cast<std::size_t>(i)] >= k;
        prefix_min = std::min(prefix_min, k);
        if (!pattern) continue;
        if (m.mark(z1) != Marking::M) return ClauseFailure{"pattern-z1-marked", {x, z1, y}};
        int z2 = -1;
        for (int j = i + 1; j <= n - 1; ++j)
          if (s.at(path[static_cast<std::size_t>(j)]) == k) {
            z2 = path[static_cast<std::size_t>(j)];
            break;
          }
        if (z2 < 0) return ClauseFailure{"pattern-z2-exists", {x, z1, y}};
        if (m.mark(z2) == Marking::D) return ClauseFailure{"pattern-z2-marked", {x, z1, z2, y}};
        if (z3_strict) {
          int z3 = -1;
          for (int j = n - 2; j >= i + 1; --j)
            if (s.at(path[static_cast<std::size_t>(j)]) == k) {
              z3 = path[static_cast<std::size_t>(j)];
              break;
            }
          if (z3 < 0) return ClauseFailure{"pattern-z3-strict", {x, z1, y}};
        }
      }
    }
  return std::nullopt;
}

int longest_non_dummy_chain(const MarkedNestedTree& m) {
  const LabelledTree& t = m.tree;
  std::vector<int> len(static_cast<std::size_t>(t.size()), 0);
  int best = 0;
  for (int v = 0; v < t.size(); ++v) {
    if (m.mark(v) == Marking::D) continue;
    int p = t.parent(v);
    len[static_cast<std::size_t>(v)] =
        (p >= 0 && m.mark(p) != Marking::D) ? len[static_cast<std::size_t>(p)] + 1 : 1;
    best = std::max(best, len[static_cast<std::size_t>(v)]);
  }
  return best;
}

bool is_L_bounded(const MarkedNestedTree& m, int L) { return longest_non_dummy_chain(m) <= L; }

namespace {

std::optional<ClauseFailure> check_map_shape(const LabelledTree& t1, const LabelledTree& t2,
                                             const std::vector<int>& h) {
  if (h.size() != static_cast<std::size_t>(t1.size())) return ClauseFailure{"map-size", {}};
  for (int v = 0; v < t1.size(); ++v) {
    int u = h[static_cast<std::size_t>(v)];
    if (u < 0 || u >= t2.size()) return ClauseFailure{"map-range", {v}};
  }
  for (int v = 0; v < t1.size(); ++v)
    for (int w = v + 1; w < t1.size(); ++w)
      if (h[static_cast<std::size_t>(v)] == h[static_cast<std::size_t>(w)])
        return ClauseFailure{"map-injective", {v, w}};
  return std::nullopt;
}

}  // namespace

std::optional<ClauseFailure> check_gap(const LabelledTree& t1, const Split& s1,
                                       const LabelledTree& t2, const Split& s2,
                                       const std::vector<int>& h,
                                       const std::vector<std::string>* labels1,
                                       const std::vector<std::string>* labels2,
                                       const LabelOrder* ord) {
  if (auto bad = check_map_shape(t1, t2, h)) return bad;
  // Node ids are preorder, which extends both the ancestor order and the
  // sibling order; together with lca preservation, an increasing map is
  // exactly a tree embedding.
  for (int v = 0; v < t1.size(); ++v)
    for (int w = v + 1; w < t1.size(); ++w) {
      if (h[static_cast<std::size_t>(v)] >= h[static_cast<std::size_t>(w)])
        return ClauseFailure{"tree-order", {v, w}};
      int l = lca(t1, v, w);
      if (h[static_cast<std::size_t>(l)] !=
          lca(t2, h[static_cast<std::size_t>(v)], h[static_cast<std::size_t>(w)]))
        return ClauseFailure{"tree-lca", {v, w, l}};
    }
  if (gap_or_top(t2, s2, t2.root(), h[0]) < s1.at(t1.root()))
    return ClauseFailure{"root-gap", {t1.root()}};
  for (int v = 1; v < t1.size(); ++v) {
    int p = t1.parent(v);
    int hu = h[static_cast<std::size_t>(p)], hv = h[static_cast<std::size_t>(v)];
    if (!t2.is_ancestor(hu, hv) || hu == hv) return ClauseFailure{"edge-image", {p, v}};
    if (gap(t2, s2, hu, hv) < s1.at(v)) return ClauseFailure{"edge-gap", {p, v}};
  }
  if (labels1 && labels2) {
    for (int v = 0; v < t1.size(); ++v) {
      const std::string& a = (*labels1)[static_cast<std::size_t>(v)];
      const std::string& b = (*labels2)[static_cast<std::size_t>(h[static_cast<std::size_t>(v)])];
      bool ok = ord ? ord->leq(a, b) : a == b;
      if (!ok) return ClauseFailure{"node-label", {v}};
    }
  }
  return std::nullopt;
}

namespace {

// Closest proper k-ancestor (by split value) of every node, for k = 1..height.
struct AncestorTable {
  std::vector<std::vector<int>> node;  // [k-1][v]; -1 when absent
  std::vector<std::vector<int>> prod;  // label product from that ancestor to v

  static AncestorTable build(const LabelledTree& t, const Split& s) {
    AncestorTable a;
    a.node.assign(static_cast<std::size_t>(s.height),
                  std::vector<int>(static_cast<std::size_t>(t.size()), -1));
    a.prod.assign(static_cast<std::size_t>(s.height),
                  std::vector<int>(static_cast<std::size_t>(t.size()), -1));
    for (int k = 1; k <= s.height; ++k)
      for (int v = 0; v < t.size(); ++v) {
        for (int u = t.parent(v); u >= 0; u = t.parent(u))
          if (s.at(u) == k) {
            a.node[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(v)] = u;
            a.prod[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(v)] = tlbl(t, u, v);
            break;
          }
      }
    return a;
  }

  int anc(int k, int v) const { return node[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(v)]; }
  int product(int k, int v) const { return prod[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(v)]; }
};

std::optional<ClauseFailure> check_marked_clauses(const MarkedNestedTree& m1,
                                                  const MarkedNestedTree& m2,
                                                  const std::vector<int>& h,
                                                  const AncestorTable& a1,
                                                  const AncestorTable& a2) {
  const LabelledTree& t1 = m1.tree;
  const LabelledTree& t2 = m2.tree;
  if (h[0] != t2.root()) return ClauseFailure{"root-to-root", {0}};
  for (int v = 0; v < t1.size(); ++v) {
    int u = h[static_cast<std::size_t>(v)];
    if (t1.is_leaf(v) != t2.is_leaf(u)) return ClauseFailure{"leaf-to-leaf", {v}};
    if (m1.mark(v) != m2.mark(u)) return ClauseFailure{"marking", {v}};
    if (!t1.is_leaf(v) &&
        (t1.edge_label(t1.left(v)) != t2.edge_label(t2.left(u)) ||
         t1.edge_label(t1.right(v)) != t2.edge_label(t2.right(u))))
      return ClauseFailure{"local-product", {v}};
    int kmax = std::max(m1.split.height, m2.split.height);
    for (int k = 1; k <= kmax; ++k) {
      int n1 = k <= m1.split.height ? a1.anc(k, v) : -1;
      int n2 = k <= m2.split.height ? a2.anc(k, u) : -1;
      if ((n1 < 0) != (n2 < 0)) return ClauseFailure{"k-ancestor-exists", {v, k}};
      if (n1 >= 0 && a1.product(k, v) != a2.product(k, u))
        return ClauseFailure{"k-ancestor-product", {v, k}};
    }
  }
  for (int v = 1; v < t1.size(); ++v) {
    if (m1.mark(v) == Marking::D) continue;
    int u = h[static_cast<std::size_t>(v)];
    if (t2.parent(u) != h[static_cast<std::size_t>(t1.parent(v))])
      return ClauseFailure{"gluing", {v}};
  }
  return std::nullopt;
}

}  // namespace

std::optional<ClauseFailure> check_marked_gap(const MarkedNestedTree& m1,
                                              const MarkedNestedTree& m2,
                                              const std::vector<int>& h) {
  if (auto bad = check_gap(m1.tree, m1.split, m2.tree, m2.split, h)) return bad;
  AncestorTable a1 = AncestorTable::build(m1.tree, m1.split);
  AncestorTable a2 = AncestorTable::build(m2.tree, m2.split);
  return check_marked_clauses(m1, m2, h, a1, a2);
}

namespace {

struct GapSearch {
  const LabelledTree& t1;
  const Split& s1;
  const LabelledTree& t2;
  const Split& s2;
  Deadline deadline;
  std::vector<std::vector<int>> candidates;
  std::vector<int> assign;
  std::vector<bool> used;
  long steps = 0;
  bool timed_out = false;

  bool pairwise_ok(int v, int u) const {
    for (int w = 0; w < v; ++w) {
      int x = assign[static_cast<std::size_t>(w)];
      if (x >= u) return false;  // ids increase along the map
      if (assign[static_cast<std::size_t>(lca(t1, w, v))] != lca(t2, x, u)) return false;
    }
    if (v == 0) {
      if (gap_or_top(t2, s2, t2.root(), u) < s1.at(t1.root())) return false;
    } else {
      int hp = assign[static_cast<std::size_t>(t1.parent(v))];
      if (!t2.is_ancestor(hp, u) || hp == u) return false;
      if (gap(t2, s2, hp, u) < s1.at(v)) return false;
    }
    return true;
  }

  bool extra_ok(int v, int u) const { return extra ? extra(v, u) : true; }
  std::function<bool(int, int)> extra = nullptr;  // marked clauses hooked in per search

  bool run(int v) {
    if (v == t1.size()) return true;
    if (++steps % 512 == 0 && deadline.expired()) {
      timed_out = true;
      return false;
    }
    for (int u : candidates[static_cast<std::size_t>(v)]) {
      if (used[static_cast<std::size_t>(u)] || !pairwise_ok(v, u) || !extra_ok(v, u)) continue;
      assign[static_cast<std::size_t>(v)] = u;
      used[static_cast<std::size_t>(u)] = true;
      if (run(v + 1)) return true;
      used[static_cast<std::size_t>(u)] = false;
      assign[static_cast<std::size_t>(v)] = -1;
      if (timed_out) return false;
    }
    return false;
  }
};

}  // namespace

GapSearchResult search_marked_gap(const MarkedNestedTree& m1, const MarkedNestedTree& m2,
                                  Deadline deadline) {
  GapSearchResult r;
  const LabelledTree& t1 = m1.tree;
  const LabelledTree& t2 = m2.tree;
  AncestorTable a1 = AncestorTable::build(t1, m1.split);
  AncestorTable a2 = AncestorTable::build(t2, m2.split);
  GapSearch s{t1, m1.split, t2, m2.split, deadline, {}, {}, {}};
  s.candidates.resize(static_cast<std::size_t>(t1.size()));
  int kmax = std::max(m1.split.height, m2.split.height);
  for (int v = 0; v < t1.size(); ++v) {
    for (int u = 0; u < t2.size(); ++u) {
      if ((v == 0) != (u == 0)) continue;
      if (m1.mark(v) != m2.mark(u)) continue;
      if (t1.is_leaf(v) != t2.is_leaf(u)) continue;
      if (!t1.is_leaf(v) && (t1.edge_label(t1.left(v)) != t2.edge_label(t2.left(u)) ||
                             t1.edge_label(t1.right(v)) != t2.edge_label(t2.right(u))))
        continue;
      bool anc_ok = true;
      for (int k = 1; k <= kmax && anc_ok; ++k) {
        int n1 = k <= m1.split.height ? a1.anc(k, v) : -1;
        int n2 = k <= m2.split.height ? a2.anc(k, u) : -1;
        if ((n1 < 0) != (n2 < 0)) anc_ok = false;
        else if (n1 >= 0 && a1.product(k, v) != a2.product(k, u)) anc_ok = false;
      }
      if (!anc_ok) continue;
      s.candidates[static_cast<std::size_t>(v)].push_back(u);
    }
    if (s.candidates[static_cast<std::size_t>(v)].empty()) {
      r.status = SearchStatus::absent;
      return r;
    }
  }
  s.assign.assign(static_cast<std::size_t>(t1.size()), -1);
  s.used.assign(static_cast<std::size_t>(t2.size()), false);
  s.extra = [&](int v, int u) {
    if (v == 0) return true;
    if (m1.mark(v) == Marking::D) return true;
    return t2.parent(u) == s.assign[static_cast<std::size_t>(t1.parent(v))];
  };
  if (s.run(0)) {
    r.status = SearchStatus::found;
    r.map = s.assign;
  } else {
    r.status = s.timed_out ? SearchStatus::deadline : SearchStatus::absent;
  }
  return r;
}

GapSearchResult search_gap(const LabelledTree& t1, const Split& s1,
                           const std::vector<std::string>& labels1, const LabelledTree& t2,
                           const Split& s2, const std::vector<std::string>& labels2,
                           Deadline deadline) {
  GapSearchResult r;
  GapSearch s{t1, s1, t2, s2, deadline, {}, {}, {}};
  s.candidates.resize(static_cast<std::size_t>(t1.size()));
  for (int v = 0; v < t1.size(); ++v) {
    for (int u = 0; u < t2.size(); ++u)
      if (labels1[static_cast<std::size_t>(v)] == labels2[static_cast<std::size_t>(u)])
        s.candidates[static_cast<std::size_t>(v)].push_back(u);
    if (s.candidates[static_cast<std::size_t>(v)].empty()) {
      r.status = SearchStatus::absent;
      return r;
    }
  }
  s.assign.assign(static_cast<std::size_t>(t1.size()), -1);
  s.used.assign(static_cast<std::size_t>(t2.size()), false);
  if (s.run(0)) {
    r.status = SearchStatus::found;
    r.map = s.assign;
  } else {
    r.status = s.timed_out ? SearchStatus::deadline : SearchStatus::absent;
  }
  return r;
}

std::optional<ClauseFailure> check_gap_consequence(const MarkedNestedTree& m1,
                                                   const MarkedNestedTree& m2,
                                                   const std::vector<int>& h) {
  const LabelledTree& t1 = m1.tree;
  const LabelledTree& t2 = m2.tree;
  std::vector<int> ms = marked_nodes(m1, Marking::M);
  for (int u : ms)
    for (int v : ms) {
      if (u == v || !t1.is_ancestor(u, v)) continue;
      int k = m1.split.at(v);
      if (gap(t1, m1.split, u, v) <= k) continue;
      int hu = h[static_cast<std::size_t>(u)], hv = h[static_cast<std::size_t>(v)];
      if (!t2.is_ancestor(hu, hv) || hu == hv) return ClauseFailure{"gap-consequence-shape", {u, v}};
      if (gap(t2, m2.split, hu, hv) < k) return ClauseFailure{"gap-consequence", {u, v}};
    }
  return std::nullopt;
}

std::optional<ClauseFailure> check_interp_consequence(const MonoidInterpretation& i,
                                                      const MarkedNestedTree& m1,
                                                      const MarkedNestedTree& m2,
                                                      const std::vector<int>& h) {
  const LabelledTree& t1 = m1.tree;
  const LabelledTree& t2 = m2.tree;
  std::vector<int> ms = marked_nodes(m1, Marking::M);
  for (int x : ms)
    for (int y : ms) {
      if (!t1.is_ancestor(x, y)) continue;
      int hx = h[static_cast<std::size_t>(x)], hy = h[static_cast<std::size_t>(y)];
      if (!t2.is_ancestor(hx, hy)) return ClauseFailure{"marked-product-shape", {x, y}};
      if (tlbl(t1, x, y) != tlbl(t2, hx, hy)) return ClauseFailure{"marked-product", {x, y}};
    }
  std::vector<int> mleaves1, mleaves2;
  for (int v : leaves_in_order(t1))
    if (m1.mark(v) == Marking::M) mleaves1.push_back(v);
  for (int v : leaves_in_order(t2))
    if (m2.mark(v) == Marking::M) mleaves2.push_back(v);
  std::vector<int> vmap;
  for (int v : mleaves1) {
    int image = h[static_cast<std::size_t>(v)];
    auto it = std::find(mleaves2.begin(), mleaves2.end(), image);
    if (it == mleaves2.end()) return ClauseFailure{"interp-vertex", {v}};
    vmap.push_back(static_cast<int>(it - mleaves2.begin()));
  }
  LabelledGraph g1 = interpret_marked(i, m1);
  LabelledGraph g2 = interpret_marked(i, m2);
  if (auto err = verify_embedding(g1, g2, vmap, nullptr, true))
    return ClauseFailure{"interp-embedding", {}};
  return std::nullopt;
}

EncodedTree encode_dershowitz(const MarkedNestedTree& m, int L) {
  int chain = longest_non_dummy_chain(m);
  if (chain > L)
    throw std::invalid_argument("encode: tree is not L-bounded (longest chain " +
                                std::to_string(chain) + ")");
  const LabelledTree& t = m.tree;
  const Split& s = m.split;
  AncestorTable a = AncestorTable::build(t, s);
  EncodedTree e;
  e.tree = t;
  e.split.height = s.height + 1 + L;
  e.split.value.resize(static_cast<std::size_t>(t.size()));
  std::vector<int> chain_index(static_cast<std::size_t>(t.size()), 0);
  for (int v = 0; v < t.size(); ++v) {
    if (m.mark(v) == Marking::D) {
      e.split.value[static_cast<std::size_t>(v)] = s.at(v);
    } else {
      int p = t.parent(v);
      chain_index[static_cast<std::size_t>(v)] =
          (p >= 0 && m.mark(p) != Marking::D) ? chain_index[static_cast<std::size_t>(p)] + 1 : 1;
      e.split.value[static_cast<std::size_t>(v)] = s.height + 1 + chain_index[static_cast<std::size_t>(v)];
    }
  }
  e.node_labels.resize(static_cast<std::size_t>(t.size()));
  for (int v = 0; v < t.size(); ++v) {
    std::string lbl;
    lbl += marking_char(m.mark(v));
    lbl += v == t.root() ? "|R" : "|-";
    lbl += t.is_leaf(v) ? "|L" : "|-";
    lbl += "|l:";
    lbl += t.is_leaf(v) ? "-" : std::to_string(t.edge_label(t.left(v)));
    lbl += "|r:";
    lbl += t.is_leaf(v) ? "-" : std::to_string(t.edge_label(t.right(v)));
    for (int k = 1; k <= s.height; ++k) {
      lbl += "|a" + std::to_string(k) + ":";
      int u = a.anc(k, v);
      lbl += u < 0 ? "-" : std::to_string(a.product(k, v));
    }
    e.node_labels[static_cast<std::size_t>(v)] = lbl;
  }
  return e;
}

}  // namespace treewqo
