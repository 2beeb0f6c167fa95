#include "treewqo/split.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace treewqo {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

void Split::validate(const LabelledTree& t) const {
  if (height < 1) fail("split: height must be at least 1");
  if (value.size() != static_cast<std::size_t>(t.size())) fail("split: value count mismatch");
  for (int v : value)
    if (v < 1 || v > height) fail("split: node value out of range");
}

int gap(const LabelledTree& t, const Split& s, int x, int y) {
  if (x == y || !t.is_ancestor(x, y)) fail("gap: first node must be a strict ancestor");
  int m = s.height + 1;
  for (int v = t.parent(y); v != x; v = t.parent(v)) m = std::min(m, s.at(v));
  return m;
}

int gap_or_top(const LabelledTree& t, const Split& s, int x, int y) {
  return x == y ? s.height + 1 : gap(t, s, x, y);
}

std::vector<std::vector<int>> k_classes(const LabelledTree& t, const Split& s, int leaf, int k) {
  std::vector<int> branch;
  for (int v = leaf; v >= 0; v = t.parent(v)) branch.push_back(v);
  std::reverse(branch.begin(), branch.end());
  std::vector<std::vector<int>> classes;
  bool broken = true;  // value below k seen since the last k-valued node
  for (int v : branch) {
    if (s.at(v) == k) {
      if (broken || classes.empty()) classes.emplace_back();
      classes.back().push_back(v);
      broken = false;
    } else if (s.at(v) < k) {
      broken = true;
    }
  }
  return classes;
}

std::optional<RamseyanViolation> validate_ramseyan_branch(const LabelledTree& t, const Split& s,
                                                          int leaf) {
  for (int k = 1; k <= s.height; ++k) {
    for (const auto& cls : k_classes(t, s, leaf, k)) {
      if (cls.size() < 2) continue;
      // Distinct products with a representative strict pair each; the
      // absorption law only depends on the product values.
      std::vector<int> step(cls.size(), 0);
      for (std::size_t j = 1; j < cls.size(); ++j) step[j] = tlbl(t, cls[j - 1], cls[j]);
      std::map<int, std::pair<int, int>> prods;
      for (std::size_t i = 0; i < cls.size(); ++i) {
        int acc = t.monoid.identity;
        for (std::size_t j = i + 1; j < cls.size(); ++j) {
          acc = t.monoid.mul(acc, step[j]);
          prods.emplace(acc, std::make_pair(cls[i], cls[j]));
        }
      }
      for (const auto& [p, rep] : prods)
        for (const auto& [q, rep2] : prods)
          if (t.monoid.mul(p, q) != p) {
            RamseyanViolation viol;
            viol.leaf = leaf;
            viol.k = k;
            viol.x = rep.first;
            viol.y = rep.second;
            viol.xp = rep2.first;
            viol.yp = rep2.second;
            return viol;
          }
    }
  }
  return std::nullopt;
}

std::optional<RamseyanViolation> validate_ramseyan(const LabelledTree& t, const Split& s) {
  for (int leaf = 0; leaf < t.size(); ++leaf) {
    if (!t.is_leaf(leaf)) continue;
    if (auto viol = validate_ramseyan_branch(t, s, leaf)) return viol;
  }
  return std::nullopt;
}

std::optional<IndependenceWitness> independent_at(const LabelledTree& t, const Split& s, int x,
                                                  int y, int k) {
  if (x == y || !t.is_ancestor(x, y)) return std::nullopt;
  if (gap(t, s, x, y) != k) return std::nullopt;
  std::vector<int> ks;
  for (int v = t.parent(y); v != x; v = t.parent(v))
    if (s.at(v) == k) ks.push_back(v);
  std::reverse(ks.begin(), ks.end());  // ancestor order
  if (ks.size() < 2) return std::nullopt;
  IndependenceWitness w;
  w.z1 = ks.front();
  w.z2 = ks[1];
  w.z3 = ks.back();
  return w;
}

int fast_tlbl(const LabelledTree& t, const Split& s, int x, int y) {
  if (x == y) return t.monoid.identity;
  if (!t.is_ancestor(x, y)) fail("fast_tlbl: first node must be an ancestor");
  if (t.parent(y) == x) return t.edge_label(y);
  int k = gap(t, s, x, y);
  if (k == s.height + 1) return t.edge_label(y);  // unreachable for non-child y
  // k-valued nodes strictly between, located by split values alone.
  int z1 = -1, z2 = -1, z3 = -1;
  int count = 0;
  for (int v = t.parent(y); v != x; v = t.parent(v)) {
    if (s.at(v) != k) continue;
    ++count;
    if (z3 < 0) z3 = v;  // last in ancestor order (first seen from below)
    z2 = z1;             // shifts toward the second-from-top as we ascend
    z1 = v;
  }
  if (count >= 2)
    return t.monoid.mul(t.monoid.mul(fast_tlbl(t, s, x, z1), fast_tlbl(t, s, z1, z2)),
                        fast_tlbl(t, s, z3, y));
  return t.monoid.mul(fast_tlbl(t, s, x, z1), fast_tlbl(t, s, z1, y));
}

namespace {

Split constant_split(const LabelledTree& t) {
  Split s;
  s.height = 1;
  s.value.assign(static_cast<std::size_t>(t.size()), 1);
  return s;
}

Split depth_split(const LabelledTree& t) {
  Split s;
  s.height = t.height() + 1;
  s.value.resize(static_cast<std::size_t>(t.size()));
  for (int v = 0; v < t.size(); ++v) s.value[static_cast<std::size_t>(v)] = t.depth(v) + 1;
  return s;
}

// Values by first appearance of the root-to-node label product.
Split prefix_split(const LabelledTree& t) {
  Split s;
  s.value.resize(static_cast<std::size_t>(t.size()));
  std::vector<int> rank(static_cast<std::size_t>(t.monoid.size), 0);
  std::vector<int> pref(static_cast<std::size_t>(t.size()));
  int next = 0;
  for (int v = 0; v < t.size(); ++v) {
    pref[static_cast<std::size_t>(v)] =
        v == 0 ? t.monoid.identity
               : t.monoid.mul(pref[static_cast<std::size_t>(t.parent(v))], t.edge_label(v));
    int& r = rank[static_cast<std::size_t>(pref[static_cast<std::size_t>(v)])];
    if (r == 0) r = ++next;
    s.value[static_cast<std::size_t>(v)] = r;
  }
  s.height = next;
  return s;
}

// Linear tree: internal nodes form one root-down path.  Returns that path.
std::optional<std::vector<int>> spine_of_linear(const LabelledTree& t) {
  std::vector<int> spine;
  int v = t.root();
  while (!t.is_leaf(v)) {
    spine.push_back(v);
    int l = t.left(v), r = t.right(v);
    if (!t.is_leaf(l) && !t.is_leaf(r)) return std::nullopt;
    v = t.is_leaf(l) ? r : l;
  }
  spine.push_back(v);
  return spine;
}

// Recursive factorization of a word: prefer a decomposition into three or
// more blocks sharing one idempotent product, otherwise halve.  Returns the
// nesting depth of each interior boundary (1 = outermost).  Heuristic; the
// Ramseyan validator gates acceptance of the derived split.
void factor_word(const FiniteMonoid& m, const std::vector<int>& w, int lo, int hi, int depth,
                 std::vector<int>& boundary_depth) {
  int len = hi - lo + 1;
  if (len <= 1) return;
  if (len == 2) {
    boundary_depth[static_cast<std::size_t>(lo)] = depth;
    return;
  }
  for (int e = 0; e < m.size; ++e) {
    if (!m.is_idempotent(e) || e == m.identity) continue;
    std::vector<int> cuts;
    int acc = m.identity;
    for (int i = lo; i <= hi; ++i) {
      acc = m.mul(acc, w[static_cast<std::size_t>(i)]);
      if (acc == e && i < hi) {
        cuts.push_back(i);
        acc = m.identity;
      }
    }
    if (cuts.size() >= 2 && acc == e) {
      int prev = lo;
      for (int c : cuts) {
        boundary_depth[static_cast<std::size_t>(c)] = depth;
        factor_word(m, w, prev, c, depth + 1, boundary_depth);
        prev = c + 1;
      }
      factor_word(m, w, prev, hi, depth + 1, boundary_depth);
      return;
    }
  }
  int mid = lo + (len - 1) / 2;
  boundary_depth[static_cast<std::size_t>(mid)] = depth;
  factor_word(m, w, lo, mid, depth + 1, boundary_depth);
  factor_word(m, w, mid + 1, hi, depth + 1, boundary_depth);
}

std::optional<Split> linear_seed(const LabelledTree& t, int budget) {
  auto spine = spine_of_linear(t);
  if (!spine || spine->size() < 3) return std::nullopt;
  // Word letters are the spine edge labels; boundary i sits at spine node i.
  std::vector<int> w;
  for (std::size_t i = 1; i < spine->size(); ++i)
    w.push_back(t.edge_label((*spine)[i]));
  std::vector<int> bd(w.size(), 0);  // depth of boundary after letter i (interior only)
  factor_word(t.monoid, w, 0, static_cast<int>(w.size()) - 1, 1, bd);
  int deepest = 1;
  for (std::size_t i = 0; i + 1 < bd.size(); ++i) deepest = std::max(deepest, bd[i]);
  int top = deepest + 1;  // endpoints and off-spine leaves, singleton classes
  if (top > budget) return std::nullopt;
  Split s;
  s.height = top;
  s.value.assign(static_cast<std::size_t>(t.size()), top);
  for (std::size_t i = 0; i + 1 < spine->size(); ++i) {
    int node = (*spine)[i];
    s.value[static_cast<std::size_t>(node)] = (i == 0) ? top : bd[i - 1];
  }
  return s;
}

struct SplitSearch {
  const LabelledTree& t;
  int height;
  Deadline deadline;
  Split s;
  long steps = 0;
  bool timed_out = false;

  // Incremental absorption check for the class the newly assigned node joins.
  bool admissible(int v) {
    int k = s.at(v);
    std::vector<int> members;  // ancestors of v in its class, nearest first
    int seen_min = s.height + 1;
    for (int u = t.parent(v); u >= 0; u = t.parent(u)) {
      if (s.at(u) == k && seen_min >= k) members.push_back(u);
      seen_min = std::min(seen_min, s.at(u));
      if (seen_min < k) break;
    }
    if (members.empty()) return true;
    std::vector<int> all = members;
    std::reverse(all.begin(), all.end());  // ancestor order
    all.push_back(v);
    std::vector<int> old_prods, new_prods;
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        int p = tlbl(t, all[i], all[j]);
        (all[j] == v ? new_prods : old_prods).push_back(p);
      }
    for (int p : new_prods) {
      for (int q : new_prods)
        if (t.monoid.mul(p, q) != p) return false;
      for (int q : old_prods)
        if (t.monoid.mul(p, q) != p || t.monoid.mul(q, p) != q) return false;
    }
    return true;
  }

  bool assign(int v) {
    if (v == t.size()) return true;
    if (++steps % 1024 == 0 && deadline.expired()) {
      timed_out = true;
      return false;
    }
    for (int val = 1; val <= height; ++val) {
      s.value[static_cast<std::size_t>(v)] = val;
      if (admissible(v) && assign(v + 1)) return true;
      if (timed_out) return false;
    }
    s.value[static_cast<std::size_t>(v)] = 0;
    return false;
  }
};

}  // namespace

ConstructOutcome construct_split(const LabelledTree& t, int budget, Deadline deadline) {
  if (budget < 1) fail("construct_split: budget must be at least 1");
  ConstructOutcome out;
  auto accept = [&](Split s) {
    s.validate(t);
    if (s.height <= budget && !validate_ramseyan(t, s)) {
      out.status = SearchStatus::found;
      out.split = std::move(s);
      return true;
    }
    return false;
  };
  if (accept(constant_split(t))) return out;
  if (accept(prefix_split(t))) return out;
  if (auto seed = linear_seed(t, budget); seed && accept(*seed)) return out;
  if (t.height() + 1 <= budget && accept(depth_split(t))) return out;
  for (int h = 2; h <= budget; ++h) {
    SplitSearch search{t, h, deadline, Split{}, 0, false};
    search.s.height = h;
    search.s.value.assign(static_cast<std::size_t>(t.size()), 0);
    if (search.assign(0)) {
      out.status = SearchStatus::found;
      out.split = std::move(search.s);
      return out;
    }
    if (search.timed_out) {
      out.status = SearchStatus::deadline;
      return out;
    }
  }
  out.status = SearchStatus::absent;
  return out;
}

int default_split_budget(const FiniteMonoid& m) { return 3 * m.size; }

}  // namespace treewqo
