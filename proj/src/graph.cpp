#include "treewqo/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace treewqo {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

void LabelOrder::validate() const {
  std::size_t n = labels.size();
  if (le.size() != n) fail("label order: relation size mismatch");
  for (const auto& row : le)
    if (row.size() != n) fail("label order: relation row size mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (labels[i] == labels[j]) fail("label order: duplicate label '" + labels[i] + "'");
  for (std::size_t i = 0; i < n; ++i)
    if (!le[i][i]) fail("label order: not reflexive at '" + labels[i] + "'");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (le[i][j] && le[j][k] && !le[i][k])
          fail("label order: not transitive via ('" + labels[i] + "','" + labels[j] + "','" +
               labels[k] + "')");
}

std::optional<int> LabelOrder::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

bool LabelOrder::leq(const std::string& a, const std::string& b) const {
  auto ia = index_of(a), ib = index_of(b);
  if (!ia || !ib) fail("label order: unknown label '" + (ia ? b : a) + "'");
  return le[static_cast<std::size_t>(*ia)][static_cast<std::size_t>(*ib)];
}

LabelOrder LabelOrder::equality(std::vector<std::string> names) {
  LabelOrder o;
  o.labels = std::move(names);
  o.le.assign(o.labels.size(), std::vector<bool>(o.labels.size(), false));
  for (std::size_t i = 0; i < o.labels.size(); ++i) o.le[i][i] = true;
  return o;
}

void LabelledGraph::validate() const {
  if (n < 0) fail("graph: negative vertex count");
  if (vlabel.size() != static_cast<std::size_t>(n)) fail("graph: vlabel size mismatch");
  for (int v = 0; v < n; ++v)
    if (vlabel[static_cast<std::size_t>(v)] < 0 ||
        vlabel[static_cast<std::size_t>(v)] >= static_cast<int>(labels.size()))
      fail("graph: vertex label index out of range");
  if (adj.size() != static_cast<std::size_t>(n)) fail("graph: adjacency size mismatch");
  for (int u = 0; u < n; ++u) {
    if (adj[static_cast<std::size_t>(u)].size() != static_cast<std::size_t>(n))
      fail("graph: adjacency row size mismatch");
    if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(u)]) fail("graph: self-loop");
    for (int v = 0; v < n; ++v)
      if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] !=
          adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)])
        fail("graph: adjacency not symmetric");
  }
  if (vorder) {
    if (vorder->size() != static_cast<std::size_t>(n)) fail("graph: vorder size mismatch");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int p : *vorder) {
      if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) fail("graph: vorder is not a permutation");
      seen[static_cast<std::size_t>(p)] = true;
    }
  }
}

void LabelledGraph::set_edge(int u, int v, bool present) {
  adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = present;
  adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = present;
}

int LabelledGraph::edge_count() const {
  int c = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(u, v)) ++c;
  return c;
}

LabelledGraph LabelledGraph::empty(int n, std::string single_label) {
  LabelledGraph g;
  g.n = n;
  g.labels = {std::move(single_label)};
  g.vlabel.assign(static_cast<std::size_t>(n), 0);
  g.adj.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  return g;
}

LabelledGraph LabelledGraph::path(int n, std::string single_label) {
  LabelledGraph g = empty(n, std::move(single_label));
  for (int v = 0; v + 1 < n; ++v) g.set_edge(v, v + 1, true);
  return g;
}

LabelledGraph LabelledGraph::clique(int n, std::string single_label) {
  LabelledGraph g = empty(n, std::move(single_label));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.set_edge(u, v, true);
  return g;
}

int DirectedGraph::arc_count() const {
  int c = 0;
  for (const auto& row : arc)
    for (bool b : row)
      if (b) ++c;
  return c;
}

DirectedGraph DirectedGraph::empty(int n) {
  DirectedGraph g;
  g.n = n;
  g.arc.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  return g;
}

namespace {

bool label_ok(const LabelledGraph& small, const LabelledGraph& big, const LabelOrder* ord,
              int v, int u) {
  if (ord) return ord->leq(small.label_name(v), big.label_name(u));
  return small.label_name(v) == big.label_name(u);
}

int degree(const LabelledGraph& g, int v) {
  int d = 0;
  for (int u = 0; u < g.n; ++u)
    if (g.edge(v, u)) ++d;
  return d;
}

struct EmbedSearch {
  const LabelledGraph& small;
  const LabelledGraph& big;
  bool respect_order;
  Deadline deadline;
  std::vector<std::vector<int>> candidates;  // per small vertex
  std::vector<int> assign;                   // -1 when unassigned
  std::vector<bool> used;
  long steps = 0;
  bool timed_out = false;

  bool consistent(int v, int u) const {
    for (int w = 0; w < small.n; ++w) {
      int x = assign[static_cast<std::size_t>(w)];
      if (x < 0 || w == v) continue;
      if (small.edge(v, w) != big.edge(u, x)) return false;
      if (respect_order &&
          (small.position(v) < small.position(w)) != (big.position(u) < big.position(x)))
        return false;
    }
    return true;
  }

  bool run() {
    if (++steps % 1024 == 0 && deadline.expired()) {
      timed_out = true;
      return false;
    }
    int best = -1;
    std::size_t best_count = 0;
    for (int v = 0; v < small.n; ++v) {
      if (assign[static_cast<std::size_t>(v)] >= 0) continue;
      std::size_t count = 0;
      for (int u : candidates[static_cast<std::size_t>(v)])
        if (!used[static_cast<std::size_t>(u)] && consistent(v, u)) ++count;
      if (best < 0 || count < best_count) {
        best = v;
        best_count = count;
      }
      if (count == 0) return false;
    }
    if (best < 0) return true;  // all assigned
    for (int u : candidates[static_cast<std::size_t>(best)]) {
      if (used[static_cast<std::size_t>(u)] || !consistent(best, u)) continue;
      assign[static_cast<std::size_t>(best)] = u;
      used[static_cast<std::size_t>(u)] = true;
      if (run()) return true;
      if (timed_out) return false;
      assign[static_cast<std::size_t>(best)] = -1;
      used[static_cast<std::size_t>(u)] = false;
    }
    return false;
  }
};

}  // namespace

EmbedResult embed(const LabelledGraph& small, const LabelledGraph& big, const LabelOrder* ord,
                  bool respect_vertex_order, Deadline deadline) {
  EmbedResult r;
  if (small.n > big.n) {
    r.status = SearchStatus::absent;
    return r;
  }
  EmbedSearch s{small, big, respect_vertex_order, deadline, {}, {}, {}};
  s.candidates.resize(static_cast<std::size_t>(small.n));
  std::vector<int> big_deg(static_cast<std::size_t>(big.n));
  for (int u = 0; u < big.n; ++u) big_deg[static_cast<std::size_t>(u)] = degree(big, u);
  for (int v = 0; v < small.n; ++v) {
    int dv = degree(small, v);
    for (int u = 0; u < big.n; ++u)
      if (big_deg[static_cast<std::size_t>(u)] >= dv && label_ok(small, big, ord, v, u))
        s.candidates[static_cast<std::size_t>(v)].push_back(u);
  }
  s.assign.assign(static_cast<std::size_t>(small.n), -1);
  s.used.assign(static_cast<std::size_t>(big.n), false);
  if (s.run()) {
    r.status = SearchStatus::found;
    r.map = s.assign;
  } else {
    r.status = s.timed_out ? SearchStatus::deadline : SearchStatus::absent;
  }
  return r;
}

std::optional<std::string> verify_embedding(const LabelledGraph& small, const LabelledGraph& big,
                                            const std::vector<int>& map, const LabelOrder* ord,
                                            bool respect_vertex_order) {
  if (map.size() != static_cast<std::size_t>(small.n)) return "map size differs from vertex count";
  for (int v = 0; v < small.n; ++v) {
    int u = map[static_cast<std::size_t>(v)];
    if (u < 0 || u >= big.n) return "image of vertex " + std::to_string(v) + " out of range";
    if (!label_ok(small, big, ord, v, u)) return "label violated at vertex " + std::to_string(v);
  }
  for (int v = 0; v < small.n; ++v)
    for (int w = v + 1; w < small.n; ++w) {
      int u = map[static_cast<std::size_t>(v)], x = map[static_cast<std::size_t>(w)];
      if (u == x) return "not injective on vertices " + std::to_string(v) + "," + std::to_string(w);
      if (small.edge(v, w) != big.edge(u, x))
        return "adjacency violated on pair " + std::to_string(v) + "," + std::to_string(w);
      if (respect_vertex_order &&
          (small.position(v) < small.position(w)) != (big.position(u) < big.position(x)))
        return "vertex order violated on pair " + std::to_string(v) + "," + std::to_string(w);
    }
  return std::nullopt;
}

AntichainResult is_antichain(const std::vector<LabelledGraph>& family, const LabelOrder* ord,
                             bool respect_vertex_order, Deadline deadline) {
  AntichainResult r;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i == j) continue;
      EmbedResult e = embed(family[i], family[j], ord, respect_vertex_order, deadline);
      if (e.status == SearchStatus::deadline) {
        r.status = SearchStatus::deadline;
        return r;
      }
      if (e.status == SearchStatus::found) {
        r.status = SearchStatus::found;
        r.from = static_cast<int>(i);
        r.to = static_cast<int>(j);
        r.map = e.map;
        return r;
      }
    }
  r.status = SearchStatus::absent;
  return r;
}

bool isomorphic(const LabelledGraph& a, const LabelledGraph& b, Deadline deadline) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  EmbedResult e = embed(a, b, nullptr, false, deadline);
  return e.status == SearchStatus::found;  // induced + same size = bijective
}

}  // namespace treewqo
