#include "treewqo/transduce.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

namespace treewqo {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

void require_injective_labels(const RegularSequence& s) {
  std::set<std::string> seen;
  for (int v = 0; v < s.base.n; ++v)
    if (!seen.insert(s.base.label_name(v)).second)
      fail("arrow: base labels must be pairwise distinct");
}

constexpr int unreached = std::numeric_limits<int>::max();

// Directed BFS over arcs; returns distances from src.
std::vector<int> arc_distances(const DirectedGraph& g, int src, Deadline deadline) {
  std::vector<int> dist(static_cast<std::size_t>(g.n), unreached);
  std::deque<int> queue;
  dist[static_cast<std::size_t>(src)] = 0;
  queue.push_back(src);
  int steps = 0;
  while (!queue.empty()) {
    if (++steps % 512 == 0 && deadline.expired()) fail("arrow: deadline during distance sweep");
    int u = queue.front();
    queue.pop_front();
    for (int v = 0; v < g.n; ++v)
      if (g.has(u, v) && dist[static_cast<std::size_t>(v)] == unreached) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

}  // namespace

DirectedGraph phi_arrow(const RegularSequence& s, int r) {
  require_injective_labels(s);
  LabelledGraph g = expand_regular(s, r);
  int n = s.base.n;
  DirectedGraph phi = DirectedGraph::empty(g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v) {
      if (u == v) continue;
      bool in_far = s.far.count({s.base.label_name(u % n), s.base.label_name(v % n)}) > 0;
      phi.arc[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = g.edge(u, v) != in_far;
    }
  return phi;
}

ArrowClaims check_arrow_claims(const RegularSequence& s, int r) {
  DirectedGraph phi = phi_arrow(s, r);
  int n = s.base.n;
  ArrowClaims c;
  for (int u = 0; u < phi.n && c.forward_bounded; ++u)
    for (int v = 0; v < phi.n; ++v)
      if (phi.has(u, v) && v / n > u / n + 1) {
        c.forward_bounded = false;
        c.forward_witness = {u, v};
        break;
      }
  for (int u = 0; u < phi.n; ++u) {
    int cu = u / n;
    if (cu < 2) continue;
    for (int b = 0; b < n; ++b) {
      bool first = phi.has(u, b);  // copy 0
      for (int j = 1; j <= cu - 2; ++j)
        if (phi.has(u, j * n + b) != first) {
          if (c.far_backward_regular) {
            c.far_backward_regular = false;
            c.far_witness = {u, first ? b : j * n + b, first ? j * n + b : b};
          }
          break;
        }
      if (first) {
        if (!phi.has(u, (cu - 1) * n + b)) c.extends_prev = false;
        if (cu * n + b != u && !phi.has(u, cu * n + b)) c.extends_same = false;
      }
    }
  }
  return c;
}

CrossingPath find_crossing_path(const RegularSequence& s, int r, Deadline deadline) {
  DirectedGraph phi = phi_arrow(s, r);
  int n = s.base.n;
  std::vector<int> dist(static_cast<std::size_t>(phi.n), unreached);
  std::vector<int> parent(static_cast<std::size_t>(phi.n), -1);
  std::deque<int> queue;
  for (int v = 0; v < n; ++v) {
    dist[static_cast<std::size_t>(v)] = 0;
    queue.push_back(v);
  }
  int steps = 0;
  while (!queue.empty()) {
    if (++steps % 512 == 0 && deadline.expired()) return {SearchStatus::deadline, {}};
    int u = queue.front();
    queue.pop_front();
    for (int v = 0; v < phi.n; ++v)
      if (phi.has(u, v) && dist[static_cast<std::size_t>(v)] == unreached) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        parent[static_cast<std::size_t>(v)] = u;
        queue.push_back(v);
      }
  }
  int best = -1;
  for (int v = (r - 1) * n; v < r * n; ++v)
    if (dist[static_cast<std::size_t>(v)] != unreached &&
        (best < 0 || dist[static_cast<std::size_t>(v)] < dist[static_cast<std::size_t>(best)]))
      best = v;
  if (best < 0) return {SearchStatus::absent, {}};
  CrossingPath out;
  out.status = SearchStatus::found;
  for (int v = best; v >= 0; v = parent[static_cast<std::size_t>(v)]) out.vertices.push_back(v);
  std::reverse(out.vertices.begin(), out.vertices.end());
  return out;
}

PeriodData extract_period(const RegularSequence& s, const std::vector<int>& path) {
  int n = s.base.n;
  int bestp = -1, bestq = -1;
  for (std::size_t p = 0; p < path.size(); ++p)
    for (std::size_t q = p + 1; q < path.size(); ++q) {
      if (path[p] % n != path[q] % n) continue;
      if (path[q] / n <= path[p] / n) continue;
      if (bestp >= 0 && static_cast<int>(q - p) >= bestq - bestp) continue;
      bestp = static_cast<int>(p);
      bestq = static_cast<int>(q);
    }
  if (bestp < 0) fail("extract_period: no base vertex repeats while advancing copies");
  PeriodData d;
  d.base_vertex = path[static_cast<std::size_t>(bestp)] % n;
  d.copy_step = path[static_cast<std::size_t>(bestq)] / n - path[static_cast<std::size_t>(bestp)] / n;
  d.path_step = bestq - bestp;
  for (int i = bestp; i < bestq; ++i) d.q_bases.push_back(path[static_cast<std::size_t>(i)] % n);
  return d;
}

PeriodicSequence derive_periodic(const RegularSequence& s, const std::vector<int>& q_bases) {
  if (q_bases.empty()) fail("derive_periodic: empty period");
  PeriodicSequence p;
  std::set<std::string> letters;
  for (int b : q_bases) {
    if (b < 0 || b >= s.base.n) fail("derive_periodic: base vertex out of range");
    p.word.push_back(s.base.label_name(b));
    letters.insert(s.base.label_name(b));
  }
  for (const auto& a : letters)
    for (const auto& b : letters) {
      if (s.far.count({a, b}) > 0)
        p.far.insert({a, b});
      else
        p.close.insert({a, b});
    }
  return p;
}

namespace {

LabelledGraph graph_from_arcs(const DirectedGraph& phi, const std::vector<int>& kept) {
  LabelledGraph g = LabelledGraph::empty(static_cast<int>(kept.size()));
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = i + 1; j < kept.size(); ++j)
      if (phi.has(kept[i], kept[j]) || phi.has(kept[j], kept[i]))
        g.set_edge(static_cast<int>(i), static_cast<int>(j), true);
  return g;
}

}  // namespace

TransduceOutcome transduce_paths(const RegularSequence& s, int target, Deadline deadline) {
  if (target < 1) fail("transduce: target size must be positive");
  TransduceOutcome out;
  DirectedGraph phi = phi_arrow(s, target);
  CrossingPath cp = find_crossing_path(s, target, deadline);
  if (cp.status != SearchStatus::found) {
    out.status = cp.status;
    return out;
  }
  bool easy = true;
  for (std::size_t i = 0; easy && i < cp.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < cp.vertices.size(); ++j) {
      bool sym = phi.has(cp.vertices[i], cp.vertices[j]) || phi.has(cp.vertices[j], cp.vertices[i]);
      if (sym != (j == i + 1)) {
        easy = false;
        break;
      }
    }
  if (easy) {
    if (cp.vertices.size() < static_cast<std::size_t>(target))
      fail("transduce: crossing path shorter than its copy count");
    out.kept.assign(cp.vertices.begin(), cp.vertices.begin() + target);
    out.result = graph_from_arcs(phi, out.kept);
    if (!isomorphic(out.result, LabelledGraph::path(target), deadline))
      fail("transduce: easy selection is not the target path");
    out.status = SearchStatus::found;
    out.easy = true;
    out.r_used = target;
    return out;
  }

  std::vector<int> probe = cp.vertices;
  if (target <= s.base.n) {
    CrossingPath wide = find_crossing_path(s, s.base.n + 2, deadline);
    if (wide.status != SearchStatus::found) {
      out.status = wide.status;
      return out;
    }
    probe = wide.vertices;
  }
  PeriodData pd = extract_period(s, probe);
  int n = s.base.n;
  int r_big = 2 * pd.copy_step * target + 1;
  for (int attempt = 0; attempt < 2; ++attempt) {
    DirectedGraph phi_big = phi_arrow(s, r_big);
    CrossingPath big = find_crossing_path(s, r_big, deadline);
    if (big.status != SearchStatus::found) {
      out.status = big.status;
      return out;
    }
    int c0 = -1;
    for (int v : big.vertices)
      if (v % n == pd.base_vertex) {
        c0 = v / n;
        break;
      }
    if (c0 < 0) fail("transduce: repeated base vertex missing from the wide crossing path");
    int top = c0 + 2 * pd.copy_step * (target - 1);
    if (top >= r_big) {
      r_big = top + 2 * pd.copy_step + 1;
      continue;
    }
    std::vector<int> kept;
    for (int m = 0; m < target; ++m) kept.push_back((c0 + 2 * pd.copy_step * m) * n + pd.base_vertex);
    LabelledGraph result = LabelledGraph::empty(target);
    std::vector<std::vector<int>> dist;
    for (int k : kept) dist.push_back(arc_distances(phi_big, k, deadline));
    for (int a = 0; a < target; ++a)
      for (int b = a + 1; b < target; ++b) {
        int fwd = dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(kept[static_cast<std::size_t>(b)])];
        int bwd = dist[static_cast<std::size_t>(b)][static_cast<std::size_t>(kept[static_cast<std::size_t>(a)])];
        if (fwd <= 2 * pd.path_step && bwd <= 2 * pd.path_step) result.set_edge(a, b, true);
      }
    if (!isomorphic(result, LabelledGraph::path(target), deadline))
      fail("transduce: produced graph is not the target path");
    out.status = SearchStatus::found;
    out.easy = false;
    out.r_used = r_big;
    out.kept = std::move(kept);
    out.result = std::move(result);
    return out;
  }
  fail("transduce: could not place the kept copies inside the expansion");
}

}  // namespace treewqo
