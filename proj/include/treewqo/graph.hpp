#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treewqo/common.hpp"

namespace treewqo {

// Partial order on label names.  `le[i][j]` says labels[i] <= labels[j]; the
// diagonal is implied.  validate() checks reflexivity and transitivity.
struct LabelOrder {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> le;

  void validate() const;
  std::optional<int> index_of(const std::string& name) const;
  bool leq(const std::string& a, const std::string& b) const;

  // Discrete order: every label only comparable to itself.
  static LabelOrder equality(std::vector<std::string> names);
};

// Finite simple graph with named vertex labels and an optional total vertex
// order (a permutation: vorder[v] = position of v).
struct LabelledGraph {
  int n = 0;
  std::vector<std::string> labels;           // label name table
  std::vector<int> vlabel;                   // per-vertex index into labels
  std::vector<std::vector<bool>> adj;        // symmetric, irreflexive
  std::optional<std::vector<int>> vorder;

  void validate() const;
  bool edge(int u, int v) const { return adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; }
  void set_edge(int u, int v, bool present);
  const std::string& label_name(int v) const { return labels[static_cast<std::size_t>(vlabel[static_cast<std::size_t>(v)])]; }
  int position(int v) const { return vorder ? (*vorder)[static_cast<std::size_t>(v)] : v; }
  int edge_count() const;

  static LabelledGraph empty(int n, std::string single_label = "_");
  static LabelledGraph path(int n, std::string single_label = "_");
  static LabelledGraph clique(int n, std::string single_label = "_");
};

struct DirectedGraph {
  int n = 0;
  std::vector<std::vector<bool>> arc;  // arc[u][v]: u -> v
  bool has(int u, int v) const { return arc[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; }
  int arc_count() const;
  static DirectedGraph empty(int n);
};

struct EmbedResult {
  SearchStatus status = SearchStatus::absent;
  std::vector<int> map;  // image of each small vertex, when found
};

// Searches for an induced-subgraph embedding of `small` into `big`: an
// injection preserving edges and non-edges, with label(small v) <= label of
// the image under `ord` (label-name equality when ord is null).  When
// respect_vertex_order is set, images must be increasing in vertex position.
// Candidate images are tried in ascending index; branching picks the
// unassigned source vertex with the fewest remaining candidates.
EmbedResult embed(const LabelledGraph& small, const LabelledGraph& big,
                  const LabelOrder* ord = nullptr, bool respect_vertex_order = false,
                  Deadline deadline = Deadline::never());

// Re-checks an explicit map against the same conditions embed() searches for.
// Returns the first violated condition as text, or nullopt when the map is a
// valid embedding.
std::optional<std::string> verify_embedding(const LabelledGraph& small, const LabelledGraph& big,
                                            const std::vector<int>& map,
                                            const LabelOrder* ord = nullptr,
                                            bool respect_vertex_order = false);

struct AntichainResult {
  SearchStatus status = SearchStatus::absent;  // found = some pair embeds
  int from = -1, to = -1;                      // indices of the comparable pair
  std::vector<int> map;
};

// Checks pairwise non-embeddability in both directions.  `status == absent`
// means the family is an antichain; `found` reports the least comparable pair
// in lexicographic (from, to) order.
AntichainResult is_antichain(const std::vector<LabelledGraph>& family,
                             const LabelOrder* ord = nullptr, bool respect_vertex_order = false,
                             Deadline deadline = Deadline::never());

// Label-preserving isomorphism test (exact label-name equality).
bool isomorphic(const LabelledGraph& a, const LabelledGraph& b,
                Deadline deadline = Deadline::never());

}  // namespace treewqo
