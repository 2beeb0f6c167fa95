#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treewqo/common.hpp"
#include "treewqo/interp.hpp"
#include "treewqo/marked_tree.hpp"

namespace treewqo {

struct ClauseFailure {
  std::string clause;      // short machine-readable tag
  std::vector<int> nodes;  // involved nodes of the source tree (or pattern)
};

// Well-marked: marked nodes contain the root and are closed under lca, and in
// every pattern x above z1 above y with both ends marked, spt(z1) = k,
// gap(x:z1) > k and gap(z1:y) >= k, the node z1 is marked and the next
// k-valued node z2 at or before y satisfies mark(z2) in {M, S}.  With
// z3_strict set, additionally some k-valued z3 strictly above y with
// gap(z3:y) > k must exist at or below z2.
std::optional<ClauseFailure> is_well_marked(const MarkedNestedTree& m, bool z3_strict = false);

// Longest chain of consecutive non-dummy nodes (node count) is at most L.
bool is_L_bounded(const MarkedNestedTree& m, int L);
int longest_non_dummy_chain(const MarkedNestedTree& m);

// Gap embedding between trees with splits: a tree embedding (ancestor order,
// lca, sibling order) whose images leave enough split room: the root gap of
// the image bounds the source root value and every image edge gap bounds the
// child's source value.  Node labels, when supplied, must not decrease along
// the map under `ord`.
std::optional<ClauseFailure> check_gap(const LabelledTree& t1, const Split& s1,
                                       const LabelledTree& t2, const Split& s2,
                                       const std::vector<int>& h,
                                       const std::vector<std::string>* labels1 = nullptr,
                                       const std::vector<std::string>* labels2 = nullptr,
                                       const LabelOrder* ord = nullptr);

// Marked gap embedding: additionally root to root, leaves to leaves, equal
// markings, equal same-side child edge labels, matching closest proper
// k-ancestor products for every level, and gluing (children of marked or
// separating nodes stay children).
std::optional<ClauseFailure> check_marked_gap(const MarkedNestedTree& m1,
                                              const MarkedNestedTree& m2,
                                              const std::vector<int>& h);

struct GapSearchResult {
  SearchStatus status = SearchStatus::absent;
  std::vector<int> map;
};

// Complete backtracking search for a marked gap embedding, assigning source
// nodes in depth-first order; marking and child-edge-label filters run first.
GapSearchResult search_marked_gap(const MarkedNestedTree& m1, const MarkedNestedTree& m2,
                                  Deadline deadline = Deadline::never());

// Complete search for a plain gap embedding with node labels (as produced by
// encode_dershowitz).
GapSearchResult search_gap(const LabelledTree& t1, const Split& s1,
                           const std::vector<std::string>& labels1, const LabelledTree& t2,
                           const Split& s2, const std::vector<std::string>& labels2,
                           Deadline deadline = Deadline::never());

// Downward consequence of a marked gap embedding on split values: whenever
// spt1(v) = k and gap1(u:v) > k for nodes u above v, the image gap is >= k.
std::optional<ClauseFailure> check_gap_consequence(const MarkedNestedTree& m1,
                                                   const MarkedNestedTree& m2,
                                                   const std::vector<int>& h);

// Consequences on interpretations: equal label products between marked node
// pairs, and the marked interpretation of the first tree embeds into that of
// the second through the restriction of h to marked leaves.
std::optional<ClauseFailure> check_interp_consequence(const MonoidInterpretation& i,
                                                      const MarkedNestedTree& m1,
                                                      const MarkedNestedTree& m2,
                                                      const std::vector<int>& h);

// Tree with composite node labels standing in for the marked structure:
// per-level closest proper k-ancestor products, child edge labels, root and
// leaf flags, and the marking.  The returned split raises the value of the
// i-th node of each maximal chain of consecutive non-dummy nodes to
// height + 1 + i, so its height is height + 1 + L.
struct EncodedTree {
  LabelledTree tree;            // shape and edge labels copied from the input
  Split split;
  std::vector<std::string> node_labels;
};
EncodedTree encode_dershowitz(const MarkedNestedTree& m, int L);

}  // namespace treewqo
