#pragma once

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "treewqo/common.hpp"
#include "treewqo/graph.hpp"
#include "treewqo/sequence.hpp"

namespace treewqo {

// Arrow digraph of an expansion: for distinct vertices u, v there is an arc
// u -> v exactly when edge presence between u and v disagrees with the far
// rule applied to (label of u, label of v) in that order.  Requires the base
// labels to be pairwise distinct.
DirectedGraph phi_arrow(const RegularSequence& s, int r);

struct ArrowClaims {
  // No arc lands more than one copy ahead of its source.
  bool forward_bounded = true;
  std::optional<std::pair<int, int>> forward_witness;

  // For a fixed source vertex and target base vertex, arcs landing at least
  // two copies back are all present or all absent.
  bool far_backward_regular = true;
  std::optional<std::tuple<int, int, int>> far_witness;  // source, arc target, missing target

  // Probes: where the far-backward family is present, is the arc one copy
  // back resp. into the same copy present too?  Reported, not enforced.
  bool extends_prev = true;
  bool extends_same = true;
};

ArrowClaims check_arrow_claims(const RegularSequence& s, int r);

// Shortest arc path from a first-copy vertex to a last-copy vertex in the
// arrow digraph.  Sources and arc targets are scanned in ascending index,
// which fixes the path deterministically.
struct CrossingPath {
  SearchStatus status = SearchStatus::absent;
  std::vector<int> vertices;
};

CrossingPath find_crossing_path(const RegularSequence& s, int r,
                                Deadline deadline = Deadline::never());

// Repetition pattern of a crossing path: the closest pair of positions
// carrying the same base vertex (ties resolved towards the earliest
// position, skipping pairs that do not advance the copy index).
struct PeriodData {
  int base_vertex = -1;  // the repeated base vertex
  int copy_step = 0;     // copies advanced between the two occurrences
  int path_step = 0;     // path positions between the two occurrences
  std::vector<int> q_bases;  // base vertices of one period, in path order
};

PeriodData extract_period(const RegularSequence& s, const std::vector<int>& path);

// Word form induced by one period of a crossing path: the word lists the
// period's base labels, the far rule is restricted to letters that occur,
// and the close rule is the complement over those letters.
PeriodicSequence derive_periodic(const RegularSequence& s, const std::vector<int>& q_bases);

// Produces a path on `target` vertices inside an expansion of s.  When the
// symmetrised arrow arcs on a crossing path's vertex set are exactly the
// consecutive pairs, a prefix of that path is the result.  Otherwise a
// larger expansion is used: every second occurrence of the repeated base
// vertex is kept, and two kept vertices are joined when their arrow
// distance in both directions is at most twice the path period.  The
// result is checked against the target path before it is returned.
struct TransduceOutcome {
  SearchStatus status = SearchStatus::absent;
  bool easy = false;
  int r_used = 0;
  std::vector<int> kept;  // expansion vertex ids carrying the result
  LabelledGraph result;
};

TransduceOutcome transduce_paths(const RegularSequence& s, int target,
                                 Deadline deadline = Deadline::never());

}  // namespace treewqo
