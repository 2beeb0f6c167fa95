#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "treewqo/common.hpp"
#include "treewqo/graph.hpp"

namespace treewqo {

using LabelPair = std::pair<std::string, std::string>;
using LabelPairSet = std::set<LabelPair>;

// Base graph plus rules for joining indexed copies.  In the expansion,
// copies i < j are connected by the close rule when j == i + 1 and by the
// far rule otherwise; both rules read ordered label pairs (label in the
// earlier copy, label in the later copy).
struct RegularSequence {
  LabelledGraph base;
  LabelPairSet close;
  LabelPairSet far;

  void validate() const;
};

// Word-indexed variant: one vertex per letter position, the word repeated.
// Consecutive positions use the close rule, all other position pairs the
// far rule, again ordered earlier-to-later.
struct PeriodicSequence {
  std::vector<std::string> word;
  LabelPairSet close;
  LabelPairSet far;

  void validate() const;
};

// r resp. n must be positive.  Vertices of the regular expansion are
// copy-major: vertex (copy j, base u) has index (j - 1) * base.n + u.
LabelledGraph expand_regular(const RegularSequence& s, int r);
LabelledGraph expand_periodic(const PeriodicSequence& s, int n);

// Expansion with endpoint marks folded into the vertex labels.  Regular
// expansions keep their base labels and append "first" on the first copy
// and "last" on the last one; periodic expansions keep only the marks and
// label interior positions "_".  The mark names are reserved and rejected
// by validate() when they occur in user labels.
LabelledGraph with_endpoints_regular(const RegularSequence& s, int r);
LabelledGraph with_endpoints_periodic(const PeriodicSequence& s, int n);

inline constexpr const char* mark_first = "first";
inline constexpr const char* mark_last = "last";

// Whether the far rule equals the complement of the close rule over the
// letters occurring in the word.
bool far_is_close_complement(const PeriodicSequence& s);

// Pairwise non-embeddability of the endpoint-marked expansions for all
// sizes in [lo, hi].
AntichainResult certify_endpoint_antichain(const RegularSequence& s, int lo, int hi,
                                           Deadline deadline = Deadline::never());
AntichainResult certify_endpoint_antichain(const PeriodicSequence& s, int lo, int hi,
                                           Deadline deadline = Deadline::never());

// Two-vertex base whose expansions are the staircase graphs: copy i
// contributes an edge o(i) - b(i), close pairs add o(i) - o(i+1), far
// pairs add o(i) - o(j) and b(i) - o(j).
RegularSequence split_permutation_sequence();

// Word form of the same family; its expansions coincide with the regular
// ones vertex for vertex.
PeriodicSequence split_permutation_periodic();

}  // namespace treewqo
