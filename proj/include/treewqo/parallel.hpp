#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>

#include "treewqo/corpus.hpp"
#include "treewqo/sequence.hpp"
#include "treewqo/split.hpp"
#include "treewqo/tree.hpp"

namespace treewqo {

// Threads a parallel kernel will use: `requested` when positive, otherwise
// the OpenMP default.  Always 1 when built without OpenMP, in which case the
// parallel entry points run their serial twin.
int worker_count(int requested = 0);

// Same verdict as validate_ramseyan; branches are checked across threads and
// a violation on the lowest-numbered leaf wins.
std::optional<RamseyanViolation> validate_ramseyan_parallel(const LabelledTree& t, const Split& s,
                                                            int workers = 0);

// Compares fast_tlbl against tlbl over every ancestor-or-equal pair.  Returns
// the disagreeing pair with the lowest descendant, nearest ancestor first.
std::optional<std::pair<int, int>> check_fast_tlbl(const LabelledTree& t, const Split& s);
std::optional<std::pair<int, int>> check_fast_tlbl_parallel(const LabelledTree& t, const Split& s,
                                                            int workers = 0);

struct BatchVerdict {
  int failed = -1;     // lowest failing instance index, -1 when all pass
  std::string detail;  // description of that failure
};

// For every pair: search_marked_gap must find an embedding and both
// consequence checks must accept the map it found.
BatchVerdict check_marked_pairs(std::span<const MarkedPairInstance> pairs);
BatchVerdict check_marked_pairs_parallel(std::span<const MarkedPairInstance> pairs,
                                         int workers = 0);

// Arrow claims for every sequence at expansion length r.
BatchVerdict check_sequence_claims(std::span<const RegularSequence> seqs, int r);
BatchVerdict check_sequence_claims_parallel(std::span<const RegularSequence> seqs, int r,
                                            int workers = 0);

}  // namespace treewqo
