#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treewqo/common.hpp"
#include "treewqo/tree.hpp"

namespace treewqo {

// Assignment of values 1..height to every node of a tree.
struct Split {
  int height = 0;
  std::vector<int> value;  // by node id

  int at(int v) const { return value[static_cast<std::size_t>(v)]; }
  void validate(const LabelledTree& t) const;
};

// Minimum split value strictly between ancestor x and descendant y;
// height + 1 when nothing lies strictly between.  Requires x strictly above y.
int gap(const LabelledTree& t, const Split& s, int x, int y);

// gap() extended to x == y, where it is height + 1.
int gap_or_top(const LabelledTree& t, const Split& s, int x, int y);

// Two nodes of value k on a common branch are k-neighbours when no value
// below k separates them; classes are the equivalence closure, listed per
// branch from the root downward.
std::vector<std::vector<int>> k_classes(const LabelledTree& t, const Split& s, int leaf, int k);

struct RamseyanViolation {
  int leaf = -1;  // branch witness
  int k = -1;
  int x = -1, y = -1, xp = -1, yp = -1;  // class pairs with t(x,y)*t(x',y') != t(x,y)
};

// Checks that on every branch, within every class of k-neighbours, the label
// product of any strict pair absorbs any other on its right.
std::optional<RamseyanViolation> validate_ramseyan(const LabelledTree& t, const Split& s);

// Branch-local part of validate_ramseyan, restricted to the branch ending at
// `leaf`.
std::optional<RamseyanViolation> validate_ramseyan_branch(const LabelledTree& t, const Split& s,
                                                          int leaf);

// Nodes x strictly above y are independent at level k when the gap between
// them is exactly k and at least two k-valued nodes lie strictly between.
// The witness returned is (first, second, last) such node in ancestor order.
struct IndependenceWitness {
  int z1 = -1, z2 = -1, z3 = -1;
};
std::optional<IndependenceWitness> independent_at(const LabelledTree& t, const Split& s, int x,
                                                  int y, int k);

// Computes tlbl(x, y) through a validated split without multiplying the edge
// labels of the section between the second and last witness node: independent
// pairs reduce to three shorter products, dependent ones to at most two.
int fast_tlbl(const LabelledTree& t, const Split& s, int x, int y);

struct ConstructOutcome {
  SearchStatus status = SearchStatus::absent;
  std::optional<Split> split;
};

// Finds a split of height <= budget passing validate_ramseyan, trying cheap
// candidate families first (constant, prefix-product, node depth, and a
// factorization seed on linear trees) and then a complete backtracking search
// by increasing height with smaller values preferred.  `absent` is a proof
// that no split of height <= budget exists.
ConstructOutcome construct_split(const LabelledTree& t, int budget,
                                 Deadline deadline = Deadline::never());

int default_split_budget(const FiniteMonoid& m);

}  // namespace treewqo
