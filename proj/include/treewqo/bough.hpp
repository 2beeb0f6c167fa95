#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treewqo/common.hpp"
#include "treewqo/interp.hpp"
#include "treewqo/split.hpp"
#include "treewqo/tree.hpp"

namespace treewqo {

// Chain of nodes of one split value k inside a host tree, each consecutive
// pair separated only by values above k.  Dimension = nodes - 1 >= 1.
struct BackboneRef {
  std::vector<int> nodes;  // ancestor order, host ids
  int level = 0;

  int dimension() const { return static_cast<int>(nodes.size()) - 1; }
};

void validate_backbone(const LabelledTree& t, const Split& s, const BackboneRef& b);

// All maximal backbones at level k with dimension >= min_dim (floored at 1).
std::vector<BackboneRef> enumerate_boughs(const LabelledTree& t, const Split& s, int k,
                                          int min_dim);

// Standalone bough: the subtree at the first backbone node with everything
// strictly below the last backbone node removed, so the tail is a leaf.
struct Bough {
  LabelledTree tree;
  Split split;
  std::vector<int> backbone;  // ids in `tree`; front is the root, back a leaf
  int level = 0;

  void validate() const;
};

// Everything around a bough: the host with the bough replaced by a hole leaf,
// and the two subtrees that hung below the bough tail together with their
// edge labels.
struct BoughContext {
  LabelledTree t_root;
  int hole = -1;  // leaf of t_root standing in for the bough
  LabelledTree t_left, t_right;
  int m_left = -1, m_right = -1;
  Split s_root, s_left, s_right;  // heights agree

  void validate() const;
};

struct Decomposition {
  BoughContext context;
  Bough bough;
  std::vector<std::pair<int, int>> blocks;  // (b_i, b_{i+1}) in standalone ids
};

// Splits a host along a backbone whose tail is internal.  The result
// round-trips: substitute(context, bough) rebuilds the host node for node.
Decomposition decompose(const LabelledTree& t, const Split& s, const BackboneRef& b);

struct Substitution {
  LabelledTree tree;
  Split split;
  std::vector<int> from_root;   // context t_root ids to result ids (hole -> bough root)
  std::vector<int> from_bough;  // bough ids to result ids
  std::vector<int> from_left, from_right;
};

Substitution substitute(const BoughContext& c, const Bough& b);

// The four label products classifying a bough leaf: from the branching point
// down to the leaf, from the enclosing backbone nodes to the branching point
// and back, and from the host root into the block.
struct BoughType {
  int bt = -1, bl = -1, br = -1, broot = -1;
  int block = -1;

  bool same_labels(const BoughType& o) const {
    return bt == o.bt && bl == o.bl && br == o.br && broot == o.broot;
  }
};

BoughType bough_type(const LabelledTree& host, const Split& s, const BackboneRef& b, int leaf);

// Product of the edge labels between the first two backbone nodes; absorption
// makes it the product down to every later backbone node.
int first_idempotent(const Bough& b);

// Gluing of m copies, merging each tail with the next root; dimension scales
// by m.  copy_map[j][v] is the id of copy j's node v in the power tree.
struct PowerBough {
  Bough bough;
  std::vector<std::vector<int>> copy_map;
};
PowerBough power_bough(const Bough& b, int m);

// Same level, height and first idempotent, and the replacement still passes
// the Ramseyan check inside the context.
bool compatible_in_context(const BoughContext& c, const Bough& b, const Bough& h);

struct PerfectCertificate {
  std::vector<int> bough_leaves;  // standalone bough leaf ids, sibling order
  std::vector<int> side;          // 0 = first copy, 1 = last copy
  std::vector<int> vertex_map;    // vertex map of the certified embedding
};

struct PerfectOutcome {
  SearchStatus status = SearchStatus::absent;
  std::optional<PerfectCertificate> certificate;
};

// Fixes the fifth power and searches assignments of bough leaves to the first
// or last copy (sibling order, first copy tried first) such that the induced
// leaf map embeds interpret(C[B]) into interpret(C[B^5]), is the identity on
// context leaves, preserves bough types, and avoids the middle three copies.
PerfectOutcome is_perfect_bough(const MonoidInterpretation& i, const BoughContext& c,
                                const Bough& b, Deadline deadline = Deadline::never());

// Replacing the bough must not change the interpreted graph on context
// leaves; compares the two induced subgraphs under the canonical leaf
// correspondence.
bool check_bough_replacement(const MonoidInterpretation& i, const BoughContext& c, const Bough& b,
                             const Bough& h);

}  // namespace treewqo
