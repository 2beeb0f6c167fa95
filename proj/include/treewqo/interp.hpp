#pragma once

#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "treewqo/graph.hpp"
#include "treewqo/marked_tree.hpp"
#include "treewqo/monoid.hpp"
#include "treewqo/tree.hpp"

namespace treewqo {

// Edge predicate over a monoid: leaves x left of y are adjacent exactly when
// (tlbl(root, lca), tlbl(lca, x), tlbl(lca, y)) lands in P.  The three slots
// are ordered; P need not be symmetric in the last two.
struct MonoidInterpretation {
  Morphism morphism;  // carries the monoid; alphabet used by symbol-mode trees
  std::set<std::tuple<int, int, int>> edges;  // P

  const FiniteMonoid& monoid() const { return morphism.monoid; }
  void validate() const;
};

// Graph on all leaves in sibling order; vertices carry one blank label and
// the identity vertex order.
LabelledGraph interpret(const MonoidInterpretation& i, const LabelledTree& t);

// Same predicate evaluated on the M-marked leaves only.
LabelledGraph interpret_marked(const MonoidInterpretation& i, const MarkedNestedTree& m);

// Named stock interpretations: "cliques" (every leaf pair adjacent),
// "edgeless" (no pairs), and "paths" (adjacent exactly for consecutive leaves
// of a linear tree, via a word monoid truncated to three letters).
MonoidInterpretation builtin_interpretation(const std::string& name);

}  // namespace treewqo
