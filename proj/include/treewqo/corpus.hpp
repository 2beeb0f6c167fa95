#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treewqo/bough.hpp"
#include "treewqo/common.hpp"
#include "treewqo/interp.hpp"
#include "treewqo/marked_tree.hpp"
#include "treewqo/monoid.hpp"
#include "treewqo/rng.hpp"
#include "treewqo/sequence.hpp"
#include "treewqo/split.hpp"
#include "treewqo/tree.hpp"

namespace treewqo {

// Stock monoids for generated instances, all of size <= 6.  Groups always
// admit the prefix-product split; left-zero tables are paired with
// identity-free edge labels so that every split works; the remaining tables
// get small trees to keep the complete split search cheap.
struct CorpusMonoid {
  std::string name;
  FiniteMonoid monoid;
  bool group = false;
  bool identity_free = false;
  int max_leaves = 32;
};

const std::vector<CorpusMonoid>& corpus_monoids();

// Uniform full binary tree shape with uniform edge labels; identity_free
// restricts labels to non-identity elements (needs size >= 2).
LabelledTree random_tree(Rng& rng, const FiniteMonoid& m, int leaves, bool identity_free = false);

struct SplitInstance {
  std::string monoid_name;
  LabelledTree tree;
  Split split;
};

// Tree drawn over a random corpus monoid together with a split found by
// construct_split; resamples when a per-attempt time slice runs out.
std::optional<SplitInstance> random_split_instance(Rng& rng, Deadline deadline);

struct MarkedPairInstance {
  MonoidInterpretation interp;
  MarkedNestedTree small, big;
  std::vector<int> map_hint;  // node map small -> big witnessing the embedding
};

// Pair built by inserting one dummy level node (plus a dummy leaf) above a
// dummy node that has a same-level class predecessor, over a left-zero
// monoid with identity-free labels.  Markings are drawn at random and
// repaired to well-markedness; instances failing any checker are resampled.
std::optional<MarkedPairInstance> random_marked_pair(Rng& rng, int max_leaves, Deadline deadline);

struct BoughInstance {
  std::string monoid_name;
  LabelledTree tree;
  Split split;
  BackboneRef backbone;  // tail is internal, so the instance decomposes
};

std::optional<BoughInstance> random_bough_instance(Rng& rng, int max_leaves, Deadline deadline);

// Interpretation with identity morphism and a random edge-triple set, for
// replacement checks over a given monoid.
MonoidInterpretation random_interpretation(Rng& rng, const FiniteMonoid& m);

// Base graph of 1..max_base vertices with distinct labels and random edge,
// close and far relations.
RegularSequence random_sequence(Rng& rng, int max_base);

}  // namespace treewqo
