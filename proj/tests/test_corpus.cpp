#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "treewqo/bough.hpp"
#include "treewqo/corpus.hpp"
#include "treewqo/gap.hpp"
#include "treewqo/split.hpp"

using namespace treewqo;

namespace {

bool is_group(const FiniteMonoid& m) {
  for (int a = 0; a < m.size; ++a) {
    bool inv = false;
    for (int b = 0; b < m.size; ++b)
      if (m.mul(a, b) == m.identity && m.mul(b, a) == m.identity) inv = true;
    if (!inv) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("corpus monoid table is fixed") {
  const auto& table = corpus_monoids();
  REQUIRE(table.size() == 9);
  std::vector<std::string> names;
  for (const auto& cm : table) names.push_back(cm.name);
  CHECK(names == std::vector<std::string>{"trivial", "z2", "z3", "z2xz2", "z2xz3", "lz2", "lz3",
                                          "u1", "u1xz2"});
  std::vector<int> sizes;
  for (const auto& cm : table) sizes.push_back(cm.monoid.size);
  CHECK(sizes == std::vector<int>{1, 2, 3, 4, 6, 3, 4, 2, 4});
  for (const auto& cm : table) {
    CHECK_NOTHROW(cm.monoid.validate());
    CHECK(cm.group == is_group(cm.monoid));
    CHECK(cm.max_leaves >= 8);
    if (cm.identity_free) {
      REQUIRE(cm.monoid.size >= 2);
      for (int a = 0; a < cm.monoid.size; ++a)
        for (int b = 0; b < cm.monoid.size; ++b)
          if (a != cm.monoid.identity) CHECK(cm.monoid.mul(a, b) == a);
    }
  }
  CHECK(table[0].max_leaves == 32);
  CHECK(table[3].max_leaves == 24);
  CHECK(table[7].max_leaves == 8);
}

TEST_CASE("random trees have the requested shape") {
  FiniteMonoid lz = left_zero_monoid(3);
  Rng rng(1);
  for (int leaves : {1, 2, 7, 20}) {
    LabelledTree t = random_tree(rng, lz, leaves, true);
    CHECK(t.size() == 2 * leaves - 1);
    int found = 0;
    for (int v = 0; v < t.size(); ++v) {
      if (t.is_leaf(v)) ++found;
      if (v != t.root()) CHECK(t.edge_label(v) != lz.identity);
    }
    CHECK(found == leaves);
  }

  FiniteMonoid z2 = cyclic_monoid(2);
  LabelledTree t = random_tree(rng, z2, 6);
  CHECK(t.size() == 11);
  for (int v = 1; v < t.size(); ++v) {
    CHECK(t.edge_label(v) >= 0);
    CHECK(t.edge_label(v) < 2);
  }

  Rng a(12), b(12);
  CHECK(same_tree(random_tree(a, lz, 9, true), random_tree(b, lz, 9, true)));
}

TEST_CASE("random split instances pass the checkers") {
  Rng rng(42);
  for (int i = 0; i < 3; ++i) {
    auto si = random_split_instance(rng, Deadline::after_seconds(60));
    REQUIRE(si.has_value());
    const CorpusMonoid* cm = nullptr;
    for (const auto& c : corpus_monoids())
      if (c.name == si->monoid_name) cm = &c;
    REQUIRE(cm != nullptr);
    CHECK(si->tree.monoid.size == cm->monoid.size);
    CHECK_NOTHROW(si->split.validate(si->tree));
    CHECK(!validate_ramseyan(si->tree, si->split).has_value());
    CHECK(si->split.height <= default_split_budget(cm->monoid));
  }
}

TEST_CASE("random marked pairs ship a gap witness") {
  Rng rng(7);
  for (int i = 0; i < 2; ++i) {
    auto mp = random_marked_pair(rng, 10, Deadline::after_seconds(120));
    REQUIRE(mp.has_value());
    const MarkedNestedTree& small = mp->small;
    const MarkedNestedTree& big = mp->big;
    CHECK_NOTHROW(small.validate());
    CHECK_NOTHROW(big.validate());
    CHECK(big.tree.size() == small.tree.size() + 2);
    CHECK(!is_well_marked(small).has_value());
    CHECK(!is_well_marked(big).has_value());
    CHECK(!validate_ramseyan(small.tree, small.split).has_value());
    CHECK(!validate_ramseyan(big.tree, big.split).has_value());

    int m_leaves = 0;
    for (int v = 0; v < small.tree.size(); ++v)
      if (small.tree.is_leaf(v) && small.mark(v) == Marking::M) ++m_leaves;
    CHECK(m_leaves >= 2);

    REQUIRE(mp->map_hint.size() == static_cast<std::size_t>(small.tree.size()));
    std::set<int> image;
    for (int v = 0; v < small.tree.size(); ++v) {
      int h = mp->map_hint[static_cast<std::size_t>(v)];
      REQUIRE(h >= 0);
      REQUIRE(h < big.tree.size());
      image.insert(h);
      CHECK(big.mark(h) == small.mark(v));
      CHECK(big.split.at(h) == small.split.at(v));
    }
    CHECK(image.size() == mp->map_hint.size());
    for (int v = 0; v < big.tree.size(); ++v)
      if (!image.count(v)) CHECK(big.mark(v) == Marking::D);
    CHECK(!check_marked_gap(small, big, mp->map_hint).has_value());

    const FiniteMonoid& m = mp->interp.monoid();
    CHECK(m.size == small.tree.monoid.size);
    CHECK((m.size == 3 || m.size == 4));
    CHECK(mp->interp.morphism.alphabet == m.names);
    for (int e = 0; e < m.size; ++e) CHECK(mp->interp.morphism.image[static_cast<std::size_t>(e)] == e);
    CHECK_NOTHROW(mp->interp.validate());
  }
}

TEST_CASE("random bough instances decompose") {
  Rng rng(99);
  for (int i = 0; i < 2; ++i) {
    auto bi = random_bough_instance(rng, 16, Deadline::after_seconds(60));
    REQUIRE(bi.has_value());
    CHECK(bi->tree.size() >= 5);
    CHECK(bi->tree.size() <= 31);
    CHECK(bi->backbone.nodes.size() >= 2);
    CHECK(bi->backbone.level >= 1);
    CHECK(bi->backbone.level <= bi->split.height);
    CHECK_NOTHROW(validate_backbone(bi->tree, bi->split, bi->backbone));
    CHECK(!bi->tree.is_leaf(bi->backbone.nodes.back()));
    Decomposition d = decompose(bi->tree, bi->split, bi->backbone);
    CHECK_NOTHROW(d.context.validate());
    CHECK_NOTHROW(d.bough.validate());
  }
}

TEST_CASE("random sequences stay within bounds") {
  Rng rng(5);
  for (int i = 0; i < 60; ++i) {
    RegularSequence s = random_sequence(rng, 5);
    CHECK(s.base.n >= 1);
    CHECK(s.base.n <= 5);
    for (int v = 0; v < s.base.n; ++v) {
      CHECK(s.base.labels[static_cast<std::size_t>(v)] == "l" + std::to_string(v));
      CHECK(s.base.vlabel[static_cast<std::size_t>(v)] == v);
      CHECK(!s.base.edge(v, v));
    }
    CHECK_NOTHROW(s.validate());
  }
  Rng a(31), b(31);
  RegularSequence s1 = random_sequence(a, 4);
  RegularSequence s2 = random_sequence(b, 4);
  CHECK(s1.base.adj == s2.base.adj);
  CHECK(s1.close == s2.close);
  CHECK(s1.far == s2.far);
}

TEST_CASE("random interpretations use the identity morphism") {
  Rng rng(3);
  for (const FiniteMonoid& m : {cyclic_monoid(3), left_zero_monoid(2)}) {
    MonoidInterpretation i = random_interpretation(rng, m);
    CHECK(i.morphism.alphabet == i.monoid().names);
    for (int e = 0; e < m.size; ++e) CHECK(i.morphism.image[static_cast<std::size_t>(e)] == e);
    for (const auto& [a, b, c] : i.edges) {
      CHECK(a >= 0);
      CHECK(a < m.size);
      CHECK(b >= 0);
      CHECK(b < m.size);
      CHECK(c >= 0);
      CHECK(c < m.size);
    }
    CHECK_NOTHROW(i.validate());
  }
  Rng a(8), b(8);
  CHECK(random_interpretation(a, cyclic_monoid(2)).edges ==
        random_interpretation(b, cyclic_monoid(2)).edges);
}
