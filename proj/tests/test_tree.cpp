#include <doctest.h>

#include "oracles.hpp"
#include "treewqo/rng.hpp"
#include "treewqo/tree.hpp"

using namespace treewqo;

namespace {

// ((leaf, leaf), leaf) over Z3 with distinct edge labels.
LabelledTree sample_tree() {
  FiniteMonoid z3 = cyclic_monoid(3);
  return build_tree(z3, td_node(1, td_node(2, td_leaf(), 0, td_leaf()), 2, td_leaf()));
}

LabelledTree random_z3_tree(Rng& rng, int leaves) {
  FiniteMonoid z3 = cyclic_monoid(3);
  auto shape = [&](auto&& self, int n) -> TreeDescPtr {
    if (n == 1) return td_leaf();
    int l = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    return td_node(static_cast<int>(rng.below(3)), self(self, l), static_cast<int>(rng.below(3)),
                   self(self, n - l));
  };
  return build_tree(z3, shape(shape, leaves));
}

}  // namespace

TEST_CASE("build_tree numbers nodes in preorder") {
  LabelledTree t = sample_tree();
  CHECK(t.size() == 5);
  CHECK(t.root() == 0);
  CHECK(t.left(0) == 1);
  CHECK(t.right(0) == 4);
  CHECK(t.left(1) == 2);
  CHECK(t.right(1) == 3);
  CHECK(t.is_leaf(2));
  CHECK(t.is_leaf(3));
  CHECK(t.is_leaf(4));
  CHECK(t.depth(0) == 0);
  CHECK(t.depth(2) == 2);
  CHECK(t.edge_label(1) == 1);
  CHECK(t.edge_label(2) == 2);
  CHECK(t.edge_label(3) == 0);
  CHECK(t.edge_label(4) == 2);
  CHECK(t.height() == 2);
  CHECK_NOTHROW(t.validate());
  CHECK(leaves_in_order(t) == std::vector<int>{2, 3, 4});
}

TEST_CASE("ancestor order and lca") {
  LabelledTree t = sample_tree();
  CHECK(t.is_ancestor(0, 3));
  CHECK(t.is_ancestor(3, 3));
  CHECK(!t.is_ancestor(3, 0));
  CHECK(!t.is_ancestor(1, 4));
  CHECK(lca(t, 2, 3) == 1);
  CHECK(lca(t, 2, 4) == 0);
  CHECK(lca(t, 1, 3) == 1);
  CHECK(lca(t, 4, 4) == 4);
  CHECK(lca(t, 3, 2) == 1);
}

TEST_CASE("tlbl multiplies along downward paths") {
  LabelledTree t = sample_tree();
  CHECK(tlbl(t, 0, 0) == 0);
  CHECK(tlbl(t, 0, 1) == 1);
  CHECK(tlbl(t, 0, 2) == 0);  // 1 + 2 mod 3
  CHECK(tlbl(t, 1, 3) == 0);
  CHECK(tlbl(t, 0, 4) == 2);

  Rng rng(11);
  for (int it = 0; it < 60; ++it) {
    LabelledTree r = random_z3_tree(rng, 2 + static_cast<int>(rng.below(9)));
    for (int z = 0; z < r.size(); ++z)
      for (int y = z; y >= 0; y = r.parent(y))
        for (int x = y; x >= 0; x = r.parent(x))
          CHECK(tlbl(r, x, z) == r.monoid.mul(tlbl(r, x, y), tlbl(r, y, z)));
  }
}

TEST_CASE("node_before matches preorder ids") {
  Rng rng(12);
  LabelledTree t = random_z3_tree(rng, 9);
  for (int x = 0; x < t.size(); ++x)
    for (int y = 0; y < t.size(); ++y) CHECK(node_before(t, x, y) == (x < y));
}

TEST_CASE("build_linear chains cells along the spine") {
  FiniteMonoid z3 = cyclic_monoid(3);
  LabelledTree t = build_linear(z3, {{1, 2}, {0, 1}});
  CHECK(t.size() == 5);
  CHECK(t.is_leaf(t.left(0)));
  CHECK(t.edge_label(t.left(0)) == 1);
  int spine = t.right(0);
  CHECK(t.edge_label(spine) == 2);
  CHECK(t.is_leaf(t.left(spine)));
  CHECK(t.edge_label(t.left(spine)) == 0);
  CHECK(t.is_leaf(t.right(spine)));
  CHECK(t.edge_label(t.right(spine)) == 1);
  CHECK(leaves_in_order(t).size() == 3);
}

TEST_CASE("same_tree compares shape and labels") {
  LabelledTree a = sample_tree();
  CHECK(same_tree(a, sample_tree()));
  LabelledTree b = sample_tree();
  b.nodes[2].edge_label = 1;
  CHECK(!same_tree(a, b));
  CHECK(!same_tree(a, single_leaf_tree(a.monoid)));
  CHECK(same_tree(single_leaf_tree(a.monoid), single_leaf_tree(cyclic_monoid(5))));
}

TEST_CASE("shape enumeration follows the catalan numbers") {
  CHECK(oracle::all_shapes(1, 0).size() == 1);
  CHECK(oracle::all_shapes(2, 0).size() == 1);
  CHECK(oracle::all_shapes(3, 0).size() == 2);
  CHECK(oracle::all_shapes(4, 0).size() == 5);
  CHECK(oracle::all_shapes(5, 0).size() == 14);
  CHECK(oracle::all_shapes(8, 0).size() == 429);
  FiniteMonoid one = trivial_monoid();
  for (const auto& d : oracle::all_shapes(5, 0)) {
    LabelledTree t = build_tree(one, d);
    CHECK(t.size() == 9);
    CHECK(leaves_in_order(t).size() == 5);
  }
}
