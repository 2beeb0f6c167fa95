#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "treewqo/corpus.hpp"
#include "treewqo/graph.hpp"
#include "treewqo/rng.hpp"
#include "treewqo/sequence.hpp"
#include "treewqo/transduce.hpp"

using namespace treewqo;

namespace {

std::set<std::pair<int, int>> arc_set(const DirectedGraph& g) {
  std::set<std::pair<int, int>> out;
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      if (g.has(u, v)) out.emplace(u, v);
  return out;
}

}  // namespace

TEST_CASE("arrow digraph flags disagreement with the far rule") {
  RegularSequence s = split_permutation_sequence();
  DirectedGraph phi = phi_arrow(s, 4);
  CHECK(phi.n == 8);

  std::set<std::pair<int, int>> expect;
  for (int i = 0; i < 4; ++i) {
    expect.emplace(2 * i, 2 * i + 1);
    for (int j = 0; j + 2 <= i; ++j) expect.emplace(2 * i, 2 * j + 1);
    if (i + 1 < 4) expect.emplace(2 * i + 1, 2 * (i + 1));
    for (int j = 0; j < i; ++j) expect.emplace(2 * i + 1, 2 * j);
  }
  CHECK(arc_set(phi) == expect);
  CHECK(phi.arc_count() == 16);

  RegularSequence twin = s;
  twin.base.vlabel = {0, 0};
  CHECK_THROWS_WITH_AS(phi_arrow(twin, 2), "arrow: base labels must be pairwise distinct",
                       std::invalid_argument);
}

TEST_CASE("arrow claims hold on the staircase") {
  RegularSequence s = split_permutation_sequence();
  for (int r = 2; r <= 6; ++r) {
    ArrowClaims c = check_arrow_claims(s, r);
    CHECK(c.forward_bounded);
    CHECK(!c.forward_witness.has_value());
    CHECK(c.far_backward_regular);
    CHECK(!c.far_witness.has_value());
  }
  // The probe arcs one copy back and into the same copy are both missing.
  ArrowClaims c4 = check_arrow_claims(s, 4);
  CHECK(!c4.extends_prev);
  CHECK(!c4.extends_same);
}

TEST_CASE("crossing paths are deterministic arc walks") {
  RegularSequence s = split_permutation_sequence();
  CrossingPath p3 = find_crossing_path(s, 3);
  REQUIRE(p3.status == SearchStatus::found);
  CHECK(p3.vertices == std::vector<int>{1, 2, 3, 4});
  CrossingPath p4 = find_crossing_path(s, 4);
  REQUIRE(p4.status == SearchStatus::found);
  CHECK(p4.vertices == std::vector<int>{1, 2, 3, 4, 5, 6});

  // No arcs at all: unreachable last copy, except when it is the first.
  RegularSequence mute;
  mute.base = LabelledGraph::empty(1, "x");
  CHECK(find_crossing_path(mute, 2).status == SearchStatus::absent);
  CrossingPath start = find_crossing_path(mute, 1);
  REQUIRE(start.status == SearchStatus::found);
  CHECK(start.vertices == std::vector<int>{0});
}

TEST_CASE("period extraction reads the closest advancing repeat") {
  RegularSequence s = split_permutation_sequence();
  PeriodData d = extract_period(s, {1, 2, 3, 4});
  CHECK(d.base_vertex == 1);
  CHECK(d.copy_step == 1);
  CHECK(d.path_step == 2);
  CHECK(d.q_bases == std::vector<int>{1, 0});

  CHECK_THROWS_WITH_AS(extract_period(s, {0, 1}),
                       "extract_period: no base vertex repeats while advancing copies",
                       std::invalid_argument);

  PeriodicSequence w = derive_periodic(s, d.q_bases);
  CHECK(w.word == std::vector<std::string>{"b", "o"});
  CHECK(w.far == LabelPairSet{{"o", "o"}, {"b", "o"}});
  CHECK(w.close == LabelPairSet{{"o", "b"}, {"b", "b"}});
  CHECK(far_is_close_complement(w));

  CHECK_THROWS_WITH_AS(derive_periodic(s, {}), "derive_periodic: empty period",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(derive_periodic(s, {5}), "derive_periodic: base vertex out of range",
                       std::invalid_argument);
}

TEST_CASE("path transduction keeps every second repeat") {
  RegularSequence s = split_permutation_sequence();

  TransduceOutcome t1 = transduce_paths(s, 1);
  CHECK(t1.status == SearchStatus::found);
  CHECK(t1.easy);
  CHECK(t1.r_used == 1);
  CHECK(t1.kept == std::vector<int>{0});

  TransduceOutcome t2 = transduce_paths(s, 2);
  CHECK(t2.easy);
  CHECK(t2.r_used == 2);
  CHECK(t2.kept == std::vector<int>{1, 2});

  TransduceOutcome t3 = transduce_paths(s, 3);
  CHECK(t3.status == SearchStatus::found);
  CHECK(!t3.easy);
  CHECK(t3.r_used == 7);
  CHECK(t3.kept == std::vector<int>{1, 5, 9});
  CHECK(isomorphic(t3.result, LabelledGraph::path(3)));

  TransduceOutcome t4 = transduce_paths(s, 4);
  CHECK(!t4.easy);
  CHECK(t4.r_used == 9);
  CHECK(t4.kept == std::vector<int>{1, 5, 9, 13});

  TransduceOutcome t5 = transduce_paths(s, 5);
  CHECK(!t5.easy);
  CHECK(t5.r_used == 11);
  CHECK(t5.kept == std::vector<int>{1, 5, 9, 13, 17});

  CHECK_THROWS_WITH_AS(transduce_paths(s, 0), "transduce: target size must be positive",
                       std::invalid_argument);

  // An isolated extra base vertex lifts the base size to the target and
  // forces the wide probe.
  RegularSequence sc = s;
  sc.base.n = 3;
  sc.base.labels = {"o", "b", "c"};
  sc.base.vlabel = {0, 1, 2};
  sc.base.adj = {{false, true, false}, {true, false, false}, {false, false, false}};
  TransduceOutcome tc = transduce_paths(sc, 3);
  CHECK(tc.status == SearchStatus::found);
  CHECK(!tc.easy);
  CHECK(tc.r_used == 7);
  CHECK(tc.kept == std::vector<int>{1, 7, 13});

  // A consecutive-only close rule stays easy at any size.
  RegularSequence ez;
  ez.base.n = 2;
  ez.base.labels = {"a", "b"};
  ez.base.vlabel = {0, 1};
  ez.base.adj = {{false, false}, {false, false}};
  ez.close = {{"a", "a"}};
  TransduceOutcome te = transduce_paths(ez, 4);
  CHECK(te.status == SearchStatus::found);
  CHECK(te.easy);
  CHECK(te.r_used == 4);
  CHECK(te.kept == std::vector<int>{0, 2, 4, 6});
  CHECK(isomorphic(te.result, LabelledGraph::path(4)));
}

TEST_CASE("random sequences keep the structural arrow claims") {
  Rng rng(20260814);
  for (int it = 0; it < 40; ++it) {
    RegularSequence s = random_sequence(rng, 4);
    for (int r = 2; r <= 5; ++r) {
      ArrowClaims c = check_arrow_claims(s, r);
      CHECK(c.forward_bounded);
      CHECK(c.far_backward_regular);
    }
    CrossingPath cp = find_crossing_path(s, 4);
    if (cp.status == SearchStatus::found) {
      DirectedGraph phi = phi_arrow(s, 4);
      REQUIRE(!cp.vertices.empty());
      CHECK(cp.vertices.front() / s.base.n == 0);
      CHECK(cp.vertices.back() / s.base.n == 3);
      for (std::size_t i = 0; i + 1 < cp.vertices.size(); ++i)
        CHECK(phi.has(cp.vertices[i], cp.vertices[i + 1]));
    }
  }
}
