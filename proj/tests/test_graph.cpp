#include <doctest.h>

#include "oracles.hpp"
#include "treewqo/graph.hpp"
#include "treewqo/rng.hpp"

using namespace treewqo;

namespace {

LabelledGraph random_graph(Rng& rng, int n, int nlabels, bool with_order) {
  LabelledGraph g = LabelledGraph::empty(n);
  g.labels.clear();
  for (int l = 0; l < nlabels; ++l) g.labels.push_back(std::string(1, static_cast<char>('a' + l)));
  for (int v = 0; v < n; ++v)
    g.vlabel[static_cast<std::size_t>(v)] = static_cast<int>(rng.below(static_cast<std::uint64_t>(nlabels)));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(0.5)) g.set_edge(u, v, true);
  if (with_order) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
    for (int v = n - 1; v > 0; --v)
      std::swap(perm[static_cast<std::size_t>(v)],
                perm[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(v + 1)))]);
    g.vorder = perm;
  }
  return g;
}

}  // namespace

TEST_CASE("stock graphs have the expected edge counts") {
  CHECK(LabelledGraph::empty(5).edge_count() == 0);
  CHECK(LabelledGraph::path(5).edge_count() == 4);
  CHECK(LabelledGraph::clique(5).edge_count() == 10);
  CHECK(LabelledGraph::path(1).edge_count() == 0);
  for (int v = 0; v + 1 < 5; ++v) CHECK(LabelledGraph::path(5).edge(v, v + 1));
}

TEST_CASE("embed agrees with the brute-force search") {
  Rng rng(20240901);
  for (int it = 0; it < 300; ++it) {
    int ns = 1 + static_cast<int>(rng.below(4));
    int nb = ns + static_cast<int>(rng.below(3));
    bool ordered = rng.chance(0.4);
    LabelledGraph small = random_graph(rng, ns, 2, ordered);
    LabelledGraph big = random_graph(rng, nb, 2, ordered);
    bool respect = ordered && rng.chance(0.7);
    EmbedResult r = embed(small, big, nullptr, respect);
    auto want = oracle::embed_brute(small, big, nullptr, respect);
    REQUIRE(r.status != SearchStatus::deadline);
    CHECK((r.status == SearchStatus::found) == want.has_value());
    if (r.status == SearchStatus::found)
      CHECK(!verify_embedding(small, big, r.map, nullptr, respect));
  }
}

TEST_CASE("embed honours a label order") {
  LabelOrder ord;
  ord.labels = {"a", "b"};
  ord.le = {{true, true}, {false, true}};  // a <= b
  CHECK_NOTHROW(ord.validate());
  LabelledGraph one = LabelledGraph::empty(1, "a");
  LabelledGraph target = LabelledGraph::empty(1, "b");
  CHECK(embed(one, target).status == SearchStatus::absent);
  CHECK(embed(one, target, &ord).status == SearchStatus::found);
  CHECK(embed(target, one, &ord).status == SearchStatus::absent);

  Rng rng(7);
  for (int it = 0; it < 120; ++it) {
    LabelledGraph small = random_graph(rng, 1 + static_cast<int>(rng.below(3)), 2, false);
    LabelledGraph big = random_graph(rng, 1 + static_cast<int>(rng.below(5)), 2, false);
    EmbedResult r = embed(small, big, &ord);
    CHECK((r.status == SearchStatus::found) == oracle::embed_brute(small, big, &ord).has_value());
  }
}

TEST_CASE("verify_embedding rejects corrupted maps") {
  LabelledGraph p4 = LabelledGraph::path(4);
  CHECK(!verify_embedding(p4, p4, {0, 1, 2, 3}));
  CHECK(verify_embedding(p4, p4, {0, 1, 2, 2}));  // not injective
  CHECK(verify_embedding(p4, p4, {0, 1, 3, 2}));  // breaks adjacency
  CHECK(verify_embedding(p4, p4, {0, 1, 2}));     // wrong arity
  LabelledGraph p2 = LabelledGraph::path(2);
  CHECK(verify_embedding(p2, p4, {0, 2}));  // non-edge mapped over a gap
  CHECK(!verify_embedding(p2, p4, {2, 3}));
}

TEST_CASE("vertex order restricts embeddings") {
  LabelledGraph p2 = LabelledGraph::path(2);
  LabelledGraph host = LabelledGraph::path(2);
  host.vorder = std::vector<int>{1, 0};
  CHECK(embed(p2, host, nullptr, false).status == SearchStatus::found);
  EmbedResult r = embed(p2, host, nullptr, true);
  REQUIRE(r.status == SearchStatus::found);
  CHECK(r.map == std::vector<int>{1, 0});
}

TEST_CASE("antichain check reports the least comparable pair") {
  std::vector<LabelledGraph> family{LabelledGraph::clique(3), LabelledGraph::path(3)};
  AntichainResult a = is_antichain(family);
  CHECK(a.status == SearchStatus::absent);

  std::vector<LabelledGraph> chain{LabelledGraph::path(2), LabelledGraph::path(4),
                                   LabelledGraph::path(3)};
  AntichainResult b = is_antichain(chain);
  REQUIRE(b.status == SearchStatus::found);
  CHECK(b.from == 0);
  CHECK(b.to == 1);
  CHECK(!verify_embedding(chain[0], chain[1], b.map));
}

TEST_CASE("isomorphic distinguishes labels and shapes") {
  LabelledGraph p4 = LabelledGraph::path(4);
  LabelledGraph relabelled = LabelledGraph::empty(4);
  relabelled.set_edge(2, 0, true);
  relabelled.set_edge(0, 3, true);
  relabelled.set_edge(3, 1, true);  // path 2-0-3-1
  CHECK(isomorphic(p4, relabelled));
  CHECK(!isomorphic(p4, LabelledGraph::clique(4)));
  CHECK(!isomorphic(p4, LabelledGraph::path(3)));
  CHECK(!isomorphic(p4, LabelledGraph::path(4, "x")));
}
