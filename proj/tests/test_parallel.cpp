#include <doctest.h>

#include <utility>
#include <vector>

#include "treewqo/corpus.hpp"
#include "treewqo/parallel.hpp"
#include "treewqo/split.hpp"

using namespace treewqo;

namespace {

// Left-zero products absorb on the right, so every split over this tree is
// Ramseyan and the fast product path agrees everywhere.
std::pair<LabelledTree, Split> absorbing_host() {
  FiniteMonoid lz = left_zero_monoid(2);
  LabelledTree t = build_tree(
      lz, td_node(1, td_leaf(), 1,
                  td_node(2, td_leaf(), 1, td_node(2, td_leaf(), 1, td_node(1, td_leaf(), 2, td_leaf())))));
  Split s;
  s.height = 2;
  s.value = {1, 2, 2, 2, 1, 2, 1, 2, 2};
  s.validate(t);
  return {std::move(t), s};
}

// Constant split over an alternating-group caterpillar: window products do
// not absorb, so the Ramseyan check fails and the product shortcut drifts.
std::pair<LabelledTree, Split> drifting_host() {
  FiniteMonoid z2 = cyclic_monoid(2);
  LabelledTree t = build_tree(
      z2, td_node(1, td_leaf(), 1,
                  td_node(1, td_leaf(), 1,
                          td_node(1, td_leaf(), 1,
                                  td_node(1, td_leaf(), 1, td_node(1, td_leaf(), 1, td_leaf()))))));
  Split s;
  s.height = 1;
  s.value.assign(11, 1);
  s.validate(t);
  return {std::move(t), s};
}

}  // namespace

TEST_CASE("worker count honours the request") {
  CHECK(worker_count() >= 1);
  CHECK(worker_count(0) == worker_count());
  int w = worker_count(4);
  CHECK((w == 4 || w == 1));
}

TEST_CASE("ramseyan verdicts agree across schedules") {
  auto [good_t, good_s] = absorbing_host();
  CHECK(!validate_ramseyan(good_t, good_s).has_value());
  for (int w : {0, 1, 2}) CHECK(!validate_ramseyan_parallel(good_t, good_s, w).has_value());

  auto [bad_t, bad_s] = drifting_host();
  auto serial = validate_ramseyan(bad_t, bad_s);
  REQUIRE(serial.has_value());
  CHECK(serial->leaf == 1);
  CHECK(serial->k == 1);
  CHECK(serial->x == 0);
  CHECK(serial->y == 1);
  CHECK(serial->xp == 0);
  CHECK(serial->yp == 1);
  for (int w : {0, 1, 2}) {
    auto par = validate_ramseyan_parallel(bad_t, bad_s, w);
    REQUIRE(par.has_value());
    CHECK(par->leaf == serial->leaf);
    CHECK(par->k == serial->k);
    CHECK(par->x == serial->x);
    CHECK(par->y == serial->y);
    CHECK(par->xp == serial->xp);
    CHECK(par->yp == serial->yp);
  }
}

TEST_CASE("fast product check returns the least drifting pair") {
  auto [good_t, good_s] = absorbing_host();
  CHECK(!check_fast_tlbl(good_t, good_s).has_value());
  for (int w : {0, 1, 2}) CHECK(!check_fast_tlbl_parallel(good_t, good_s, w).has_value());

  auto [bad_t, bad_s] = drifting_host();
  auto serial = check_fast_tlbl(bad_t, bad_s);
  REQUIRE(serial.has_value());
  CHECK(*serial == std::make_pair(0, 7));
  CHECK(fast_tlbl(bad_t, bad_s, 0, 7) == 1);
  CHECK(tlbl(bad_t, 0, 7) == 0);
  for (int y = 0; y < serial->second; ++y)
    for (int x = y; x >= 0; x = bad_t.parent(x))
      CHECK(fast_tlbl(bad_t, bad_s, x, y) == tlbl(bad_t, x, y));
  for (int x = serial->second; x != serial->first; x = bad_t.parent(x))
    CHECK(fast_tlbl(bad_t, bad_s, x, serial->second) == tlbl(bad_t, x, serial->second));
  for (int w : {0, 1, 2}) {
    auto par = check_fast_tlbl_parallel(bad_t, bad_s, w);
    REQUIRE(par.has_value());
    CHECK(*par == *serial);
  }
}

TEST_CASE("generated splits pass both kernels") {
  Rng rng(2024);
  for (int i = 0; i < 2; ++i) {
    auto si = random_split_instance(rng, Deadline::after_seconds(60));
    REQUIRE(si.has_value());
    CHECK(!validate_ramseyan_parallel(si->tree, si->split, 2).has_value());
    CHECK(!check_fast_tlbl(si->tree, si->split).has_value());
    CHECK(!check_fast_tlbl_parallel(si->tree, si->split, 2).has_value());
  }
}

TEST_CASE("marked pair batches agree between serial and parallel") {
  Rng rng(17);
  std::vector<MarkedPairInstance> pairs;
  while (pairs.size() < 6) {
    auto mp = random_marked_pair(rng, 10, Deadline::after_seconds(120));
    REQUIRE(mp.has_value());
    pairs.push_back(std::move(*mp));
  }
  BatchVerdict s = check_marked_pairs(pairs);
  CHECK(s.failed == -1);
  CHECK(s.detail.empty());
  for (int w : {1, 2}) {
    BatchVerdict p = check_marked_pairs_parallel(pairs, w);
    CHECK(p.failed == -1);
    CHECK(p.detail.empty());
  }

  // A root demoted to dummy cannot host the image of the marked root, so the
  // search fails; the batch must report the lowest corrupted index.
  std::vector<MarkedPairInstance> broken = pairs;
  broken[2].big.marking[0] = Marking::D;
  broken[4].big.marking[0] = Marking::D;
  BatchVerdict bs = check_marked_pairs(broken);
  CHECK(bs.failed == 2);
  CHECK(bs.detail == "search found no embedding");
  for (int w : {1, 2}) {
    BatchVerdict bp = check_marked_pairs_parallel(broken, w);
    CHECK(bp.failed == bs.failed);
    CHECK(bp.detail == bs.detail);
  }
}

TEST_CASE("sequence claim batches agree between serial and parallel") {
  Rng rng(91);
  std::vector<RegularSequence> seqs;
  for (int i = 0; i < 30; ++i) seqs.push_back(random_sequence(rng, 4));
  BatchVerdict s = check_sequence_claims(seqs, 3);
  CHECK(s.failed == -1);
  CHECK(s.detail.empty());
  for (int w : {1, 3}) {
    BatchVerdict p = check_sequence_claims_parallel(seqs, 3, w);
    CHECK(p.failed == -1);
    CHECK(p.detail.empty());
  }
}
