#include "treewqo/parallel.hpp"

#include <atomic>
#include <vector>

#include "treewqo/gap.hpp"
#include "treewqo/transduce.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace treewqo {

int worker_count(int requested) {
#ifdef _OPENMP
  return requested > 0 ? requested : omp_get_max_threads();
#else
  (void)requested;
  return 1;
#endif
}

namespace {

// Lowers `best` to `candidate` when smaller; used to keep the winning index
// deterministic across schedules.
void lower_to(std::atomic<int>& best, int candidate) {
  int cur = best.load(std::memory_order_relaxed);
  while (candidate < cur && !best.compare_exchange_weak(cur, candidate)) {
  }
}

std::optional<std::string> marked_pair_failure(const MarkedPairInstance& p) {
  GapSearchResult r = search_marked_gap(p.small, p.big);
  if (r.status != SearchStatus::found) return "search found no embedding";
  if (auto f = check_gap_consequence(p.small, p.big, r.map))
    return "gap consequence failed at clause " + f->clause;
  if (auto f = check_interp_consequence(p.interp, p.small, p.big, r.map))
    return "interpretation consequence failed at clause " + f->clause;
  return std::nullopt;
}

std::optional<std::string> claim_failure(const RegularSequence& s, int r) {
  ArrowClaims c = check_arrow_claims(s, r);
  if (!c.forward_bounded) {
    auto [u, v] = *c.forward_witness;
    return "arc from vertex " + std::to_string(u) + " to vertex " + std::to_string(v) +
           " jumps past the next copy";
  }
  if (!c.far_backward_regular) {
    auto [u, v, miss] = *c.far_witness;
    return "far arcs from vertex " + std::to_string(u) + " reach vertex " + std::to_string(v) +
           " but not vertex " + std::to_string(miss);
  }
  return std::nullopt;
}

// Runs `fails(i)` over [0, n) and returns the lowest index where it reports a
// failure, with the recomputed detail.  Indices above the current winner are
// skipped, so work stays bounded once a failure appears.
template <class Fails>
BatchVerdict batch_scan(long n, int workers, Fails fails) {
  std::atomic<int> best{static_cast<int>(n)};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count(workers))
#else
  (void)workers;
#endif
  for (long i = 0; i < n; ++i) {
    int idx = static_cast<int>(i);
    if (idx >= best.load(std::memory_order_relaxed)) continue;
    if (fails(idx)) lower_to(best, idx);
  }
  int winner = best.load();
  if (winner >= static_cast<int>(n)) return {};
  return {winner, *fails(winner)};
}

}  // namespace

std::optional<RamseyanViolation> validate_ramseyan_parallel(const LabelledTree& t, const Split& s,
                                                            int workers) {
  std::vector<int> leaves;
  for (int v = 0; v < t.size(); ++v)
    if (t.is_leaf(v)) leaves.push_back(v);
  std::atomic<int> best{t.size()};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count(workers))
#else
  (void)workers;
#endif
  for (long i = 0; i < static_cast<long>(leaves.size()); ++i) {
    int leaf = leaves[static_cast<std::size_t>(i)];
    if (leaf >= best.load(std::memory_order_relaxed)) continue;
    if (validate_ramseyan_branch(t, s, leaf)) lower_to(best, leaf);
  }
  if (best.load() >= t.size()) return std::nullopt;
  return validate_ramseyan_branch(t, s, best.load());
}

namespace {

std::optional<std::pair<int, int>> fast_tlbl_mismatch_at(const LabelledTree& t, const Split& s,
                                                         int y) {
  for (int x = y; x >= 0; x = t.parent(x))
    if (fast_tlbl(t, s, x, y) != tlbl(t, x, y)) return std::make_pair(x, y);
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<int, int>> check_fast_tlbl(const LabelledTree& t, const Split& s) {
  for (int y = 0; y < t.size(); ++y)
    if (auto bad = fast_tlbl_mismatch_at(t, s, y)) return bad;
  return std::nullopt;
}

std::optional<std::pair<int, int>> check_fast_tlbl_parallel(const LabelledTree& t, const Split& s,
                                                            int workers) {
  std::atomic<int> best{t.size()};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count(workers))
#else
  (void)workers;
#endif
  for (long y = 0; y < static_cast<long>(t.size()); ++y) {
    int node = static_cast<int>(y);
    if (node >= best.load(std::memory_order_relaxed)) continue;
    if (fast_tlbl_mismatch_at(t, s, node)) lower_to(best, node);
  }
  if (best.load() >= t.size()) return std::nullopt;
  return fast_tlbl_mismatch_at(t, s, best.load());
}

BatchVerdict check_marked_pairs(std::span<const MarkedPairInstance> pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (auto d = marked_pair_failure(pairs[i])) return {static_cast<int>(i), *d};
  return {};
}

BatchVerdict check_marked_pairs_parallel(std::span<const MarkedPairInstance> pairs, int workers) {
  return batch_scan(static_cast<long>(pairs.size()), workers, [&](int i) {
    return marked_pair_failure(pairs[static_cast<std::size_t>(i)]);
  });
}

BatchVerdict check_sequence_claims(std::span<const RegularSequence> seqs, int r) {
  for (std::size_t i = 0; i < seqs.size(); ++i)
    if (auto d = claim_failure(seqs[i], r)) return {static_cast<int>(i), *d};
  return {};
}

BatchVerdict check_sequence_claims_parallel(std::span<const RegularSequence> seqs, int r,
                                            int workers) {
  return batch_scan(static_cast<long>(seqs.size()), workers,
                    [&](int i) { return claim_failure(seqs[static_cast<std::size_t>(i)], r); });
}

}  // namespace treewqo
