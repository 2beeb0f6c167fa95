#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treewqo/corpus.hpp"
#include "treewqo/parallel.hpp"
#include "treewqo/rng.hpp"

using namespace treewqo;

namespace {

double seconds(const std::function<void()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const char* name, double serial, double parallel, int workers) {
  std::printf("%-18s serial %8.3fs   parallel %8.3fs   x%.2f  (%d workers)\n", name, serial,
              parallel, parallel > 0.0 ? serial / parallel : 0.0, workers);
}

}  // namespace

int main(int argc, char** argv) {
  int items = 200;
  int workers = 0;
  int r = 5;
  std::uint64_t seed = 1;

  CLI::App app{"serial versus parallel kernel timings"};
  app.add_option("--items", items, "instances per kernel");
  app.add_option("--seed", seed, "corpus seed");
  app.add_option("--workers", workers, "thread count (0 = default)");
  app.add_option("--r", r, "expansion length for sequence claims");
  CLI11_PARSE(app, argc, argv);

  int w = worker_count(workers);
  std::printf("items %d, seed %llu, workers %d\n", items,
              static_cast<unsigned long long>(seed), w);

  Rng rng(seed);
  std::vector<SplitInstance> splits;
  splits.reserve(static_cast<std::size_t>(items));
  while (static_cast<int>(splits.size()) < items)
    if (auto si = random_split_instance(rng, Deadline::never())) splits.push_back(std::move(*si));

  report("absorption",
         seconds([&] {
           for (const auto& si : splits) validate_ramseyan(si.tree, si.split);
         }),
         seconds([&] {
           for (const auto& si : splits) validate_ramseyan_parallel(si.tree, si.split, workers);
         }),
         w);

  report("fast-product",
         seconds([&] {
           for (const auto& si : splits) check_fast_tlbl(si.tree, si.split);
         }),
         seconds([&] {
           for (const auto& si : splits) check_fast_tlbl_parallel(si.tree, si.split, workers);
         }),
         w);

  std::vector<MarkedPairInstance> pairs;
  pairs.reserve(static_cast<std::size_t>(items));
  while (static_cast<int>(pairs.size()) < items)
    if (auto mp = random_marked_pair(rng, 12, Deadline::never())) pairs.push_back(std::move(*mp));

  report("marked-pairs", seconds([&] { check_marked_pairs(pairs); }),
         seconds([&] { check_marked_pairs_parallel(pairs, workers); }), w);

  std::vector<RegularSequence> seqs;
  seqs.reserve(static_cast<std::size_t>(items));
  for (int i = 0; i < items; ++i) seqs.push_back(random_sequence(rng, 6));

  report("arrow-claims", seconds([&] { check_sequence_claims(seqs, r); }),
         seconds([&] { check_sequence_claims_parallel(seqs, r, workers); }), w);

  return 0;
}
