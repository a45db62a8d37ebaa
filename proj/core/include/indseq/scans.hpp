#pragma once

// Batch scans over tree corpora and random trees, with a small ordered
// work-sharing helper used by the CLI.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "indseq/graph.hpp"
#include "indseq/indpoly.hpp"
#include "indseq/sequence.hpp"

namespace indseq {

/// INDSEQ_JOBS if set to a positive integer, else the hardware thread count.
int default_jobs();

/// Runs body(i) for i in [0, count) on up to `jobs` threads. The first
/// exception thrown by any task is rethrown after all workers stop.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body);

/// Computes make(i) for i in [begin, end) in parallel chunks and hands the
/// results to sink strictly in index order, one chunk at a time.
template <typename Row>
void ordered_scan(std::size_t begin, std::size_t end, int jobs, const std::function<Row(std::size_t)>& make,
                  const std::function<void(const Row&)>& sink) {
  const std::size_t chunk = std::max<std::size_t>(16, static_cast<std::size_t>(std::max(jobs, 1)) * 8);
  for (std::size_t lo = begin; lo < end; lo += chunk) {
    const std::size_t hi = std::min(end, lo + chunk);
    std::vector<std::optional<Row>> rows(hi - lo);
    parallel_for(hi - lo, jobs, [&](std::size_t i) { rows[i].emplace(make(lo + i)); });
    for (auto& r : rows) sink(*r);
  }
}

/// splitmix64 of base mixed with index; independent per-instance seeds.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// All non-isomorphic trees with 1..max_vertices vertices.
std::vector<Graph> tree_corpus(int max_vertices);

struct TreeScanRow {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  Graph tree;
  IntPoly poly;
  SequenceVerdict verdict;
  FinalThirdResult final_third;
};

TreeScanRow analyze_tree(std::uint64_t index, std::uint64_t seed, Graph tree, Engine engine = Engine::kAuto);

/// Rows for random_tree(n, derive_seed(seed, i)), i in [start, count), in order.
void random_tree_scan(int n, std::uint64_t count, std::uint64_t seed, int jobs, std::uint64_t start,
                      const std::function<void(const TreeScanRow&)>& sink, Engine engine = Engine::kAuto);

struct EngineAgreement {
  std::size_t graphs = 0;
  std::vector<std::size_t> mismatches;
};

/// Brute force, tree DP (forests only) and deletion compared on every graph.
EngineAgreement engine_agreement(const std::vector<Graph>& graphs, int jobs);

}  // namespace indseq
