#include "indseq/scans.hpp"

#include <cstdlib>

namespace indseq {

int default_jobs() {
  if (const char* env = std::getenv("INDSEQ_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<Graph> tree_corpus(int max_vertices) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_vertices; ++n) {
    auto trees = enumerate_trees(n);
    out.insert(out.end(), std::make_move_iterator(trees.begin()), std::make_move_iterator(trees.end()));
  }
  return out;
}

TreeScanRow analyze_tree(std::uint64_t index, std::uint64_t seed, Graph tree, Engine engine) {
  TreeScanRow row;
  row.index = index;
  row.seed = seed;
  row.poly = indpoly(tree, engine).poly;
  row.verdict = analyze(row.poly);
  row.final_third = final_third_decreasing(row.poly);
  row.tree = std::move(tree);
  return row;
}

void random_tree_scan(int n, std::uint64_t count, std::uint64_t seed, int jobs, std::uint64_t start,
                      const std::function<void(const TreeScanRow&)>& sink, Engine engine) {
  ordered_scan<TreeScanRow>(
      start, count, jobs,
      [&](std::size_t i) {
        const std::uint64_t s = derive_seed(seed, i);
        return analyze_tree(i, s, random_tree(n, s), engine);
      },
      sink);
}

EngineAgreement engine_agreement(const std::vector<Graph>& graphs, int jobs) {
  EngineAgreement out;
  out.graphs = graphs.size();
  std::vector<char> bad(graphs.size(), 0);
  parallel_for(graphs.size(), jobs, [&](std::size_t i) {
    const Graph& g = graphs[i];
    const IntPoly del = indpoly_deletion(g).poly;
    bool ok = indpoly_bruteforce(g).poly == del;
    if (g.is_forest()) ok = ok && indpoly_tree_dp(g).poly == del;
    bad[i] = !ok;
  });
  for (std::size_t i = 0; i < bad.size(); ++i) {
    if (bad[i]) out.mismatches.push_back(i);
  }
  return out;
}

}  // namespace indseq
