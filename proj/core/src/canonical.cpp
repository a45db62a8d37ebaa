#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "indseq/error.hpp"
#include "indseq/graph.hpp"

namespace indseq {

namespace {

// AHU encoding of the subtree below `root`, with `parent` excluded.
std::string encode_rooted(const Graph& g, int root, int parent) {
  std::vector<std::string> kids;
  for (int c : g.neighbors(root)) {
    if (c != parent) kids.push_back(encode_rooted(g, c, root));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ')';
  return out;
}

// Centers of the tree spanned by `comp`, by repeatedly peeling leaves.
std::vector<int> tree_centers(const Graph& g, const std::vector<int>& comp) {
  if (comp.size() <= 2) return comp;
  std::map<int, int> deg;
  std::vector<int> layer;
  for (int v : comp) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = comp.size();
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<int> next;
    for (int leaf : layer) {
      for (int u : g.neighbors(leaf)) {
        if (--deg[u] == 1) next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::vector<int> refine(const Graph& g, std::vector<int> colors) {
  const int n = g.vertex_count();
  int cells = static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[v].first;
      s.push_back(colors[v]);
      std::vector<int> nc;
      for (int u : g.neighbors(v)) nc.push_back(colors[u]);
      std::sort(nc.begin(), nc.end());
      s.insert(s.end(), nc.begin(), nc.end());
      sig[v].second = v;
    }
    std::sort(sig.begin(), sig.end());
    std::vector<int> next(static_cast<std::size_t>(n));
    int rank = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[i].first != sig[i - 1].first) rank = i;
      next[sig[i].second] = rank;
    }
    const int now = static_cast<int>(std::set<int>(next.begin(), next.end()).size());
    colors = std::move(next);
    if (now == cells) return colors;
    cells = now;
  }
}

bool are_twins(const Graph& g, int a, int b) {
  std::vector<int> na;
  std::vector<int> nb;
  for (int u : g.neighbors(a)) {
    if (u != b) na.push_back(u);
  }
  for (int u : g.neighbors(b)) {
    if (u != a) nb.push_back(u);
  }
  return na == nb;
}

struct CanonSearch {
  const Graph& g;
  std::size_t budget;
  std::size_t leaves = 0;
  std::optional<std::string> best;
  bool gave_up = false;

  std::string certificate(const std::vector<int>& pos) const {
    const int n = g.vertex_count();
    std::vector<int> at(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) at[pos[v]] = v;
    std::string bits;
    bits.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) bits.push_back(g.adjacent(at[i], at[j]) ? '1' : '0');
    }
    return bits;
  }

  void run(const std::vector<int>& start) {
    if (gave_up) return;
    const std::vector<int> colors = refine(g, start);
    const int n = g.vertex_count();
    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < n; ++v) cells[colors[v]].push_back(v);
    const std::vector<int>* target = nullptr;
    for (const auto& [c, members] : cells) {
      if (members.size() > 1) {
        target = &members;
        break;
      }
    }
    if (target == nullptr) {
      if (++leaves > budget) {
        gave_up = true;
        return;
      }
      std::string cert = certificate(colors);
      if (!best || cert < *best) best = std::move(cert);
      return;
    }
    std::vector<int> tried;
    for (int u : *target) {
      bool twin = false;
      for (int t : tried) {
        if (are_twins(g, t, u)) {
          twin = true;
          break;
        }
      }
      if (twin) continue;
      tried.push_back(u);
      std::vector<int> next(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) next[v] = 2 * colors[v] + 1;
      next[u] = 2 * colors[u];
      run(next);
      if (gave_up) return;
    }
  }
};

}  // namespace

std::string forest_canonical_form(const Graph& g) {
  if (!g.is_forest()) throw GraphError("forest_canonical_form: graph has a cycle");
  std::vector<std::string> parts;
  for (const auto& comp : g.components()) {
    std::string best;
    for (int c : tree_centers(g, comp)) {
      std::string code = encode_rooted(g, c, -1);
      if (best.empty() || code < best) best = std::move(code);
    }
    parts.push_back(std::move(best));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += p;
  return out;
}

std::optional<std::string> canonical_key(const Graph& g, std::size_t leaf_budget) {
  const int n = g.vertex_count();
  if (n == 0) return std::string("0:");
  CanonSearch search{g, leaf_budget, 0, std::nullopt, false};
  search.run(std::vector<int>(static_cast<std::size_t>(n), 0));
  if (search.gave_up) return std::nullopt;
  return std::to_string(n) + ":" + *search.best;
}

std::string labeled_key(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << '|';
  for (const auto& [u, v] : g.edges()) os << u << ',' << v << ';';
  return os.str();
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (a.is_forest() && b.is_forest()) return forest_canonical_form(a) == forest_canonical_form(b);
  const auto ka = canonical_key(a, 1000000);
  const auto kb = canonical_key(b, 1000000);
  if (!ka || !kb) throw BudgetExceeded("isomorphic: canonical search budget exhausted");
  return *ka == *kb;
}

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1) throw GraphError("enumerate_trees: n must be at least 1");
  std::vector<Graph> level{Graph(1)};
  for (int m = 2; m <= n; ++m) {
    std::vector<Graph> next;
    std::set<std::string> seen;
    for (const auto& t : level) {
      for (int v = 0; v < t.vertex_count(); ++v) {
        Graph grown = attach_pendants(t, v, 1);
        if (seen.insert(forest_canonical_form(grown)).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace indseq
