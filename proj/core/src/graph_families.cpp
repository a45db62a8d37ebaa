#include <functional>
#include <queue>
#include <random>

#include "indseq/error.hpp"
#include "indseq/graph.hpp"

namespace indseq {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw GraphError(what);
}

// Appends a copy of h to out and returns the offset of its vertex 0.
int append_copy(Graph& out, const Graph& h) {
  const int off = out.vertex_count();
  for (int i = 0; i < h.vertex_count(); ++i) out.add_vertex();
  for (const auto& [u, v] : h.edges()) out.add_edge(u + off, v + off);
  return off;
}

void add_leaves(Graph& g, int at, int count) {
  for (int i = 0; i < count; ++i) g.add_edge(at, g.add_vertex());
}

}  // namespace

Graph path(int k) {
  require(k >= 0, "path: negative size");
  Graph g(k);
  for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph star(int leaves) {
  require(leaves >= 0, "star: negative size");
  Graph g(1);
  add_leaves(g, 0, leaves);
  return g;
}

Graph complete_graph(int n) {
  require(n >= 0, "complete_graph: negative size");
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph cycle(int n) {
  require(n >= 3, "cycle: needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

MarkedGraph double_star(int l1, int l2) {
  require(l1 >= 0 && l2 >= 0, "double_star: negative size");
  Graph g(2);
  g.add_edge(0, 1);
  add_leaves(g, 0, l1);
  add_leaves(g, 1, l2);
  return {std::move(g), 0, 1};
}

Graph centipede(int n) {
  require(n >= 0, "centipede: negative size");
  return caterpillar(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Graph caterpillar(const std::vector<int>& pendants) {
  const int n = static_cast<int>(pendants.size());
  Graph g = path(n);
  for (int i = 0; i < n; ++i) {
    require(pendants[i] >= 0, "caterpillar: negative pendant count");
    add_leaves(g, i, pendants[i]);
  }
  return g;
}

Graph spider(const std::vector<int>& legs) {
  Graph g(1);
  for (int len : legs) {
    require(len >= 0, "spider: negative leg length");
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      const int next = g.add_vertex();
      g.add_edge(prev, next);
      prev = next;
    }
  }
  return g;
}

MarkedGraph marked_path(int k) {
  require(k >= 2, "marked_path: needs k >= 2");
  return {path(k), 1, 0};
}

Graph concat_one(const MarkedGraph& g, int n) {
  g.validate(false);
  require(n >= 1, "concat_one: n must be at least 1");
  Graph out;
  int prev = -1;
  for (int i = 0; i < n; ++i) {
    const int off = append_copy(out, g.graph);
    if (prev >= 0) out.add_edge(prev, off + g.v);
    prev = off + g.v;
  }
  return out;
}

Graph concat_two(const MarkedGraph& g, int n) {
  g.validate(true);
  require(n >= 0, "concat_two: negative n");
  Graph out;
  int prev_w = -1;
  for (int i = 0; i < n; ++i) {
    const int off = append_copy(out, g.graph);
    if (prev_w >= 0) out.add_edge(prev_w, off + g.v);
    prev_w = off + *g.w;
  }
  return out;
}

Graph rooted_product(const Graph& g, const MarkedGraph& h) {
  h.validate(false);
  Graph out;
  std::vector<int> root(static_cast<std::size_t>(g.vertex_count()));
  for (int i = 0; i < g.vertex_count(); ++i) root[i] = append_copy(out, h.graph) + h.v;
  for (const auto& [a, b] : g.edges()) out.add_edge(root[a], root[b]);
  return out;
}

Graph delete_closed_neighborhood(const Graph& g, int a) {
  const auto& nb = g.neighbors(a);
  std::vector<char> gone(static_cast<std::size_t>(g.vertex_count()), 0);
  gone[a] = 1;
  for (int u : nb) gone[u] = 1;
  std::vector<int> keep;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (!gone[u]) keep.push_back(u);
  }
  return g.induced(keep);
}

Graph delete_vertex(const Graph& g, int a) {
  require(g.valid_vertex(a), "delete_vertex: vertex out of range");
  std::vector<int> keep;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (u != a) keep.push_back(u);
  }
  return g.induced(keep);
}

Graph attach_pendants(const Graph& g, int v, int n) {
  require(g.valid_vertex(v), "attach_pendants: vertex out of range");
  require(n >= 0, "attach_pendants: negative count");
  Graph out = g;
  add_leaves(out, v, n);
  return out;
}

Graph attach_pendant_star_via_leaf(const Graph& g, int v, int n) {
  require(g.valid_vertex(v), "attach_pendant_star_via_leaf: vertex out of range");
  require(n >= 1, "attach_pendant_star_via_leaf: n must be at least 1");
  Graph out = g;
  const int w = out.add_vertex();
  out.add_edge(v, w);
  add_leaves(out, w, n - 1);
  return out;
}

Graph attach_pendants_everywhere(const Graph& g, int k) {
  require(k >= 0, "attach_pendants_everywhere: negative count");
  Graph out = g;
  for (int v = 0; v < g.vertex_count(); ++v) add_leaves(out, v, k);
  return out;
}

MarkedGraph fibonacci_tree(int n) {
  require(n >= 0, "fibonacci_tree: negative index");
  std::vector<Graph> f;
  f.push_back(Graph(1));
  f.push_back(path(2));
  for (int i = 2; i <= n; ++i) {
    Graph g(1);
    const int a = append_copy(g, f[i - 1]);
    const int b = append_copy(g, f[i - 2]);
    g.add_edge(0, a);
    g.add_edge(0, b);
    f.push_back(std::move(g));
  }
  return {f[static_cast<std::size_t>(n)], 0, std::nullopt};
}

Graph random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "random_tree: n must be at least 1");
  if (n == 1) return Graph(1);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (auto& c : code) c = pick(rng);

  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int c : code) ++degree[c];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  Graph g(n);
  for (int c : code) {
    const int leaf = leaves.top();
    leaves.pop();
    g.add_edge(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  const int u = leaves.top();
  leaves.pop();
  g.add_edge(u, leaves.top());
  return g;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  require(n >= 0, "random_graph: negative size");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace indseq
