#pragma once

// Simple undirected graphs and the tree constructions built on them.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace indseq {

using Edge = std::pair<int, int>;

/// Labeled simple graph on vertices 0..n-1. Neighbor lists stay sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Throws GraphError on out-of-range endpoints, loops or duplicate edges.
  static Graph from_edge_list(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return adj_.empty(); }

  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(int u, int v) const;
  bool valid_vertex(int v) const { return v >= 0 && v < vertex_count(); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  int add_vertex();
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Connected components, each listed in ascending vertex order; components
  /// ordered by their smallest vertex.
  std::vector<std::vector<int>> components() const;
  bool is_connected() const;
  bool is_forest() const;
  bool is_tree() const { return vertex_count() > 0 && is_forest() && is_connected(); }

  /// Subgraph induced on `keep` (ascending); vertex keep[i] becomes i.
  Graph induced(const std::vector<int>& keep) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<int>> adj_;
  std::size_t edge_count_ = 0;
};

/// A graph with one or two distinguished vertices.
struct MarkedGraph {
  Graph graph;
  int v = 0;
  std::optional<int> w;

  /// Throws GraphError if the marks are invalid, or if `need_w` and w is
  /// missing or not adjacent to v.
  void validate(bool need_w) const;
};

Graph disjoint_union(const Graph& a, const Graph& b);

/// "n m" followed by m lines "u v".
std::string to_edge_list_text(const Graph& g);
Graph parse_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

// --- families -------------------------------------------------------------

Graph path(int k);
Graph star(int leaves);
Graph complete_graph(int n);
Graph cycle(int n);
/// Adjacent v = 0 and w = 1; v carries l1 pendant vertices, w carries l2.
MarkedGraph double_star(int l1, int l2);
/// Path on n vertices with one pendant edge at each of them.
Graph centipede(int n);
/// Path v_1..v_n with k_i pendant edges at v_i.
Graph caterpillar(const std::vector<int>& pendants);
/// Center 0 with one path per entry of `legs` (entry = number of vertices in the leg).
Graph spider(const std::vector<int>& legs);
/// P_k with w = 0 (a leaf) and v = 1 its neighbor; requires k >= 2.
MarkedGraph marked_path(int k);

/// n copies of g.graph with the marked vertices of consecutive copies joined.
Graph concat_one(const MarkedGraph& g, int n);
/// G^n(v, w): n copies with w_i joined to v_{i+1}; n = 0 gives the empty graph.
Graph concat_two(const MarkedGraph& g, int n);
/// |V(g)| copies of h.graph whose marked vertices are wired as g.
Graph rooted_product(const Graph& g, const MarkedGraph& h);

/// G - N[a], with the surviving vertices relabeled in increasing order.
Graph delete_closed_neighborhood(const Graph& g, int a);
Graph delete_vertex(const Graph& g, int a);

/// G^1_n: n new leaves at v.
Graph attach_pendants(const Graph& g, int v, int n);
/// G^2_n: a new neighbor w of v carrying n - 1 new leaves.
Graph attach_pendant_star_via_leaf(const Graph& g, int v, int n);
/// G_k: k new leaves at every vertex.
Graph attach_pendants_everywhere(const Graph& g, int k);

/// F_0 = K_1, F_1 = K_2, F_n = new root joined to the roots of F_{n-1}, F_{n-2}.
MarkedGraph fibonacci_tree(int n);

/// Uniform labeled tree on n vertices from a seeded Prüfer sequence.
Graph random_tree(int n, std::uint64_t seed);
/// Erdős–Rényi G(n, p) with a seeded generator.
Graph random_graph(int n, double p, std::uint64_t seed);

// --- isomorphism ----------------------------------------------------------

/// Canonical string for a forest, invariant under relabeling.
std::string forest_canonical_form(const Graph& g);

/// Canonical adjacency key for small graphs, or nullopt when the search tree
/// would exceed `leaf_budget` leaves.
std::optional<std::string> canonical_key(const Graph& g, std::size_t leaf_budget = 20000);

/// Labeled adjacency signature (not isomorphism invariant).
std::string labeled_key(const Graph& g);

/// Isomorphism test; throws BudgetExceeded if the canonical search gives up.
bool isomorphic(const Graph& a, const Graph& b);

/// Every non-isomorphic tree on n vertices (n >= 1), in a fixed order.
std::vector<Graph> enumerate_trees(int n);

}  // namespace indseq
