#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "indseq/error.hpp"
#include "indseq/graph.hpp"
#include "oracles.hpp"

using namespace indseq;

namespace {

oracle::Edges edges_of(const Graph& g) {
  oracle::Edges out;
  for (const auto& [u, v] : g.edges()) out.emplace_back(u, v);
  return out;
}

}  // namespace

TEST(Graph, FromEdgeList) {
  EXPECT_EQ(Graph::from_edge_list(1, {}).vertex_count(), 1);
  EXPECT_EQ(Graph::from_edge_list(1, {}).edge_count(), 0);
  const Graph k2 = Graph::from_edge_list(2, {{0, 1}});
  EXPECT_TRUE(k2.adjacent(0, 1));
  const Graph p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_TRUE(isomorphic(p4, path(4)));
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph::from_edge_list(2, {{0, 2}}), GraphError);
  EXPECT_THROW(Graph::from_edge_list(2, {{0, 1}, {1, 0}}), GraphError);
  EXPECT_THROW(Graph::from_edge_list(2, {{1, 1}}), GraphError);
}

TEST(Graph, EdgeListRoundTrip) {
  const Graph g = random_graph(9, 0.4, 3);
  std::istringstream in(to_edge_list_text(g));
  EXPECT_EQ(parse_edge_list(in), g);
  std::istringstream bad("3 2\n0 1\n");
  EXPECT_THROW(parse_edge_list(bad), GraphError);
  // A missing edge count must not be read as "no edges".
  std::istringstream no_count("3\n0 1\n1 2\n");
  EXPECT_THROW(parse_edge_list(no_count), GraphError);
}

TEST(Families, Sizes) {
  EXPECT_EQ(path(4).vertex_count(), 4);
  EXPECT_EQ(path(4).edge_count(), 3);
  EXPECT_EQ(path(0).vertex_count(), 0);
  EXPECT_EQ(centipede(8).vertex_count(), 16);
  const MarkedGraph s12 = double_star(1, 2);
  EXPECT_EQ(s12.graph.vertex_count(), 5);
  EXPECT_EQ(s12.graph.degree(s12.v), 2);
  EXPECT_EQ(s12.graph.degree(*s12.w), 3);
  EXPECT_TRUE(s12.graph.adjacent(s12.v, *s12.w));
  const Graph cat = caterpillar({2, 0, 3});
  EXPECT_EQ(cat.vertex_count(), 8);
  EXPECT_TRUE(cat.is_tree());
  const Graph sp = spider({1, 2, 3});
  EXPECT_EQ(sp.vertex_count(), 7);
  EXPECT_EQ(sp.degree(0), 3);
}

TEST(Families, ConcatOne) {
  const MarkedGraph k2{path(2), 0, std::nullopt};
  const Graph c = concat_one(k2, 3);
  EXPECT_EQ(c.vertex_count(), 6);
  EXPECT_TRUE(c.is_tree());
  EXPECT_EQ(concat_one(MarkedGraph{path(5), 2, std::nullopt}, 1), path(5));
  EXPECT_TRUE(isomorphic(concat_one(MarkedGraph{Graph(1), 0, std::nullopt}, 5), path(5)));
  EXPECT_THROW(concat_one(k2, 0), GraphError);
}

TEST(Families, ConcatTwo) {
  EXPECT_TRUE(isomorphic(concat_two(MarkedGraph{path(2), 0, 1}, 2), path(4)));
  const Graph fig2 = concat_two(marked_path(3), 4);
  EXPECT_EQ(fig2.vertex_count(), 12);
  EXPECT_TRUE(fig2.is_tree());
  const Graph fig3 = concat_two(double_star(1, 2), 4);
  EXPECT_EQ(fig3.vertex_count(), 20);
  EXPECT_TRUE(fig3.is_tree());
  EXPECT_EQ(concat_two(double_star(1, 2), 0).vertex_count(), 0);
  EXPECT_THROW(concat_two(MarkedGraph{path(3), 0, 2}, 2), GraphError);
}

TEST(Families, ConcatTwoCounts) {
  const std::vector<MarkedGraph> bases = {double_star(2, 3), marked_path(6), MarkedGraph{cycle(5), 0, 1},
                                          MarkedGraph{complete_graph(4), 1, 2}};
  for (const auto& g : bases) {
    for (int n = 1; n <= 5; ++n) {
      const Graph c = concat_two(g, n);
      EXPECT_EQ(c.vertex_count(), n * g.graph.vertex_count());
      EXPECT_EQ(c.edge_count(), n * g.graph.edge_count() + (n - 1));
      EXPECT_EQ(c.is_tree(), g.graph.is_tree());
    }
  }
}

TEST(Families, RootedProduct) {
  const MarkedGraph h{star(2), 0, std::nullopt};
  EXPECT_EQ(rooted_product(Graph(1), h), h.graph);
  for (int n = 1; n <= 9; ++n) {
    EXPECT_TRUE(isomorphic(rooted_product(path(n), MarkedGraph{path(2), 0, std::nullopt}), centipede(n)));
  }
  const Graph k2p3 = rooted_product(path(2), h);
  EXPECT_EQ(k2p3.vertex_count(), 6);
  EXPECT_TRUE(k2p3.is_tree());
}

TEST(Families, ClosedNeighborhood) {
  EXPECT_EQ(delete_closed_neighborhood(path(4), 1).vertex_count(), 1);
  EXPECT_EQ(delete_closed_neighborhood(path(2), 0).vertex_count(), 0);
  EXPECT_EQ(delete_closed_neighborhood(star(3), 0).vertex_count(), 0);
  EXPECT_THROW(delete_closed_neighborhood(path(3), 5), GraphError);
  // Stable relabeling: survivors keep their relative order.
  const Graph g = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {2, 3}});
  const Graph r = delete_closed_neighborhood(g, 1);
  EXPECT_EQ(r.vertex_count(), 3);
  EXPECT_TRUE(r.adjacent(0, 1));
  EXPECT_TRUE(r.adjacent(1, 2));
}

TEST(Families, Pendants) {
  EXPECT_TRUE(isomorphic(attach_pendants(Graph(1), 0, 4), star(4)));
  EXPECT_TRUE(isomorphic(attach_pendant_star_via_leaf(Graph(1), 0, 1), path(2)));
  const Graph g = attach_pendants_everywhere(path(3), 2);
  EXPECT_EQ(g.vertex_count(), 9);
  EXPECT_EQ(g.degree(1), 4);
  // Growing a caterpillar one vertex at a time.
  const Graph prefix = caterpillar({2, 1});
  const Graph grown = attach_pendant_star_via_leaf(prefix, 1, 3 + 1);
  EXPECT_TRUE(isomorphic(grown, caterpillar({2, 1, 3})));
}

TEST(Families, Fibonacci) {
  EXPECT_EQ(fibonacci_tree(0).graph.vertex_count(), 1);
  EXPECT_TRUE(isomorphic(fibonacci_tree(1).graph, path(2)));
  const MarkedGraph f2 = fibonacci_tree(2);
  EXPECT_EQ(f2.graph.vertex_count(), 4);
  EXPECT_EQ(f2.graph.edge_count(), 3);
  EXPECT_TRUE(isomorphic(f2.graph, path(4)));
  EXPECT_EQ(f2.graph.degree(f2.v), 2);
  int a = 1, b = 2;
  for (int n = 2; n <= 12; ++n) {
    const int c = a + b + 1;
    EXPECT_EQ(fibonacci_tree(n).graph.vertex_count(), c);
    a = b;
    b = c;
  }
}

TEST(Families, RandomTree) {
  EXPECT_EQ(random_tree(1, 5).vertex_count(), 1);
  EXPECT_TRUE(isomorphic(random_tree(2, 5), path(2)));
  EXPECT_EQ(random_tree(8, 42), random_tree(8, 42));
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Graph t = random_tree(2 + static_cast<int>(s % 30), s);
    EXPECT_TRUE(t.is_connected());
    EXPECT_TRUE(t.is_forest());
  }
}

TEST(Isomorphism, TreeCountsMatchPruferClasses) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(enumerate_trees(n).size(), oracle::count_unlabeled_trees(n)) << n;
  }
  EXPECT_EQ(enumerate_trees(10).size(), 106u);
}

TEST(Isomorphism, CanonicalKeyInvariantUnderRelabeling) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const Graph g = random_graph(8, 0.45, rng());
    std::vector<int> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    const Graph h = Graph::from_edge_list(8, edges);
    EXPECT_EQ(canonical_key(g), canonical_key(h));
  }
  EXPECT_FALSE(isomorphic(path(4), star(3)));
  EXPECT_FALSE(isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3))));
}

TEST(Isomorphism, ForestFormAgreesWithOracle) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const Graph a = random_tree(n, rng());
    const Graph b = random_tree(n, rng());
    const bool same = oracle::tree_code(n, edges_of(a)) == oracle::tree_code(n, edges_of(b));
    EXPECT_EQ(forest_canonical_form(a) == forest_canonical_form(b), same);
  }
}
