#include <gtest/gtest.h>

#include "wheelfree/generators.hpp"
#include "wheelfree/graph.hpp"
#include "wheelfree/pool.hpp"

namespace wheelfree {
namespace {

TEST(VertexSet, BasicAlgebra) {
  VertexSet a(10, {0, 3, 5});
  VertexSet b(10, {3, 4});
  EXPECT_EQ(a.size(), 3u);
  EXPECT_TRUE(a.contains(3));
  EXPECT_FALSE(a.contains(11));
  EXPECT_EQ((a | b).to_string(), "{0, 3, 4, 5}");
  EXPECT_EQ((a & b).to_string(), "{3}");
  EXPECT_EQ((a - b).to_string(), "{0, 5}");
  EXPECT_TRUE(a.intersects(b));
  EXPECT_TRUE(VertexSet(10, {3}).is_subset_of(a));
  EXPECT_EQ(a.first(), 0);
  EXPECT_EQ(a.next(0), 3);
  EXPECT_EQ(a.next(5), VertexSet::npos);
  EXPECT_THROW(a.insert(10), std::out_of_range);
  EXPECT_THROW(a |= VertexSet(9), std::invalid_argument);
}

TEST(VertexSet, WideUniverse) {
  VertexSet s(130, {1, 64, 129});
  EXPECT_EQ(s.to_vector(), (std::vector<Vertex>{1, 64, 129}));
  s.erase(64);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_THROW((void)s.mask(), std::logic_error);
}

TEST(VertexSet, LexicographicOrder) {
  EXPECT_LT(VertexSet(5, {0, 4}), VertexSet(5, {1}));
  EXPECT_LT(VertexSet(5, {0}), VertexSet(5, {0, 1}));
  EXPECT_FALSE(VertexSet(5, {2}) < VertexSet(5, {2}));
}

TEST(Graph, BuilderRejectsLoopsAndCollapsesDuplicates) {
  GraphBuilder b(3);
  EXPECT_TRUE(b.add_edge(0, 1));
  EXPECT_FALSE(b.add_edge(1, 0));
  EXPECT_THROW(b.add_edge(2, 2), std::invalid_argument);
  EXPECT_THROW(b.add_edge(0, 3), std::out_of_range);
  Graph g = b.build();
  EXPECT_EQ(g.size(), 1u);
  EXPECT_TRUE(g.adjacent(1, 0));
}

TEST(Graph, InducedSubgraphOfK4) {
  auto sub = induced_subgraph(complete(4), VertexSet(4, {0, 1, 2}));
  EXPECT_EQ(sub.graph, complete(3));
  EXPECT_EQ(sub.to_original, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(sub.to_local[3], -1);
}

TEST(Graph, InducedSubgraphOfC5KeepsOnlyEdgeFourZero) {
  auto sub = induced_subgraph(cycle_graph(5), VertexSet(5, {0, 2, 4}));
  ASSERT_EQ(sub.graph.order(), 3);
  ASSERT_EQ(sub.graph.size(), 1u);
  EXPECT_TRUE(sub.graph.adjacent(sub.to_local[0], sub.to_local[4]));
}

TEST(Graph, InducedSubgraphOnAllVerticesIsIdentity) {
  Graph g = petersen();
  auto sub = induced_subgraph(g, g.vertices());
  EXPECT_EQ(sub.graph, g);
  for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(sub.to_original[static_cast<std::size_t>(v)], v);
}

TEST(Graph, InducedSubgraphPreservesAdjacency) {
  for (std::uint64_t bits = 0; bits < (1U << 10); bits += 7) {
    Graph g = graph_from_bits(5, bits);
    for (std::uint64_t keep = 0; keep < 32; ++keep) {
      auto sub = induced_subgraph(g, VertexSet::from_mask(5, keep));
      for (Vertex a = 0; a < sub.graph.order(); ++a) {
        for (Vertex b = 0; b < sub.graph.order(); ++b) {
          if (a == b) continue;
          EXPECT_EQ(sub.graph.adjacent(a, b),
                    g.adjacent(sub.to_original[static_cast<std::size_t>(a)], sub.to_original[static_cast<std::size_t>(b)]));
        }
      }
    }
  }
}

TEST(Graph, NeighborhoodAndFrontier) {
  Graph c5 = cycle_graph(5);
  EXPECT_EQ(neighborhood(c5, VertexSet(5, {0})), VertexSet(5, {1, 4}));
  EXPECT_EQ(frontier_complement(c5, VertexSet(5, {0})), VertexSet(5, {2, 3}));
  Graph k4 = complete(4);
  EXPECT_EQ(neighborhood(k4, VertexSet(4, {0})), VertexSet(4, {1, 2, 3}));
  EXPECT_TRUE(frontier_complement(k4, VertexSet(4, {0})).empty());
  Graph p3 = path_graph(3);
  EXPECT_EQ(neighborhood(p3, VertexSet(3, {0})), VertexSet(3, {1}));
  EXPECT_EQ(frontier_complement(p3, VertexSet(3, {0})), VertexSet(3, {2}));
}

TEST(Graph, NeighborhoodPartitionsVertices) {
  for (std::uint64_t bits = 0; bits < (1U << 10); bits += 3) {
    Graph g = graph_from_bits(5, bits);
    for (std::uint64_t f = 0; f < 32; ++f) {
      VertexSet fs = VertexSet::from_mask(5, f);
      VertexSet nf = neighborhood(g, fs);
      VertexSet bar = frontier_complement(g, fs);
      EXPECT_FALSE(fs.intersects(nf));
      EXPECT_FALSE(fs.intersects(bar));
      EXPECT_FALSE(nf.intersects(bar));
      EXPECT_EQ(fs | nf | bar, g.vertices());
      for (Vertex u : fs) EXPECT_FALSE(g.neighbors(u).intersects(bar));
    }
  }
}

TEST(Graph, Components) {
  Graph g = Graph::from_edges(6, {{0, 1}, {2, 3}, {3, 4}});
  auto comps = components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], VertexSet(6, {0, 1}));
  EXPECT_EQ(comps[1], VertexSet(6, {2, 3, 4}));
  EXPECT_EQ(comps[2], VertexSet(6, {5}));
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(cycle_graph(4)));
  EXPECT_EQ(describe(path_graph(3)), "n=3 edges=[0-1 1-2]");
}

TEST(Generators, StandardConstructions) {
  EXPECT_EQ(complete_bipartite(4).size(), 16u);
  EXPECT_EQ(complete(4).size(), 6u);
  EXPECT_EQ(petersen().size(), 15u);
  EXPECT_EQ(icosahedron().size(), 30u);
  EXPECT_EQ(icosahedron().min_degree(), 5);
  EXPECT_EQ(icosahedron().max_degree(), 5);
  EXPECT_EQ(octahedron().size(), 12u);
  EXPECT_THROW(complete(-1), std::invalid_argument);
  EXPECT_FALSE(named_graph("nonsense", 4).has_value());
}

TEST(Generators, TightExampleK4) {
  Graph g = tight_example(4);
  ASSERT_EQ(g.order(), 7);
  auto expected = Graph::from_edges(7, {{0, 1}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}, {0, 5}, {1, 5}, {5, 6}, {2, 6}, {3, 6}});
  EXPECT_EQ(g, expected);
  EXPECT_EQ(tight_example(5).order(), 9);
  EXPECT_THROW(tight_example(3), std::invalid_argument);
}

}  // namespace
}  // namespace wheelfree
