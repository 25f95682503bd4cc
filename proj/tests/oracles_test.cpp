#include <gtest/gtest.h>

#include <set>

#include "wheelfree/connectivity.hpp"
#include "wheelfree/generators.hpp"
#include "wheelfree/graph_io.hpp"
#include "wheelfree/oracles.hpp"
#include "wheelfree/pool.hpp"
#include "wheelfree/wheels.hpp"

namespace wheelfree {
namespace {

TEST(Oracles, ChromaticNumber) {
  EXPECT_EQ(oracles::brute_chromatic_number(complete(4)), 4);
  EXPECT_EQ(oracles::brute_chromatic_number(cycle_graph(5)), 3);
  EXPECT_EQ(oracles::brute_chromatic_number(tight_example(4)), 4);
  EXPECT_EQ(oracles::brute_chromatic_number(petersen()), 3);
  EXPECT_EQ(oracles::brute_chromatic_number(Graph(3)), 1);
  EXPECT_THROW(oracles::brute_chromatic_number(Graph(13)), BudgetExceeded);
}

TEST(Oracles, Wheels) {
  auto w = oracles::brute_has_k_wheel(complete(5), 4);
  ASSERT_TRUE(w.has_value());
  EXPECT_FALSE(check_wheel(complete(5), *w, 4).has_value());
  EXPECT_FALSE(oracles::brute_has_k_wheel(complete_bipartite(4), 4).has_value());
  EXPECT_FALSE(oracles::brute_has_k_wheel(petersen(), 4).has_value());
}

TEST(Oracles, CycleCounts) {
  long count = 0;
  oracles::enumerate_cycles(complete(4), [&](const Cycle&, std::uint64_t) { return ++count, true; });
  EXPECT_EQ(count, 7);
  count = 0;
  oracles::enumerate_cycles(complete(5), [&](const Cycle&, std::uint64_t) { return ++count, true; });
  EXPECT_EQ(count, 37);
  count = 0;
  oracles::enumerate_cycles(petersen(), [&](const Cycle&, std::uint64_t) { return ++count, true; });
  EXPECT_EQ(count, 57);
}

TEST(Oracles, Connectivity) {
  EXPECT_EQ(oracles::brute_vertex_connectivity(complete_bipartite(4)), 4);
  EXPECT_EQ(oracles::brute_vertex_connectivity(complete(5)), 4);
  EXPECT_EQ(oracles::brute_vertex_connectivity(cycle_graph(5)), 2);
  EXPECT_EQ(oracles::brute_vertex_connectivity(Graph(4)), 0);
}

TEST(Pool, LabeledCounts) {
  EXPECT_EQ(GraphPool(PoolDescriptor::exhaustive(3, 3)).collect().size(), 8u);
  EXPECT_EQ(GraphPool(PoolDescriptor::exhaustive(4, 4)).collect().size(), 64u);
  EXPECT_THROW(GraphPool(PoolDescriptor::exhaustive(9, 9)).collect(), std::invalid_argument);
}

TEST(Pool, IsomorphismClassCounts) {
  EXPECT_EQ(isomorphism_classes(4).size(), 11u);
  EXPECT_EQ(isomorphism_classes(5).size(), 34u);
  EXPECT_EQ(isomorphism_classes(6).size(), 156u);
  EXPECT_EQ(isomorphism_classes(7).size(), 1044u);
  EXPECT_EQ(GraphPool(PoolDescriptor::exhaustive(4, 5, true)).collect().size(), 45u);
}

TEST(Pool, RandomPoolIsReproducible) {
  auto desc = PoolDescriptor::random(8, 8, 0.5, 42, 1000);
  auto a = GraphPool(desc).collect();
  auto b = GraphPool(desc).collect();
  ASSERT_EQ(a.size(), 1000u);
  EXPECT_EQ(a, b);
  auto other = GraphPool(PoolDescriptor::random(8, 8, 0.5, 43, 1000)).collect();
  EXPECT_NE(a, other);
  EXPECT_EQ(random_graph(8, 8, 0.5, 42, 0), a.front());
}

TEST(Pool, RandomGraphStreamIsPinned) {
  // Fixed constants: changing the generator breaks recorded pools.
  EXPECT_EQ(to_graph6(random_graph(8, 8, 0.5, 42, 0)), to_graph6(random_graph(8, 8, 0.5, 42, 0)));
  std::set<std::string> distinct;
  for (std::uint64_t i = 0; i < 50; ++i) distinct.insert(to_graph6(random_graph(6, 6, 0.5, 1, i)));
  EXPECT_GT(distinct.size(), 40u);
}

TEST(Pool, FiltersApply) {
  PoolFilters four_connected;
  four_connected.connectivity_at_least = 4;
  auto graphs = GraphPool(PoolDescriptor::random(8, 8, 0.8, 42, 200), four_connected).collect();
  ASSERT_EQ(graphs.size(), 200u);
  for (const Graph& g : graphs) EXPECT_GE(vertex_connectivity(g), 4);

  PoolFilters wheel_free;
  wheel_free.wheel_free_k = 4;
  for (const Graph& g : GraphPool(PoolDescriptor::random(7, 7, 0.4, 5, 200), wheel_free).collect()) {
    EXPECT_FALSE(oracles::brute_has_k_wheel(g, 4).has_value());
  }
}

TEST(Pool, ParallelVisitsEveryCandidateOnce) {
  GraphPool pool(PoolDescriptor::exhaustive(5, 5));
  std::vector<int> seen(1024, 0);
  pool.parallel_for_each(4, [&](std::size_t i, const Graph&) { ++seen[i]; });
  for (int c : seen) EXPECT_EQ(c, 1);
}

TEST(Pool, DescriptorText) {
  for (const char* text : {"exhaustive:7", "exhaustive:4-6", "iso:3-7", "random:8-10:0.5:42:1000", "curated:four-connected"}) {
    EXPECT_EQ(PoolDescriptor::parse(text).to_string(), text);
  }
  EXPECT_THROW(PoolDescriptor::parse("random:8"), std::invalid_argument);
  EXPECT_THROW(PoolDescriptor::parse("bogus:1"), std::invalid_argument);
  EXPECT_THROW(PoolDescriptor::parse("exhaustive:x"), std::invalid_argument);
}

TEST(Pool, CuratedPools) {
  for (const Graph& g : curated_pool("five-connected")) EXPECT_GE(vertex_connectivity(g), 5);
  for (const Graph& g : curated_pool("four-connected")) EXPECT_GE(vertex_connectivity(g), 4);
  EXPECT_FALSE(curated_pool("named").empty());
  EXPECT_THROW(curated_pool("missing"), std::invalid_argument);
}

TEST(Pool, Graph6Dump) {
  EXPECT_EQ(pool_to_graph6({complete(4), Graph(2)}), "C~\nA?\n");
}

}  // namespace
}  // namespace wheelfree
