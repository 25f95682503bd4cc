#include <gtest/gtest.h>

#include "wheelfree/generators.hpp"
#include "wheelfree/graph_io.hpp"
#include "wheelfree/pool.hpp"

namespace wheelfree {
namespace {

TEST(Graph6, DecodesK4) {
  Graph g = parse_graph6("C~");
  EXPECT_EQ(g, complete(4));
  EXPECT_EQ(to_graph6(complete(4)), "C~");
}

TEST(Graph6, DecodesEdgelessPair) {
  Graph g = parse_graph6("A?");
  EXPECT_EQ(g.order(), 2);
  EXPECT_EQ(g.size(), 0u);
}

TEST(Graph6, StarRoundTrip) {
  Graph g = parse_graph6("D?{");
  EXPECT_EQ(g, Graph::from_edges(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
  EXPECT_EQ(to_graph6(g), "D?{");
}

TEST(Graph6, HeaderAndNewline) {
  EXPECT_EQ(parse_graph6(">>graph6<<C~\n"), complete(4));
  auto all = parse_graph6_lines("C~\n\nA?\n");
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[1].order(), 2);
}

TEST(Graph6, ErrorsNameTheByte) {
  try {
    parse_graph6("C~x");
    FAIL() << "trailing garbage accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
  EXPECT_THROW(parse_graph6("C"), ParseError);
  EXPECT_THROW(parse_graph6("~"), ParseError);
  EXPECT_THROW(parse_graph6("C\x01"), ParseError);
  // "A@": padding bits set for n = 2.
  EXPECT_THROW(parse_graph6("A@"), ParseError);
  EXPECT_THROW(parse_graph6(""), ParseError);
}

TEST(Graph6, RejectsLargeOrders) {
  EXPECT_THROW(to_graph6(Graph(63)), std::invalid_argument);
  EXPECT_NO_THROW(to_graph6(Graph(62)));
}

TEST(Graph6, ExhaustiveRoundTripUpToSix) {
  for (int n = 0; n <= 6; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      Graph g = graph_from_bits(n, bits);
      std::string text = to_graph6(g);
      ASSERT_EQ(parse_graph6(text), g) << text;
    }
  }
}

TEST(Dimacs, Triangle) {
  auto parsed = parse_dimacs_col("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  EXPECT_EQ(parsed.graph, complete(3));
  EXPECT_TRUE(parsed.warnings.empty());
}

TEST(Dimacs, LoopIsFatal) { EXPECT_THROW(parse_dimacs_col("p edge 2 1\ne 1 1\n"), ParseError); }

TEST(Dimacs, DuplicatesCollapseWithWarning) {
  auto parsed = parse_dimacs_col("p edge 4 2\ne 1 2\ne 1 2\n");
  EXPECT_EQ(parsed.graph, Graph::from_edges(4, {{0, 1}}));
  EXPECT_FALSE(parsed.warnings.empty());
}

TEST(Dimacs, StructuralErrors) {
  EXPECT_THROW(parse_dimacs_col("e 1 2\n"), ParseError);
  EXPECT_THROW(parse_dimacs_col("p edge 2 1\ne 1 3\n"), ParseError);
  EXPECT_THROW(parse_dimacs_col("p edge 2 1\ne 1\n"), ParseError);
  EXPECT_NO_THROW(parse_dimacs_col("c hello\np col 2 1\ne 1 2\n"));
}

TEST(Dimacs, RoundTrip) {
  Graph g = petersen();
  std::string text = to_dimacs_col(g);
  EXPECT_EQ(parse_dimacs_col(text).graph, g);
  EXPECT_EQ(to_dimacs_col(parse_dimacs_col(text).graph), text);
}

TEST(EdgeList, RoundTrip) {
  Graph g = tight_example(4);
  auto parsed = parse_edge_list(to_edge_list(g));
  EXPECT_EQ(parsed.graph, g);
  EXPECT_THROW(parse_edge_list("3 1\n0 3\n"), ParseError);
}

TEST(Formats, Detection) {
  EXPECT_EQ(detect_format("C~\n"), GraphFormat::Graph6);
  EXPECT_EQ(detect_format("c x\np edge 1 0\n"), GraphFormat::Dimacs);
  EXPECT_EQ(detect_format("3 2\n0 1\n1 2\n"), GraphFormat::EdgeList);
  EXPECT_EQ(format_from_name("dimacs"), GraphFormat::Dimacs);
  EXPECT_FALSE(format_from_name("sparse6").has_value());
  auto many = parse_graphs("C~\nA?\n", GraphFormat::Graph6);
  EXPECT_EQ(many.graphs.size(), 2u);
}

}  // namespace
}  // namespace wheelfree
