#include <bhole/cycle.hpp>
#include <bhole/errors.hpp>
#include <bhole/generators.hpp>
#include <bhole/graph.hpp>
#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace bhole {
namespace {

TEST(ParseGraph, Triangle) {
  const Graph g = parse_graph("3 3\n0 1\n1 2\n0 2");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g, complete_graph(3));
}

TEST(ParseGraph, SelfLoopNamesLine) {
  try {
    parse_graph("2 1\n0 0");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParseGraph, TwoDisjointEdges) {
  const Graph g = parse_graph("4 2\n0 1\n2 3");
  EXPECT_EQ(min_degree(g), 1u);
  EXPECT_EQ(components(g).size(), 2u);
}

TEST(ParseGraph, Rejections) {
  EXPECT_THROW(parse_graph(""), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 3"), ParseError);
  EXPECT_THROW(parse_graph("3 2\n0 1\n1 0"), ParseError);
  EXPECT_THROW(parse_graph("3 2\n0 1"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 1\n1 2"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 x"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 1 2"), ParseError);
  EXPECT_THROW(parse_graph("-1 0"), ParseError);
}

TEST(ParseGraph, CommentsAndBlankLines) {
  const Graph g = parse_graph("# header\n3 1\n\n0 2\r\n");
  EXPECT_EQ(g.size(), 1u);
  EXPECT_TRUE(g.adjacent(0, 2));
}

TEST(SerializeGraph, CanonicalOrder) {
  EXPECT_EQ(serialize_graph(complete_graph(3)), "3 3\n0 1\n0 2\n1 2");
  EXPECT_EQ(serialize_graph(parse_graph("3 0")), "3 0");
  EXPECT_EQ(serialize_graph(parse_graph("3 2\n2 1\n1 0")), "3 2\n0 1\n1 2");
}

TEST(SerializeGraph, RoundTripRandom) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = gnp(1 + seed % 40, 0.3, seed);
    EXPECT_EQ(parse_graph(serialize_graph(g)), g);
  }
}

TEST(SerializeGraph, RoundTripExhaustive) {
  for (std::size_t n = 1; n <= 4; ++n)
    testing::for_each_graph(n, [](const Graph& g) { EXPECT_EQ(parse_graph(serialize_graph(g)), g); });
}

TEST(Generators, Basic) {
  EXPECT_EQ(complete_graph(4).size(), 6u);
  EXPECT_EQ(generate("complete 4"), complete_graph(4));
  EXPECT_EQ(gnp(5, 0.0, 1).size(), 0u);
  EXPECT_EQ(gnp(5, 1.0, 1).size(), 10u);
  EXPECT_EQ(cycle_graph(5).size(), 5u);
  EXPECT_EQ(path_graph(5).size(), 4u);
  EXPECT_EQ(complete_bipartite(2, 3).size(), 6u);
  const Graph p = petersen_graph();
  EXPECT_EQ(p.order(), 10u);
  EXPECT_EQ(p.size(), 15u);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(p.degree(v), 3u);
}

TEST(Generators, FanExampleCounts) {
  const Graph g = fan_example(4, 1);
  EXPECT_EQ(g.order(), 12u);
  EXPECT_EQ(g.size(), 44u);
  EXPECT_THROW(fan_example(3, 1), InvalidArgument);
  EXPECT_THROW(fan_example(4, 0), InvalidArgument);
}

TEST(Generators, GnpDeterministic) {
  EXPECT_EQ(gnp(30, 0.5, 7), gnp(30, 0.5, 7));
  EXPECT_NE(gnp(30, 0.5, 7), gnp(30, 0.5, 8));
  EXPECT_THROW(gnp(5, 1.5, 1), InvalidArgument);
}

TEST(Generators, Expressions) {
  EXPECT_EQ(generate("complement-of(complete 4)").size(), 0u);
  const Graph u = generate("disjoint-union(complete 3, complete 3)");
  EXPECT_EQ(u.order(), 6u);
  EXPECT_EQ(components(u).size(), 2u);
  EXPECT_EQ(generate("bipartite 2 3"), complete_bipartite(2, 3));
  EXPECT_EQ(generate("gnp 10 0.5 3"), gnp(10, 0.5, 3));
  EXPECT_THROW(generate("gnp 10 0.5"), InvalidArgument);
  EXPECT_THROW(generate("nonsense 3"), InvalidArgument);
  EXPECT_THROW(generate("complement-of(complete 4"), InvalidArgument);
}

TEST(GraphQueries, MinDegree) {
  EXPECT_EQ(min_degree(complete_bipartite(2, 3)), 2u);
  EXPECT_EQ(min_degree(petersen_graph()), 3u);
  EXPECT_EQ(min_degree(parse_graph("3 0")), 0u);
  EXPECT_THROW(min_degree(parse_graph("0 0")), InvalidArgument);
}

TEST(GraphQueries, Components) {
  const Graph two = disjoint_union(complete_graph(3), complete_graph(3));
  const auto comps = components(two);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], (VertexSet{0, 1, 2}));
  EXPECT_EQ(comps[1], (VertexSet{3, 4, 5}));
  EXPECT_EQ(components(complete_graph(5)).size(), 1u);
  EXPECT_EQ(components(parse_graph("3 0")).size(), 3u);
  EXPECT_TRUE(is_connected(complete_graph(5)));
  EXPECT_FALSE(is_connected(two));
}

TEST(GraphQueries, ExternalNeighborhood) {
  EXPECT_EQ(external_neighborhood(complete_graph(4), VertexSet{0}), (VertexSet{1, 2, 3}));
  const Graph two = disjoint_union(complete_graph(3), complete_graph(3));
  EXPECT_EQ(external_neighborhood(two, VertexSet{0}), (VertexSet{1, 2}));
  EXPECT_TRUE(external_neighborhood(petersen_graph(), VertexSet{}).empty());
}

TEST(GraphQueries, ComplementInvolution) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const Graph g = gnp(12, 0.4, rng());
    const Graph c = complement(g);
    EXPECT_EQ(g.size() + c.size(), 66u);
    EXPECT_EQ(complement(c), g);
  }
}

TEST(GraphBuilder, Rejections) {
  GraphBuilder b(3);
  EXPECT_TRUE(b.add_edge(0, 1));
  EXPECT_FALSE(b.add_edge(1, 0));
  EXPECT_THROW(b.add_edge(1, 1), InvalidArgument);
  EXPECT_THROW(b.add_edge(0, 3), InvalidArgument);
}

TEST(VertexSetOps, Algebra) {
  const VertexSet a{3, 1, 2, 1};
  EXPECT_EQ(a.size(), 3u);
  const VertexSet b{2, 5};
  EXPECT_EQ(set_union(a, b), (VertexSet{1, 2, 3, 5}));
  EXPECT_EQ(set_intersection(a, b), (VertexSet{2}));
  EXPECT_EQ(set_difference(a, b), (VertexSet{1, 3}));
  EXPECT_FALSE(disjoint(a, b));
  EXPECT_TRUE(disjoint(a, VertexSet{0, 4}));
  EXPECT_EQ(a.lowest(2), (VertexSet{1, 2}));
}

TEST(Cycle, FormatIsCanonical) {
  const CycleSeq c{{2, 0, 3, 1}};
  EXPECT_EQ(format_cycle(c), "cycle 4\n0 2 1 3");
  EXPECT_EQ(format_cycle(CycleSeq{{0, 3, 2, 1}}), "cycle 4\n0 1 2 3");
  EXPECT_EQ(parse_cycle("cycle 4\n0 1 2 3").order, (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(Cycle, Validation) {
  const Graph c5 = cycle_graph(5);
  EXPECT_NO_THROW(validate_hamilton_cycle(c5, CycleSeq{{0, 1, 2, 3, 4}}));
  EXPECT_THROW(validate_hamilton_cycle(c5, CycleSeq{{0, 2, 1, 3, 4}}), VerificationError);
  EXPECT_THROW(validate_hamilton_cycle(complete_graph(5), CycleSeq{{0, 1, 2}}), VerificationError);
  EXPECT_NO_THROW(validate_cycle(complete_graph(5), CycleSeq{{0, 1, 2}}));
  EXPECT_THROW(validate_cycle(complete_graph(5), CycleSeq{{0, 1, 1}}), VerificationError);
  EXPECT_THROW(parse_cycle("cycle 3\n0 1"), ParseError);
  EXPECT_THROW(parse_cycle("path 3\n0 1 2"), ParseError);
}

}  // namespace
}  // namespace bhole
