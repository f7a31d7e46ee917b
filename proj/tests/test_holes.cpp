#include <bhole/errors.hpp>
#include <bhole/generators.hpp>
#include <bhole/holes.hpp>
#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support.hpp"

namespace bhole {
namespace {

// Independent α̃: every assignment of vertices to S, T or neither.
std::int64_t alpha_tilde_brute(const Graph& g) {
  const std::size_t n = g.order();
  std::set<std::pair<std::size_t, std::size_t>> holes;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  std::vector<int> side(n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code, s = 0, t = 0;
    for (std::size_t v = 0; v < n; ++v) {
      side[v] = static_cast<int>(c % 3);
      c /= 3;
      s += side[v] == 1;
      t += side[v] == 2;
    }
    if (s == 0 || t == 0) continue;
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = 0; v < n && ok; ++v)
        if (side[u] == 1 && side[v] == 2 && g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) ok = false;
    if (ok) holes.emplace(s, t);
  }
  std::int64_t best = static_cast<std::int64_t>(2 * n + 1);
  for (std::size_t s = 1; s <= n + 1; ++s)
    for (std::size_t t = 1; t <= n + 1; ++t)
      if (!holes.count({s, t})) best = std::min(best, static_cast<std::int64_t>(s + t - 1));
  return best;
}

void expect_hole(const Graph& g, const BipartiteHole& h, std::size_t s, std::size_t t) {
  EXPECT_EQ(h.s_side.size(), s);
  EXPECT_EQ(h.t_side.size(), t);
  EXPECT_TRUE(disjoint(h.s_side, h.t_side));
  for (auto u : h.s_side)
    for (auto v : h.t_side) EXPECT_FALSE(g.adjacent(u, v)) << u << "~" << v;
}

TEST(HasBipartiteHole, Examples) {
  const Graph k23 = complete_bipartite(2, 3);
  const auto h = has_bipartite_hole(k23, 1, 2);
  ASSERT_TRUE(h.has_value());
  expect_hole(k23, *h, 1, 2);
  for (auto v : set_union(h->s_side, h->t_side)) EXPECT_GE(v, 2);
  EXPECT_FALSE(has_bipartite_hole(k23, 1, 3).has_value());
  EXPECT_FALSE(has_bipartite_hole(complete_graph(4), 1, 1).has_value());
}

TEST(HasBipartiteHole, OrientationAndBounds) {
  const Graph k23 = complete_bipartite(2, 3);
  const auto h = has_bipartite_hole(k23, 2, 1);
  ASSERT_TRUE(h.has_value());
  expect_hole(k23, *h, 2, 1);
  EXPECT_FALSE(has_bipartite_hole(k23, 3, 3).has_value());
  EXPECT_THROW(has_bipartite_hole(k23, 0, 1), InvalidArgument);
}

TEST(HasBipartiteHole, BudgetAbort) {
  WorkBudget tiny(10);
  EXPECT_THROW(has_bipartite_hole(parse_graph("30 0"), 5, 5, tiny), InstanceTooLarge);
}

TEST(HasBipartiteHole, MatchesBruteForceExhaustive) {
  for (std::size_t n = 2; n <= 5; ++n) {
    testing::for_each_graph(n, [&](const Graph& g) {
      for (std::size_t s = 1; s < n; ++s)
        for (std::size_t t = 1; s + t <= n; ++t) {
          const auto h = has_bipartite_hole(g, s, t);
          if (h) expect_hole(g, *h, s, t);
        }
      const std::int64_t brute = alpha_tilde_brute(g);
      EXPECT_EQ(alpha_tilde_exact(g), brute) << serialize_graph(g);
    });
  }
}

TEST(AlphaTilde, Examples) {
  EXPECT_EQ(alpha_tilde_exact(complete_graph(4)), 1);
  EXPECT_EQ(alpha_tilde_exact(complete_bipartite(2, 3)), 3);
  EXPECT_EQ(alpha_tilde_exact(complement(complete_bipartite(2, 3))), 4);
  EXPECT_EQ(alpha_tilde_exact(cycle_graph(5)), 3);
  EXPECT_EQ(alpha_tilde_exact(cycle_graph(6)), 4);
  EXPECT_EQ(alpha_tilde_exact(parse_graph("1 0")), 1);
}

TEST(AlphaTilde, SizeGuard) {
  EXPECT_THROW(alpha_tilde_exact(complete_graph(21)), InstanceTooLarge);
  WorkBudget budget;
  EXPECT_EQ(alpha_tilde_exact(complete_graph(21), budget, false), 1);
}

TEST(AlphaTilde, MonotoneUnderEdgeAddition) {
  // Adding an edge never creates a hole.
  testing::for_each_graph(5, [](const Graph& g) {
    const auto base = alpha_tilde_exact(g);
    for (Vertex u = 0; u < 5; ++u)
      for (Vertex v = u + 1; v < 5; ++v) {
        if (g.adjacent(u, v)) continue;
        GraphBuilder b(5);
        for (auto e : g.edges()) b.add_edge(e.u, e.v);
        b.add_edge(u, v);
        EXPECT_LE(alpha_tilde_exact(std::move(b).build()), base);
      }
  });
}

TEST(FindCertificate, AgreesWithAlphaTilde) {
  testing::for_each_graph(5, [](const Graph& g) {
    WorkBudget budget;
    const auto a = alpha_tilde_exact(g);
    for (std::int64_t k = 1; k <= 6; ++k) {
      const auto c = find_certificate(g, k, budget);
      EXPECT_EQ(c.has_value(), k <= a);
      if (c) EXPECT_EQ(verify_certificate(g, *c), k);
    }
  });
}

TEST(VerifyCertificate, Examples) {
  const Graph k23 = complete_bipartite(2, 3);
  const HoleCertificate good{3, {{VertexSet{2}, VertexSet{3, 4}}}};
  EXPECT_EQ(verify_certificate(k23, good), 3);
  EXPECT_EQ(verify_certificate(petersen_graph(), HoleCertificate{}), 1);
  try {
    verify_certificate(complete_graph(3), HoleCertificate{2, {{VertexSet{0}, VertexSet{1}}}});
    FAIL() << "expected VerificationError";
  } catch (const VerificationError& e) {
    ASSERT_TRUE(e.pair_index().has_value());
    EXPECT_EQ(*e.pair_index(), 1u);
  }
}

TEST(VerifyCertificate, Rejections) {
  const Graph k23 = complete_bipartite(2, 3);
  EXPECT_THROW(verify_certificate(k23, HoleCertificate{3, {}}), VerificationError);
  EXPECT_THROW(verify_certificate(k23, HoleCertificate{3, {{VertexSet{2}, VertexSet{3}}}}), VerificationError);
  EXPECT_THROW(verify_certificate(k23, HoleCertificate{3, {{VertexSet{2}, VertexSet{2, 3}}}}), VerificationError);
  EXPECT_THROW(verify_certificate(k23, HoleCertificate{3, {{VertexSet{2}, VertexSet{3, 9}}}}), VerificationError);
  EXPECT_THROW(verify_certificate(k23, HoleCertificate{0, {}}), VerificationError);
}

TEST(CertificateText, RoundTrip) {
  const HoleCertificate c{4, {{VertexSet{0}, VertexSet{2, 4, 6}}, {VertexSet{0, 1}, VertexSet{2, 4}}}};
  const std::string text = format_certificate(c);
  EXPECT_EQ(text, "alpha-tilde-ge 4\n1 | 0 | 2 4 6\n2 | 0 1 | 2 4");
  EXPECT_EQ(parse_certificate(text), c);
  EXPECT_EQ(format_certificate(HoleCertificate{}), "alpha-tilde-ge 1");
  EXPECT_THROW(parse_certificate("alpha-tilde-ge 4\n2 | 0 | 2 4 6"), ParseError);
  EXPECT_THROW(parse_certificate("alpha-tilde-ge 3\n1 | 0 | 4 2"), ParseError);
  EXPECT_THROW(parse_certificate("alpha-tilde 3"), ParseError);
}

TEST(TranslateCertificate, NoCyclesKeepsPairs) {
  const Graph k23 = complete_bipartite(2, 3);
  const HoleCertificate c{3, {{VertexSet{2}, VertexSet{3, 4}}}};
  EXPECT_EQ(translate_certificate(c, {}, k23), c);
  // k' = min(c.k, δ + 1).
  const HoleCertificate big{5, {{VertexSet{0}, VertexSet{1, 2, 3, 4}}, {VertexSet{0, 1}, VertexSet{2, 3, 4}}}};
  const auto t = translate_certificate(big, {}, parse_graph("6 0"));
  EXPECT_EQ(t.k, 1);
  EXPECT_TRUE(t.pairs.empty());
}

TEST(TranslateCertificate, CompleteGraphOneCycle) {
  const Graph k5 = complete_graph(5);
  const std::vector<CycleSeq> cycles{CycleSeq{{0, 1, 2, 3, 4}}};
  const HoleCertificate c{3, {{VertexSet{0}, VertexSet{1, 4}}}};
  EXPECT_EQ(verify_certificate(remove_edges(k5, cycles[0].edges()), c), 3);
  const auto t = translate_certificate(c, cycles, k5);
  EXPECT_EQ(t.k, 1);
  EXPECT_TRUE(t.pairs.empty());
}

TEST(TranslateCertificate, BipartiteOneCycle) {
  const Graph k33 = complete_bipartite(3, 3);
  const std::vector<CycleSeq> cycles{CycleSeq{{0, 3, 1, 4, 2, 5}}};
  const Graph matching = remove_edges(k33, cycles[0].edges());
  WorkBudget budget;
  const auto c = find_certificate(matching, 4, budget);
  ASSERT_TRUE(c.has_value());
  const auto t = translate_certificate(*c, cycles, k33);
  EXPECT_EQ(t.k, 1);
  EXPECT_EQ(verify_certificate(k33, t), 1);
}

TEST(TranslateCertificate, KeptPairsVerifyOnFullGraph) {
  // Large δ with one removed cycle: k' > 1 and the pairs must survive.
  const Graph g = complement(disjoint_union(complete_graph(8), complete_graph(8)));
  // g is K_{8,8}: δ = 8, removing one cycle gives k' = floor(7 / 2) = 3.
  std::vector<Vertex> order;
  for (Vertex i = 0; i < 8; ++i) {
    order.push_back(i);
    order.push_back(i + 8);
  }
  const std::vector<CycleSeq> cycles{CycleSeq{order}};
  const Graph rest = remove_edges(g, cycles[0].edges());
  WorkBudget budget;
  const auto c = find_certificate(rest, 7, budget);
  ASSERT_TRUE(c.has_value());
  const auto t = translate_certificate(*c, cycles, g);
  EXPECT_EQ(t.k, 3);
  EXPECT_EQ(verify_certificate(g, t), 3);
}

}  // namespace
}  // namespace bhole
