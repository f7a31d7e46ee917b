#include <bhole/disjoint.hpp>
#include <bhole/errors.hpp>
#include <bhole/generators.hpp>
#include <gtest/gtest.h>

namespace bhole {
namespace {

TEST(Disjoint, CompleteFive) {
  const Graph k5 = complete_graph(5);
  const auto r = find_edge_disjoint_hamilton(k5);
  EXPECT_EQ(r.cycles.size(), 2u);
  EXPECT_FALSE(r.capped);
  EXPECT_EQ(r.delta, 4u);
  EXPECT_EQ(r.translated_certificate.k, 1);
  EXPECT_TRUE(r.translated_certificate.pairs.empty());
  EXPECT_NO_THROW(verify_disjoint_result(k5, r));
}

TEST(Disjoint, CompleteTwentyOne) {
  const Graph k21 = complete_graph(21);
  const auto r = find_edge_disjoint_hamilton(k21);
  EXPECT_GE(r.cycles.size(), 5u);
  EXPECT_NO_THROW(verify_disjoint_result(k21, r));
}

TEST(Disjoint, BipartiteThreeThree) {
  const Graph k33 = complete_bipartite(3, 3);
  const auto r = find_edge_disjoint_hamilton(k33);
  EXPECT_EQ(r.cycles.size(), 1u);
  EXPECT_EQ(r.translated_certificate.k, 1);
  EXPECT_NO_THROW(verify_disjoint_result(k33, r));
}

TEST(Disjoint, NonHamiltonianGivesZeroCycles) {
  const Graph k23 = complete_bipartite(2, 3);
  const auto r = find_edge_disjoint_hamilton(k23);
  EXPECT_TRUE(r.cycles.empty());
  EXPECT_EQ(r.residual_certificate.k, 3);
  EXPECT_EQ(r.translated_certificate.k, 3);
  EXPECT_NO_THROW(verify_disjoint_result(k23, r));
}

TEST(Disjoint, Cap) {
  const Graph k9 = complete_graph(9);
  const auto r = find_edge_disjoint_hamilton(k9, 2);
  EXPECT_EQ(r.cycles.size(), 2u);
  EXPECT_TRUE(r.capped);
  EXPECT_NO_THROW(verify_disjoint_result(k9, r));
  EXPECT_TRUE(find_edge_disjoint_hamilton(k9, 0).cycles.empty());
}

TEST(Disjoint, RandomDenseGraphsVerify) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = gnp(30, 0.7, seed);
    if (min_degree(g) < 2) continue;
    const auto r = find_edge_disjoint_hamilton(g);
    EXPECT_NO_THROW(verify_disjoint_result(g, r));
    const auto m = r.translated_certificate.k;
    const auto rr = static_cast<std::int64_t>(r.cycles.size());
    EXPECT_GT(m * (rr + 1), static_cast<std::int64_t>(r.delta) - 3 * rr);
  }
}

TEST(Disjoint, VerifyRejectsSharedEdges) {
  const Graph k5 = complete_graph(5);
  auto r = find_edge_disjoint_hamilton(k5);
  ASSERT_EQ(r.cycles.size(), 2u);
  r.cycles[1] = r.cycles[0];
  EXPECT_THROW(verify_disjoint_result(k5, r), VerificationError);
}

TEST(Disjoint, VerifyRejectsBadCertificate) {
  const Graph k23 = complete_bipartite(2, 3);
  auto r = find_edge_disjoint_hamilton(k23);
  r.translated_certificate.pairs[0].t_side = VertexSet{0, 1};
  EXPECT_THROW(verify_disjoint_result(k23, r), VerificationError);
}

TEST(Bundle, RoundTrip) {
  for (const Graph& g : {complete_graph(7), complete_bipartite(2, 3), complete_bipartite(3, 3), gnp(20, 0.6, 4)}) {
    const auto r = find_edge_disjoint_hamilton(g);
    const auto text = format_bundle(r);
    const auto back = parse_bundle(text);
    EXPECT_EQ(back.cycles.size(), r.cycles.size());
    EXPECT_EQ(back.residual_certificate, r.residual_certificate);
    EXPECT_EQ(back.translated_certificate, r.translated_certificate);
    EXPECT_EQ(back.delta, r.delta);
    EXPECT_NO_THROW(verify_disjoint_result(g, back));
    EXPECT_EQ(format_bundle(back), text);
  }
}

TEST(Bundle, CappedRoundTrip) {
  const Graph k9 = complete_graph(9);
  const auto r = find_edge_disjoint_hamilton(k9, 1);
  const auto back = parse_bundle(format_bundle(r));
  EXPECT_TRUE(back.capped);
  EXPECT_EQ(back.cycles.size(), 1u);
}

TEST(Bundle, SummaryLine) {
  const auto r = find_edge_disjoint_hamilton(complete_graph(5));
  EXPECT_EQ(format_summary(r), "r=2 delta=4 m=1");
  EXPECT_THROW(parse_bundle("r=3 delta=4 m=1\n\ncycle 3\n0 1 2"), ParseError);
}

}  // namespace
}  // namespace bhole
