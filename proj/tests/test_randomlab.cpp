#include <bhole/errors.hpp>
#include <bhole/generators.hpp>
#include <bhole/randomlab.hpp>
#include <gtest/gtest.h>

#include <cmath>

namespace bhole {
namespace {

TEST(ThresholdParams, Examples) {
  const auto a = threshold_params(10, 1);
  EXPECT_EQ(a.t, 4u);
  EXPECT_EQ(a.d, 8u);
  const auto b = threshold_params(100, 2);
  EXPECT_EQ(b.t, 10u);
  EXPECT_EQ(b.d, 43u);
  const auto c = threshold_params(1, 1);
  EXPECT_EQ(c.t, 1u);
  EXPECT_EQ(c.d, 2u);
  EXPECT_THROW(threshold_params(0, 1), InvalidArgument);
}

TEST(Experiment, CompleteGraphs) {
  ExperimentConfig cfg;
  cfg.n = 5;
  cfg.p = 1.0;
  cfg.samples = 10;
  const auto rep = run_experiment(cfg);
  for (const auto& r : rep.records) EXPECT_EQ(r.has_r_edhc, true);
  EXPECT_EQ(rep.violations_lower(), 0u);
  EXPECT_EQ(rep.violations_upper(), 0u);
}

TEST(Experiment, EmptyGraphs) {
  ExperimentConfig cfg;
  cfg.n = 5;
  cfg.p = 0.0;
  cfg.samples = 10;
  const auto rep = run_experiment(cfg);
  EXPECT_EQ(rep.delta_zero_count(), 10u);
  EXPECT_EQ(rep.not_a_r_count(), 10u);
  EXPECT_EQ(rep.violations_lower(), 0u);
  EXPECT_EQ(rep.violations_upper(), 0u);
}

TEST(Experiment, SandwichHolds) {
  ExperimentConfig cfg;
  cfg.n = 10;
  cfg.p = 0.5;
  cfg.samples = 500;
  cfg.seed = 42;
  const auto rep = run_experiment(cfg);
  EXPECT_EQ(rep.a_r_available(), 500u);
  EXPECT_EQ(rep.violations_lower(), 0u);
  EXPECT_EQ(rep.violations_upper(), 0u);
  EXPECT_LE(rep.delta_zero_count(), rep.not_a_r_count());
}

TEST(Experiment, JobsDoNotChangeOutput) {
  ExperimentConfig cfg;
  cfg.n = 9;
  cfg.p = 0.4;
  cfg.samples = 60;
  cfg.seed = 3;
  const auto one = format_report_csv(run_experiment(cfg));
  cfg.jobs = 4;
  EXPECT_EQ(format_report_csv(run_experiment(cfg)), one);
}

TEST(Experiment, BudgetExhaustionIsNA) {
  ExperimentConfig cfg;
  // Dense samples pass the degree pre-check, so the oracle has to search.
  cfg.n = 12;
  cfg.p = 0.95;
  cfg.samples = 5;
  cfg.oracle_budget = 1;
  const auto rep = run_experiment(cfg);
  EXPECT_EQ(rep.a_r_available(), 0u);
  const auto csv = format_report_csv(rep);
  EXPECT_NE(csv.find("NA"), std::string::npos);
  EXPECT_NE(csv.find("# freq_not_a_r=NA"), std::string::npos);
}

TEST(Experiment, CsvShape) {
  ExperimentConfig cfg;
  cfg.n = 6;
  cfg.p = 0.5;
  cfg.samples = 3;
  const auto csv = format_report_csv(run_experiment(cfg));
  EXPECT_EQ(csv.rfind("sample,delta,delta_zero,alpha_gt_2t,delta_lt_d,has_r_edhc,violation_lower,violation_upper", 0),
            0u);
  EXPECT_NE(csv.find("\n# violations_upper=0"), std::string::npos);
  EXPECT_NE(csv.back(), '\n');
}

TEST(Experiment, Rejections) {
  ExperimentConfig cfg;
  cfg.n = 2;
  EXPECT_THROW(run_experiment(cfg), InvalidArgument);
  cfg.n = 5;
  cfg.p = 1.5;
  EXPECT_THROW(run_experiment(cfg), InvalidArgument);
  cfg.p = 0.5;
  cfg.samples = 0;
  EXPECT_THROW(run_experiment(cfg), InvalidArgument);
}

TEST(MValue, Formula) {
  const double e = std::exp(1.0);
  EXPECT_NEAR(m_value(std::exp(std::exp(e)), e), std::exp(e - 1.0), 1e-9);
  const double n = 1e6;
  EXPECT_GT(m_value(n, 3.0), m_value(n, 4.0));
  EXPECT_GT(m_value(n, 4.0), m_value(n, 10.0));
  EXPECT_THROW(m_value(10.0, 3.0), InvalidArgument);
  EXPECT_THROW(m_value(1e6, 1.0), InvalidArgument);
}

TEST(P1, Examples) {
  const auto star = check_P1(complete_bipartite(1, 4), 2.0, 1.0);
  EXPECT_FALSE(star.holds);
  ASSERT_TRUE(star.witness.has_value());
  EXPECT_EQ(star.witness->size(), 1u);
  EXPECT_GE((*star.witness)[0], 1);

  const auto k5 = check_P1(complete_graph(5), 2.0, 1.0);
  EXPECT_FALSE(k5.holds);
  ASSERT_TRUE(k5.witness.has_value());
  EXPECT_EQ(k5.witness->size(), 2u);

  EXPECT_TRUE(check_P1(complete_graph(5), 2.0, 10.0).holds);
}

TEST(P2, Examples) {
  EXPECT_TRUE(check_P2(complete_graph(4), 1.0).holds);
  const auto two = check_P2(disjoint_union(complete_graph(3), complete_graph(3)), 1.0);
  EXPECT_FALSE(two.holds);
  ASSERT_TRUE(two.witness.has_value());
  EXPECT_LT(two.witness->s_side[0], 3);
  EXPECT_GE(two.witness->t_side[0], 3);
  // ceil(5 / (4130 m)) = 2.
  const auto k23 = check_P2(complete_bipartite(2, 3), 5.0 / 6000.0);
  EXPECT_EQ(k23.side, 2u);
  EXPECT_TRUE(k23.holds);
}

}  // namespace
}  // namespace bhole
