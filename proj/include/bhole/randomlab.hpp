#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bhole/budget.hpp"
#include "bhole/graph.hpp"
#include "bhole/holes.hpp"

namespace bhole {

/// t = ceil(sqrt(n)) and d = 2rt + 3r - 3: a graph with alpha-tilde <= 2t and
/// minimum degree >= d holds r edge-disjoint Hamilton cycles.
struct ThresholdParams {
  std::size_t t;
  std::size_t d;
};
ThresholdParams threshold_params(std::size_t n, std::size_t r);

struct ExperimentConfig {
  std::size_t n = 10;
  double p = 0.5;
  std::size_t r = 1;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  /// Per sample, per oracle.
  std::uint64_t oracle_budget = WorkBudget::kDefaultLimit;
  /// Worker threads; 0 or 1 runs inline.
  std::size_t jobs = 1;
};

/// Per-sample outcome; nullopt marks an oracle that hit its budget.
struct SampleRecord {
  std::size_t sample = 0;
  std::size_t delta = 0;
  bool delta_zero = false;
  std::optional<bool> alpha_gt_2t;
  bool delta_lt_d = false;
  std::optional<bool> has_r_edhc;
  /// delta = 0 but r edge-disjoint Hamilton cycles exist.
  std::optional<bool> violation_lower;
  /// No r cycles, yet alpha-tilde <= 2t and delta >= d.
  std::optional<bool> violation_upper;

  friend bool operator==(const SampleRecord&, const SampleRecord&) = default;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::size_t t = 0;
  std::size_t d = 0;
  std::vector<SampleRecord> records;

  std::size_t delta_zero_count() const;
  /// Samples where the A_r oracle completed.
  std::size_t a_r_available() const;
  /// Samples known to lack r edge-disjoint Hamilton cycles.
  std::size_t not_a_r_count() const;
  std::size_t violations_lower() const;
  std::size_t violations_upper() const;
  /// (1 - p)^n.
  double isolated_floor() const;
};

/// Seed used for sample `index`: splitmix64(seed ^ splitmix64(index)).
std::uint64_t sample_seed(std::uint64_t seed, std::size_t index);

/// Draws cfg.samples graphs G(n, p) and checks
/// {δ = 0} ⊆ not-A_r ⊆ {alpha-tilde > 2t} ∪ {δ < d} on each one.
/// Output is independent of cfg.jobs.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// CSV with header, one row per sample ("NA" for unavailable cells), then
/// '#'-prefixed aggregate lines. No trailing newline.
std::string format_report_csv(const ExperimentReport& report);

/// (log n · log log log n) / (log d · log log n), natural logs.
/// Requires n > e^e and d > 1.
double m_value(double n, double d);

struct P1Check {
  bool holds = true;
  std::optional<VertexSet> witness;
};
/// Every non-empty S with |S| <= n / (d·m) has |N(S)| >= d|S|. Smallest
/// failing set (by size, then lexicographically) is the witness.
P1Check check_P1(const Graph& g, double d_exp, double m_val, WorkBudget& budget);
P1Check check_P1(const Graph& g, double d_exp, double m_val);

struct P2Check {
  bool holds = true;
  std::size_t side = 1;
  std::optional<BipartiteHole> witness;
};
/// No (a, a)-hole for a = max(1, ceil(n / (4130 m))).
P2Check check_P2(const Graph& g, double m_val, WorkBudget& budget);
P2Check check_P2(const Graph& g, double m_val);

}  // namespace bhole
