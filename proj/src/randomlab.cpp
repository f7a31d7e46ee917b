#include "bhole/randomlab.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "bhole/errors.hpp"
#include "bhole/generators.hpp"
#include "bhole/oracle.hpp"

namespace bhole {

ThresholdParams threshold_params(std::size_t n, std::size_t r) {
  if (n < 1 || r < 1) throw InvalidArgument("threshold_params needs n >= 1 and r >= 1");
  auto t = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (t * t > n) --t;
  while (t * t < n) ++t;
  return {t, 2 * r * t + 3 * r - 3};
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

SampleRecord evaluate_sample(const ExperimentConfig& cfg, const ThresholdParams& params, std::size_t index) {
  const Graph g = gnp(cfg.n, cfg.p, sample_seed(cfg.seed, index));
  SampleRecord rec;
  rec.sample = index;
  rec.delta = min_degree(g);
  rec.delta_zero = rec.delta == 0;
  rec.delta_lt_d = rec.delta < params.d;

  const std::size_t split_total = 2 * params.t + 1;
  if (split_total > g.order()) {
    rec.alpha_gt_2t = false;
  } else {
    try {
      WorkBudget budget(cfg.oracle_budget);
      rec.alpha_gt_2t = find_certificate(g, static_cast<std::int64_t>(split_total), budget).has_value();
    } catch (const InstanceTooLarge&) {
    }
  }

  try {
    WorkBudget budget(cfg.oracle_budget);
    rec.has_r_edhc = exists_edge_disjoint_hc_exact(g, cfg.r, budget);
  } catch (const InstanceTooLarge&) {
  }

  if (rec.has_r_edhc) {
    rec.violation_lower = rec.delta_zero && *rec.has_r_edhc;
    if (*rec.has_r_edhc || rec.delta_lt_d)
      rec.violation_upper = false;
    else if (rec.alpha_gt_2t)
      rec.violation_upper = !*rec.alpha_gt_2t;
  }
  return rec;
}

std::string fmt_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string cell(const std::optional<bool>& v) { return v ? (*v ? "1" : "0") : "NA"; }

}  // namespace

std::uint64_t sample_seed(std::uint64_t seed, std::size_t index) {
  return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(index)));
}

std::size_t ExperimentReport::delta_zero_count() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](auto& r) { return r.delta_zero; }));
}

std::size_t ExperimentReport::a_r_available() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](auto& r) { return r.has_r_edhc.has_value(); }));
}

std::size_t ExperimentReport::not_a_r_count() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](auto& r) { return r.has_r_edhc == false; }));
}

std::size_t ExperimentReport::violations_lower() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](auto& r) { return r.violation_lower == true; }));
}

std::size_t ExperimentReport::violations_upper() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](auto& r) { return r.violation_upper == true; }));
}

double ExperimentReport::isolated_floor() const {
  return std::pow(1.0 - config.p, static_cast<double>(config.n));
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  if (cfg.n < 3) throw InvalidArgument("experiment needs n >= 3");
  if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw InvalidArgument("experiment needs 0 <= p <= 1");
  if (cfg.r < 1) throw InvalidArgument("experiment needs r >= 1");
  if (cfg.samples < 1) throw InvalidArgument("experiment needs at least one sample");

  ExperimentReport report;
  report.config = cfg;
  const auto params = threshold_params(cfg.n, cfg.r);
  report.t = params.t;
  report.d = params.d;
  report.records.resize(cfg.samples);

  const std::size_t workers = std::min(std::max<std::size_t>(cfg.jobs, 1), cfg.samples);
  if (workers == 1) {
    for (std::size_t i = 0; i < cfg.samples; ++i) report.records[i] = evaluate_sample(cfg, params, i);
    return report;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        for (std::size_t i = next++; i < cfg.samples; i = next++) report.records[i] = evaluate_sample(cfg, params, i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return report;
}

std::string format_report_csv(const ExperimentReport& report) {
  std::string out = "sample,delta,delta_zero,alpha_gt_2t,delta_lt_d,has_r_edhc,violation_lower,violation_upper";
  for (const auto& r : report.records) {
    out += "\n" + std::to_string(r.sample) + "," + std::to_string(r.delta) + "," + (r.delta_zero ? "1" : "0") + "," +
           cell(r.alpha_gt_2t) + "," + (r.delta_lt_d ? "1" : "0") + "," + cell(r.has_r_edhc) + "," +
           cell(r.violation_lower) + "," + cell(r.violation_upper);
  }
  const auto& c = report.config;
  const auto samples = static_cast<double>(report.records.size());
  const auto available = report.a_r_available();
  out += "\n# n=" + std::to_string(c.n) + " p=" + fmt_real(c.p) + " r=" + std::to_string(c.r) +
         " samples=" + std::to_string(c.samples) + " seed=" + std::to_string(c.seed) +
         " t=" + std::to_string(report.t) + " d=" + std::to_string(report.d);
  out += "\n# delta_zero=" + std::to_string(report.delta_zero_count());
  out += "\n# a_r_available=" + std::to_string(available);
  out += "\n# not_a_r=" + std::to_string(report.not_a_r_count());
  out += "\n# freq_delta_zero=" + fmt_real(static_cast<double>(report.delta_zero_count()) / samples);
  out += "\n# freq_not_a_r=" +
         (available ? fmt_real(static_cast<double>(report.not_a_r_count()) / static_cast<double>(available)) : "NA");
  out += "\n# isolated_floor=" + fmt_real(report.isolated_floor());
  out += "\n# violations_lower=" + std::to_string(report.violations_lower());
  out += "\n# violations_upper=" + std::to_string(report.violations_upper());
  return out;
}

double m_value(double n, double d) {
  if (!(n > std::exp(std::exp(1.0)))) throw InvalidArgument("m_value needs n > e^e");
  if (!(d > 1.0)) throw InvalidArgument("m_value needs d > 1");
  const double log_n = std::log(n);
  const double log2_n = std::log(log_n);
  const double log3_n = std::log(log2_n);
  return (log_n * log3_n) / (std::log(d) * log2_n);
}

P1Check check_P1(const Graph& g, double d_exp, double m_val, WorkBudget& budget) {
  if (!(d_exp > 0.0) || !(m_val > 0.0)) throw InvalidArgument("check_P1 needs d > 0 and m > 0");
  const std::size_t n = g.order();
  const double bound_real = static_cast<double>(n) / (d_exp * m_val);
  const std::size_t bound = bound_real >= static_cast<double>(n) ? n : static_cast<std::size_t>(std::floor(bound_real));
  P1Check out;
  if (bound < 1) return out;

  std::uint64_t total = 0;
  for (std::size_t s = 1; s <= bound; ++s) total = std::min<std::uint64_t>(UINT64_MAX - 1, total + binomial_saturating(n, s));
  budget.require(total, "P1 subset enumeration");

  const std::size_t words = g.row_words();
  std::vector<Graph::Word> members(words), reach(words);
  for (std::size_t s = 1; s <= bound; ++s) {
    std::vector<std::size_t> pick(s);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      budget.tick("P1 subset enumeration");
      std::fill(members.begin(), members.end(), 0);
      std::fill(reach.begin(), reach.end(), 0);
      for (auto v : pick) {
        members[v / Graph::kWordBits] |= Graph::Word{1} << (v % Graph::kWordBits);
        auto row = g.row(static_cast<Vertex>(v));
        for (std::size_t w = 0; w < words; ++w) reach[w] |= row[w];
      }
      std::size_t outside = 0;
      for (std::size_t w = 0; w < words; ++w) outside += static_cast<std::size_t>(std::popcount(reach[w] & ~members[w]));
      if (static_cast<double>(outside) < d_exp * static_cast<double>(s)) {
        out.holds = false;
        out.witness = VertexSet(std::vector<Vertex>(pick.begin(), pick.end()));
        return out;
      }
      std::size_t i = s;
      while (i > 0 && pick[i - 1] == n - s + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

P1Check check_P1(const Graph& g, double d_exp, double m_val) {
  WorkBudget budget;
  return check_P1(g, d_exp, m_val, budget);
}

P2Check check_P2(const Graph& g, double m_val, WorkBudget& budget) {
  if (!(m_val > 0.0)) throw InvalidArgument("check_P2 needs m > 0");
  const double a_real = std::ceil(static_cast<double>(g.order()) / (4130.0 * m_val));
  P2Check out;
  out.side = std::max<std::size_t>(1, static_cast<std::size_t>(a_real));
  out.witness = has_bipartite_hole(g, out.side, out.side, budget);
  out.holds = !out.witness.has_value();
  return out;
}

P2Check check_P2(const Graph& g, double m_val) {
  WorkBudget budget;
  return check_P2(g, m_val, budget);
}

}  // namespace bhole
