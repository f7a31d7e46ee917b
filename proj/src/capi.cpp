#include "bhole/bhole.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "bhole/disjoint.hpp"
#include "bhole/errors.hpp"
#include "bhole/generators.hpp"
#include "bhole/hamilton.hpp"
#include "bhole/hardness.hpp"
#include "bhole/holes.hpp"
#include "bhole/oracle.hpp"
#include "bhole/randomlab.hpp"

struct bh_graph {
  bhole::Graph g;
};

struct bh_ham_result {
  bhole::HamResult r;
};

struct bh_disjoint_result {
  bhole::DisjointResult r;
};

namespace {

thread_local std::string last_error;

bh_status fail(bh_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename Fn>
bh_status guarded(Fn&& fn) noexcept {
  try {
    last_error.clear();
    fn();
    return BH_OK;
  } catch (const bhole::ParseError& e) {
    return fail(BH_ERR_PARSE, e.what());
  } catch (const bhole::InvalidArgument& e) {
    return fail(BH_ERR_INVALID_ARGUMENT, e.what());
  } catch (const bhole::InstanceTooLarge& e) {
    return fail(BH_ERR_TOO_LARGE, e.what());
  } catch (const bhole::VerificationError& e) {
    return fail(BH_ERR_VERIFY, e.what());
  } catch (const bhole::ContractError& e) {
    return fail(BH_ERR_CONTRACT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BH_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BH_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(BH_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw bhole::InvalidArgument(std::string(what) + " is null");
}

char* dup(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

std::string_view first_content_line(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') return line.substr(first);
    pos = end + 1;
  }
  return {};
}

}  // namespace

extern "C" {

const char* bh_version(void) { return "1.0.0"; }

const char* bh_last_error(void) { return last_error.c_str(); }

const char* bh_status_name(bh_status status) {
  switch (status) {
    case BH_OK: return "ok";
    case BH_ERR_PARSE: return "parse error";
    case BH_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BH_ERR_TOO_LARGE: return "instance too large";
    case BH_ERR_VERIFY: return "verification failed";
    case BH_ERR_CONTRACT: return "contract violation";
    case BH_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void bh_string_free(char* s) { std::free(s); }

bh_status bh_graph_parse(const char* text, bh_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new bh_graph{bhole::parse_graph(text)};
  });
}

bh_status bh_graph_generate(const char* family_spec, bh_graph** out) {
  return guarded([&] {
    require(family_spec, "family_spec");
    require(out, "out");
    *out = new bh_graph{bhole::generate(family_spec)};
  });
}

void bh_graph_free(bh_graph* g) { delete g; }

bh_status bh_graph_serialize(const bh_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = dup(bhole::serialize_graph(g->g));
  });
}

size_t bh_graph_order(const bh_graph* g) { return g ? g->g.order() : 0; }

size_t bh_graph_size(const bh_graph* g) { return g ? g->g.size() : 0; }

bh_status bh_graph_min_degree(const bh_graph* g, int64_t* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = static_cast<int64_t>(bhole::min_degree(g->g));
  });
}

size_t bh_graph_component_count(const bh_graph* g) { return g ? bhole::components(g->g).size() : 0; }

bh_status bh_alpha_tilde_exact(const bh_graph* g, uint64_t budget, int size_guard, int64_t* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    bhole::WorkBudget b(budget);
    *out = bhole::alpha_tilde_exact(g->g, b, size_guard != 0);
  });
}

bh_status bh_independence_number(const bh_graph* g, uint64_t budget, int64_t* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    bhole::WorkBudget b(budget);
    *out = static_cast<int64_t>(bhole::independence_number_exact(g->g, b));
  });
}

bh_status bh_vertex_connectivity(const bh_graph* g, uint64_t budget, int64_t* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    bhole::WorkBudget b(budget);
    *out = static_cast<int64_t>(bhole::vertex_connectivity_exact(g->g, b));
  });
}

bh_status bh_is_hamiltonian_exact(const bh_graph* g, uint64_t budget, int* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    bhole::WorkBudget b(budget);
    *out = bhole::is_hamiltonian_exact(g->g, b).hamiltonian ? 1 : 0;
  });
}

bh_status bh_find_hamilton(const bh_graph* g, bh_ham_result** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = new bh_ham_result{bhole::find_hamilton(g->g)};
  });
}

void bh_ham_result_free(bh_ham_result* r) { delete r; }

int bh_ham_result_is_cycle(const bh_ham_result* r) { return r && r->r.is_cycle() ? 1 : 0; }

int64_t bh_ham_result_certificate_k(const bh_ham_result* r) {
  return r && !r->r.is_cycle() ? r->r.certificate().k : 0;
}

bh_status bh_ham_result_format(const bh_ham_result* r, char** out) {
  return guarded([&] {
    require(r, "result");
    require(out, "out");
    *out = dup(r->r.is_cycle() ? bhole::format_cycle(r->r.cycle()) : bhole::format_certificate(r->r.certificate()));
  });
}

bh_status bh_find_disjoint(const bh_graph* g, int64_t r_cap, bh_disjoint_result** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    std::optional<std::size_t> cap;
    if (r_cap >= 0) cap = static_cast<std::size_t>(r_cap);
    *out = new bh_disjoint_result{bhole::find_edge_disjoint_hamilton(g->g, cap)};
  });
}

void bh_disjoint_result_free(bh_disjoint_result* r) { delete r; }

size_t bh_disjoint_cycle_count(const bh_disjoint_result* r) { return r ? r->r.cycles.size() : 0; }

int64_t bh_disjoint_translated_k(const bh_disjoint_result* r) { return r ? r->r.translated_certificate.k : 0; }

int bh_disjoint_capped(const bh_disjoint_result* r) { return r && r->r.capped ? 1 : 0; }

bh_status bh_disjoint_format_bundle(const bh_disjoint_result* r, char** out) {
  return guarded([&] {
    require(r, "result");
    require(out, "out");
    *out = dup(bhole::format_bundle(r->r));
  });
}

bh_status bh_disjoint_format_summary(const bh_disjoint_result* r, char** out) {
  return guarded([&] {
    require(r, "result");
    require(out, "out");
    *out = dup(bhole::format_summary(r->r));
  });
}

bh_status bh_disjoint_format_cycle(const bh_disjoint_result* r, size_t index, char** out) {
  return guarded([&] {
    require(r, "result");
    require(out, "out");
    if (index >= r->r.cycles.size()) throw bhole::InvalidArgument("cycle index out of range");
    *out = dup(bhole::format_cycle(r->r.cycles[index]));
  });
}

bh_status bh_disjoint_format_residual(const bh_disjoint_result* r, char** out) {
  return guarded([&] {
    require(r, "result");
    require(out, "out");
    if (r->r.capped) throw bhole::InvalidArgument("capped run carries no certificates");
    *out = dup(bhole::format_certificate(r->r.residual_certificate));
  });
}

bh_status bh_disjoint_format_translated(const bh_disjoint_result* r, char** out) {
  return guarded([&] {
    require(r, "result");
    require(out, "out");
    if (r->r.capped) throw bhole::InvalidArgument("capped run carries no certificates");
    *out = dup(bhole::format_certificate(r->r.translated_certificate));
  });
}

bh_status bh_verify_text(const bh_graph* g, const char* artifact, bh_artifact_kind* kind_out, int64_t* value_out) {
  return guarded([&] {
    require(g, "graph");
    require(artifact, "artifact");
    const std::string_view text(artifact);
    const auto head = first_content_line(text);
    bh_artifact_kind kind;
    int64_t value = 0;
    if (head.starts_with("cycle")) {
      kind = BH_ARTIFACT_CYCLE;
      if (kind_out) *kind_out = kind;
      const auto cycle = bhole::parse_cycle(text);
      bhole::validate_hamilton_cycle(g->g, cycle);
      value = static_cast<int64_t>(cycle.length());
    } else if (head.starts_with("alpha-tilde-ge")) {
      kind = BH_ARTIFACT_CERTIFICATE;
      if (kind_out) *kind_out = kind;
      value = bhole::verify_certificate(g->g, bhole::parse_certificate(text));
    } else if (head.starts_with("r=")) {
      kind = BH_ARTIFACT_BUNDLE;
      if (kind_out) *kind_out = kind;
      const auto bundle = bhole::parse_bundle(text);
      bhole::verify_disjoint_result(g->g, bundle);
      value = static_cast<int64_t>(bundle.cycles.size());
    } else {
      throw bhole::ParseError(0, "unrecognised artifact: expected a cycle, certificate, or bundle");
    }
    if (value_out) *value_out = value;
  });
}

bh_status bh_reduce_bcbs(const char* instance_text, bh_graph** out) {
  return guarded([&] {
    require(instance_text, "instance_text");
    require(out, "out");
    *out = new bh_graph{bhole::bcbs_to_bhn(bhole::parse_bipartite_instance(instance_text))};
  });
}

bh_status bh_check_reduction(const char* instance_text, uint64_t budget, int* equivalent, int* has_biclique,
                             int* alpha_tilde_ge_2k) {
  return guarded([&] {
    require(instance_text, "instance_text");
    require(equivalent, "equivalent");
    bhole::WorkBudget b(budget);
    const auto check = bhole::check_reduction_equivalence(bhole::parse_bipartite_instance(instance_text), b);
    *equivalent = check.equivalent() ? 1 : 0;
    if (has_biclique) *has_biclique = check.has_biclique ? 1 : 0;
    if (alpha_tilde_ge_2k) *alpha_tilde_ge_2k = check.alpha_tilde_at_least_2k ? 1 : 0;
  });
}

bh_status bh_threshold_params(int64_t n, int64_t r, int64_t* t, int64_t* d) {
  return guarded([&] {
    require(t, "t");
    require(d, "d");
    if (n < 1 || r < 1) throw bhole::InvalidArgument("threshold_params needs n >= 1 and r >= 1");
    const auto params = bhole::threshold_params(static_cast<std::size_t>(n), static_cast<std::size_t>(r));
    *t = static_cast<int64_t>(params.t);
    *d = static_cast<int64_t>(params.d);
  });
}

bh_status bh_run_experiment(const bh_experiment_config* cfg, char** csv_out) {
  return guarded([&] {
    require(cfg, "config");
    require(csv_out, "csv_out");
    if (cfg->n < 0 || cfg->r < 0 || cfg->samples < 0 || cfg->jobs < 0)
      throw bhole::InvalidArgument("experiment parameters must be non-negative");
    bhole::ExperimentConfig c;
    c.n = static_cast<std::size_t>(cfg->n);
    c.p = cfg->p;
    c.r = static_cast<std::size_t>(cfg->r);
    c.samples = static_cast<std::size_t>(cfg->samples);
    c.seed = cfg->seed;
    c.oracle_budget = cfg->oracle_budget;
    c.jobs = static_cast<std::size_t>(cfg->jobs);
    *csv_out = dup(bhole::format_report_csv(bhole::run_experiment(c)));
  });
}

}  // extern "C"
