// bhole command-line front end. Talks to the library only through bhole.h.
//
// Exit codes: 0 success (hamilton: cycle found), 1 parse/usage/verification
// error, 2 hamilton returned a certificate, 3 size guard or budget abort.

#include <bhole/bhole.h>

#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCertificate = 2;
constexpr int kExitTooLarge = 3;

struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void fail_status(bh_status status) {
  throw Failure{status == BH_ERR_TOO_LARGE ? kExitTooLarge : kExitError,
                std::string(bh_status_name(status)) + ": " + bh_last_error()};
}

void check(bh_status status) {
  if (status != BH_OK) fail_status(status);
}

[[noreturn]] void usage(const std::string& message) { throw Failure{kExitError, "usage error: " + message}; }

struct StringDeleter {
  void operator()(char* s) const { bh_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct GraphDeleter {
  void operator()(bh_graph* g) const { bh_graph_free(g); }
};
using OwnedGraph = std::unique_ptr<bh_graph, GraphDeleter>;

template <typename Fn>
std::string take_string(Fn&& fn) {
  char* raw = nullptr;
  check(fn(&raw));
  OwnedString owned(raw);
  return owned.get();
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitError, "cannot open " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kExitError, "cannot write " + path.string()};
  out << body << '\n';
}

void emit(const std::string& out_path, const std::string& body) {
  if (out_path.empty()) {
    std::cout << body << '\n';
  } else {
    write_file(out_path, body);
  }
}

std::filesystem::path output_dir(const std::string& dir) {
  std::filesystem::path p(dir);
  std::error_code ec;
  std::filesystem::create_directories(p, ec);
  if (ec) throw Failure{kExitError, "cannot create directory " + dir + ": " + ec.message()};
  return p;
}

OwnedGraph load_graph(const std::string& path) {
  const auto body = read_input(path);
  bh_graph* g = nullptr;
  check(bh_graph_parse(body.c_str(), &g));
  return OwnedGraph(g);
}

// ---- gen ----

struct GenOptions {
  std::string family;
  std::optional<std::int64_t> n, k, l, a, b;
  std::optional<double> p;
  std::optional<std::uint64_t> seed;
  std::string out;
};

std::string family_spec(const GenOptions& o) {
  if (o.family.find_first_of("( ") != std::string::npos) return o.family;
  auto need = [&](const std::optional<std::int64_t>& v, const char* flag) {
    if (!v) usage("--family " + o.family + " requires " + flag);
    return std::to_string(*v);
  };
  if (o.family == "complete" || o.family == "cycle" || o.family == "path") return o.family + " " + need(o.n, "--n");
  if (o.family == "bipartite") return "bipartite " + need(o.a, "--a") + " " + need(o.b, "--b");
  if (o.family == "petersen") return "petersen";
  if (o.family == "fan-example") return "fan-example " + need(o.k, "--k") + " " + need(o.l, "--l");
  if (o.family == "gnp") {
    if (!o.p) usage("--family gnp requires --p");
    if (!o.seed) usage("--family gnp requires --seed");
    std::ostringstream p;
    p.precision(17);
    p << *o.p;
    return "gnp " + need(o.n, "--n") + " " + p.str() + " " + std::to_string(*o.seed);
  }
  if (o.family == "complement-of" || o.family == "disjoint-union")
    usage(o.family + " takes graph expressions, e.g. --family 'complement-of(bipartite 2 3)'");
  usage("unknown family '" + o.family + "'");
}

int run_gen(const GenOptions& o) {
  bh_graph* raw = nullptr;
  check(bh_graph_generate(family_spec(o).c_str(), &raw));
  OwnedGraph g(raw);
  emit(o.out, take_string([&](char** s) { return bh_graph_serialize(g.get(), s); }));
  return kExitOk;
}

// ---- analyze ----

struct AnalyzeOptions {
  std::string input;
  bool exact = false;
  bool force = false;
  std::uint64_t budget = BH_DEFAULT_BUDGET;
};

int run_analyze(const AnalyzeOptions& o) {
  auto g = load_graph(o.input);
  std::int64_t delta = 0;
  check(bh_graph_min_degree(g.get(), &delta));
  std::cout << bh_graph_order(g.get()) << ' ' << bh_graph_size(g.get()) << ' ' << delta << '\n';
  if (o.exact) {
    std::int64_t alpha = 0, alpha_tilde = 0, kappa = 0;
    check(bh_independence_number(g.get(), o.budget, &alpha));
    check(bh_alpha_tilde_exact(g.get(), o.budget, o.force ? 0 : 1, &alpha_tilde));
    check(bh_vertex_connectivity(g.get(), o.budget, &kappa));
    std::cout << alpha << ' ' << alpha_tilde << ' ' << kappa << '\n';
  }
  return kExitOk;
}

// ---- hamilton ----

struct HamiltonOptions {
  std::string input;
  std::string out_dir;
};

int run_hamilton(const HamiltonOptions& o) {
  auto g = load_graph(o.input);
  bh_ham_result* raw = nullptr;
  check(bh_find_hamilton(g.get(), &raw));
  std::unique_ptr<bh_ham_result, void (*)(bh_ham_result*)> result(raw, bh_ham_result_free);
  const bool cycle = bh_ham_result_is_cycle(result.get()) != 0;
  const auto body = take_string([&](char** s) { return bh_ham_result_format(result.get(), s); });
  if (o.out_dir.empty()) {
    std::cout << body << '\n';
  } else {
    write_file(output_dir(o.out_dir) / (cycle ? "answer.cycle" : "answer.cert"), body);
  }
  return cycle ? kExitOk : kExitCertificate;
}

// ---- disjoint ----

struct DisjointOptions {
  std::string input;
  std::optional<std::int64_t> r_cap;
  std::string out_dir;
};

int run_disjoint(const DisjointOptions& o) {
  if (o.r_cap && *o.r_cap < 0) usage("--r must be non-negative");
  auto g = load_graph(o.input);
  bh_disjoint_result* raw = nullptr;
  check(bh_find_disjoint(g.get(), o.r_cap.value_or(-1), &raw));
  std::unique_ptr<bh_disjoint_result, void (*)(bh_disjoint_result*)> result(raw, bh_disjoint_result_free);
  const auto bundle = take_string([&](char** s) { return bh_disjoint_format_bundle(result.get(), s); });
  if (o.out_dir.empty()) {
    std::cout << bundle << '\n';
    return kExitOk;
  }
  const auto dir = output_dir(o.out_dir);
  write_file(dir / "answer.bundle", bundle);
  for (std::size_t i = 0; i < bh_disjoint_cycle_count(result.get()); ++i)
    write_file(dir / ("cycle_" + std::to_string(i + 1) + ".cycle"),
               take_string([&](char** s) { return bh_disjoint_format_cycle(result.get(), i, s); }));
  if (!bh_disjoint_capped(result.get())) {
    write_file(dir / "residual.cert", take_string([&](char** s) { return bh_disjoint_format_residual(result.get(), s); }));
    write_file(dir / "answer.cert", take_string([&](char** s) { return bh_disjoint_format_translated(result.get(), s); }));
  }
  std::cout << take_string([&](char** s) { return bh_disjoint_format_summary(result.get(), s); }) << '\n';
  return kExitOk;
}

// ---- reduce ----

struct ReduceOptions {
  std::string input;
  std::string out;
};

int run_reduce(const ReduceOptions& o) {
  const auto body = read_input(o.input);
  bh_graph* raw = nullptr;
  check(bh_reduce_bcbs(body.c_str(), &raw));
  OwnedGraph g(raw);
  emit(o.out, take_string([&](char** s) { return bh_graph_serialize(g.get(), s); }));
  return kExitOk;
}

// ---- experiment ----

struct ExperimentOptions {
  std::int64_t n = 10;
  double p = 0.5;
  std::int64_t r = 1;
  std::int64_t samples = 100;
  std::uint64_t seed = 0;
  std::uint64_t budget = BH_DEFAULT_BUDGET;
  std::int64_t jobs = 1;
  std::string out;
};

int run_experiment(const ExperimentOptions& o) {
  bh_experiment_config cfg{o.n, o.p, o.r, o.samples, o.seed, o.budget, o.jobs};
  emit(o.out, take_string([&](char** s) { return bh_run_experiment(&cfg, s); }));
  return kExitOk;
}

// ---- verify ----

struct VerifyOptions {
  std::string graph;
  std::string artifact;
};

int run_verify(const VerifyOptions& o) {
  auto g = load_graph(o.graph);
  const auto body = read_input(o.artifact);
  bh_artifact_kind kind{};
  std::int64_t value = 0;
  check(bh_verify_text(g.get(), body.c_str(), &kind, &value));
  switch (kind) {
    case BH_ARTIFACT_CYCLE: std::cout << "valid Hamilton cycle of length " << value << '\n'; break;
    case BH_ARTIFACT_CERTIFICATE: std::cout << "valid certificate: alpha-tilde >= " << value << '\n'; break;
    case BH_ARTIFACT_BUNDLE: std::cout << "valid bundle with " << value << " edge-disjoint Hamilton cycles\n"; break;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamilton cycles or bipartite-hole certificates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(bh_version()));

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a graph from a named family");
  gen_cmd->add_option("--family", gen.family,
                      "complete | bipartite | cycle | path | petersen | fan-example | gnp | "
                      "'complement-of(<spec>)' | 'disjoint-union(<spec>, <spec>)'")
      ->required();
  gen_cmd->add_option("--n", gen.n, "vertex count");
  gen_cmd->add_option("--p", gen.p, "edge probability (gnp)");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed (gnp)");
  gen_cmd->add_option("--k", gen.k, "fan-example k");
  gen_cmd->add_option("--l", gen.l, "fan-example l");
  gen_cmd->add_option("--a", gen.a, "bipartite part size a");
  gen_cmd->add_option("--b", gen.b, "bipartite part size b");
  gen_cmd->add_option("--out", gen.out, "output file (default: stdout)");

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Print 'n m delta' (and 'alpha alpha_tilde kappa' with --exact)");
  analyze_cmd->add_option("graph", analyze.input, "graph file (default: stdin)");
  analyze_cmd->add_flag("--exact", analyze.exact, "also compute exact alpha, alpha-tilde, kappa");
  analyze_cmd->add_flag("--force", analyze.force, "lift the 20-vertex guard on exact alpha-tilde");
  analyze_cmd->add_option("--budget", analyze.budget, "work budget for exact searches");

  HamiltonOptions hamilton;
  auto* hamilton_cmd = app.add_subcommand("hamilton", "Find a Hamilton cycle or a certificate alpha-tilde > delta");
  hamilton_cmd->add_option("graph", hamilton.input, "graph file (default: stdin)");
  hamilton_cmd->add_option("--out", hamilton.out_dir, "directory for answer.cycle / answer.cert");

  DisjointOptions disjoint;
  auto* disjoint_cmd = app.add_subcommand("disjoint", "Extract edge-disjoint Hamilton cycles plus certificates");
  disjoint_cmd->add_option("graph", disjoint.input, "graph file (default: stdin)");
  disjoint_cmd->add_option("--r", disjoint.r_cap, "stop after this many cycles");
  disjoint_cmd->add_option("--out", disjoint.out_dir, "directory for the bundle and per-item files");

  ReduceOptions reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Map a balanced biclique instance to a bipartite-hole-number graph");
  reduce_cmd->add_option("instance", reduce.input, "instance file (default: stdin)");
  reduce_cmd->add_option("--out", reduce.out, "output file (default: stdout)");

  ExperimentOptions experiment;
  auto* experiment_cmd = app.add_subcommand("experiment", "Monte-Carlo check of the G(n,p) event sandwich");
  experiment_cmd->add_option("--n", experiment.n, "vertex count");
  experiment_cmd->add_option("--p", experiment.p, "edge probability");
  experiment_cmd->add_option("--r", experiment.r, "number of edge-disjoint Hamilton cycles");
  experiment_cmd->add_option("--samples", experiment.samples, "number of samples");
  experiment_cmd->add_option("--seed", experiment.seed, "base seed");
  experiment_cmd->add_option("--budget", experiment.budget, "per-sample oracle budget");
  experiment_cmd->add_option("--jobs", experiment.jobs, "worker threads");
  experiment_cmd->add_option("--out", experiment.out, "CSV output file (default: stdout)");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a cycle, certificate, or disjoint bundle against a graph");
  verify_cmd->add_option("graph", verify.graph, "graph file")->required();
  verify_cmd->add_option("artifact", verify.artifact, "cycle / certificate / bundle file (default: stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "bhole: usage error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*analyze_cmd) return run_analyze(analyze);
    if (*hamilton_cmd) return run_hamilton(hamilton);
    if (*disjoint_cmd) return run_disjoint(disjoint);
    if (*reduce_cmd) return run_reduce(reduce);
    if (*experiment_cmd) return run_experiment(experiment);
    if (*verify_cmd) return run_verify(verify);
  } catch (const Failure& f) {
    std::cerr << "bhole: " << f.message << '\n';
    return f.code;
  }
  return kExitError;
}
