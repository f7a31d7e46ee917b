#include "bhole/hardness.hpp"

#include <numeric>

#include "bhole/errors.hpp"
#include "bhole/generators.hpp"
#include "bhole/holes.hpp"
#include "text.hpp"

namespace bhole {

BipartiteInstance make_bipartite_instance(Graph graph, std::size_t part_size, std::size_t k) {
  if (k < 1) throw InvalidArgument("biclique size k must be at least 1");
  if (graph.order() != 2 * part_size) throw InvalidArgument("bipartite instance needs two parts of equal size");
  for (const auto& e : graph.edges())
    if (static_cast<std::size_t>(e.u) >= part_size || static_cast<std::size_t>(e.v) < part_size)
      throw InvalidArgument("edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " does not cross the parts");
  return {std::move(graph), part_size, k};
}

BipartiteInstance parse_bipartite_instance(std::string_view input) {
  auto lines = text::content_lines(input);
  if (lines.empty()) throw ParseError(0, "missing header 'a b k'");
  auto header = text::tokens(lines[0].content);
  if (header.size() != 3) throw ParseError(lines[0].number, "header must be 'a b k'");
  const auto a = text::to_int<std::size_t>(header[0], lines[0].number, "part size a");
  const auto b = text::to_int<std::size_t>(header[1], lines[0].number, "part size b");
  const auto k = text::to_int<std::size_t>(header[2], lines[0].number, "k");
  if (a != b) throw ParseError(lines[0].number, "parts must have equal size");
  if (k < 1) throw ParseError(lines[0].number, "k must be at least 1");
  GraphBuilder builder(a + b);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto tok = text::tokens(lines[i].content);
    if (tok.size() != 2) throw ParseError(lines[i].number, "edge line must be 'u v'");
    const auto u = text::to_int<std::int64_t>(tok[0], lines[i].number, "vertex id");
    const auto v = text::to_int<std::int64_t>(tok[1], lines[i].number, "vertex id");
    if (u < 0 || static_cast<std::size_t>(u) >= a || v < static_cast<std::int64_t>(a) ||
        static_cast<std::size_t>(v) >= a + b)
      throw ParseError(lines[i].number, "edge must satisfy u < a <= v < a + b");
    if (!builder.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
      throw ParseError(lines[i].number, "duplicate edge");
  }
  return {std::move(builder).build(), a, k};
}

std::string format_bipartite_instance(const BipartiteInstance& inst) {
  std::string out = std::to_string(inst.part_size) + " " + std::to_string(inst.part_size) + " " + std::to_string(inst.k);
  for (const auto& e : inst.graph.edges()) out += "\n" + std::to_string(e.u) + " " + std::to_string(e.v);
  return out;
}

Graph bcbs_to_bhn(const BipartiteInstance& inst) {
  const std::size_t k = inst.k;
  return complement(disjoint_union(inst.graph, complete_bipartite(k - 1, 2 * k)));
}

bool has_balanced_biclique(const BipartiteInstance& inst, WorkBudget& budget) {
  const std::size_t a = inst.part_size;
  const std::size_t k = inst.k;
  if (k > a) return false;
  budget.require(binomial_saturating(a, k), "balanced biclique enumeration");
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  const auto& g = inst.graph;
  while (true) {
    budget.tick("balanced biclique enumeration");
    std::size_t common = 0;
    for (std::size_t w = a; w < 2 * a; ++w) {
      bool all = true;
      for (auto u : pick)
        if (!g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(w))) {
          all = false;
          break;
        }
      if (all) ++common;
    }
    if (common >= k) return true;
    // Next k-subset of {0..a-1} in lexicographic order.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == a - k + i - 1) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

ReductionCheck check_reduction_equivalence(const BipartiteInstance& inst, WorkBudget& budget) {
  ReductionCheck out;
  out.has_biclique = has_balanced_biclique(inst, budget);
  const Graph image = bcbs_to_bhn(inst);
  out.alpha_tilde_at_least_2k = find_certificate(image, static_cast<std::int64_t>(2 * inst.k), budget).has_value();
  return out;
}

ReductionCheck check_reduction_equivalence(const BipartiteInstance& inst) {
  WorkBudget budget;
  return check_reduction_equivalence(inst, budget);
}

}  // namespace bhole
