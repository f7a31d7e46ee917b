#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "bhole/budget.hpp"
#include "bhole/graph.hpp"

namespace bhole {

/// Balanced bipartite graph: parts A = {0..a-1}, B = {a..2a-1}; every edge
/// crosses. `k` is the biclique size asked about.
struct BipartiteInstance {
  Graph graph;
  std::size_t part_size = 0;
  std::size_t k = 1;
};

/// Throws InvalidArgument unless every edge crosses the parts and k >= 1.
BipartiteInstance make_bipartite_instance(Graph graph, std::size_t part_size, std::size_t k);

/// "a b k" (a == b) then edges "u v" with u < a <= v < a + b, one per line.
BipartiteInstance parse_bipartite_instance(std::string_view text);
std::string format_bipartite_instance(const BipartiteInstance& inst);

/// Complement of (G plus a disjoint K_{k-1,2k}). Gadget vertices follow G's,
/// the (k-1)-side first; the image has |V(G)| + 3k - 1 vertices.
Graph bcbs_to_bhn(const BipartiteInstance& inst);

/// Does G contain K_{k,k} with one side in each part? Enumerates k-subsets of A.
bool has_balanced_biclique(const BipartiteInstance& inst, WorkBudget& budget);

struct ReductionCheck {
  bool has_biclique = false;
  bool alpha_tilde_at_least_2k = false;
  bool equivalent() const noexcept { return has_biclique == alpha_tilde_at_least_2k; }
};

/// Evaluates both sides of "K_{k,k} in G iff alpha-tilde(image) >= 2k".
ReductionCheck check_reduction_equivalence(const BipartiteInstance& inst, WorkBudget& budget);
ReductionCheck check_reduction_equivalence(const BipartiteInstance& inst);

}  // namespace bhole
