#pragma once

// Exhaustive exact solvers. Test and experiment ground truth only; every one
// either answers exactly or throws InstanceTooLarge.

#include <cstdint>
#include <optional>

#include "bhole/budget.hpp"
#include "bhole/cycle.hpp"
#include "bhole/graph.hpp"

namespace bhole {

struct HamiltonDecision {
  bool hamiltonian = false;
  std::optional<CycleSeq> witness;
};

/// Backtracking from vertex 0 with degree and reachability pruning. n >= 3.
HamiltonDecision is_hamiltonian_exact(const Graph& g, WorkBudget& budget);
HamiltonDecision is_hamiltonian_exact(const Graph& g);

/// Maximum independent set size by branch and bound.
std::size_t independence_number_exact(const Graph& g, WorkBudget& budget);
std::size_t independence_number_exact(const Graph& g);

/// n - 1 for complete graphs; otherwise the minimum, over non-adjacent pairs,
/// of the number of internally disjoint paths (unit vertex-capacity flow).
std::size_t vertex_connectivity_exact(const Graph& g, WorkBudget& budget);
std::size_t vertex_connectivity_exact(const Graph& g);

/// Whether g holds r pairwise edge-disjoint Hamilton cycles. Nested
/// backtracking over cycle sets; meant for n <= 10, r <= 2.
bool exists_edge_disjoint_hc_exact(const Graph& g, std::size_t r, WorkBudget& budget);
bool exists_edge_disjoint_hc_exact(const Graph& g, std::size_t r);

}  // namespace bhole
