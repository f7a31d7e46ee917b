#pragma once

#include <cstdint>
#include <string_view>

#include "bhole/graph.hpp"

namespace bhole {

Graph complete_graph(std::size_t n);
/// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// Outer 5-cycle 0..4, spokes i~i+5, inner pentagram 5+i ~ 5+(i+2)%5.
Graph petersen_graph();

/// The graph on {a} ∪ B ∪ C ∪ D with |B| = k+l, |C| = k, |D| = l+1: a joined
/// to B, B joined to C, C joined to D, B and D cliques, C independent.
/// Labels: a = 0, then B, C, D in order. Requires l >= 1 and k >= l+3.
Graph fan_example(std::size_t k, std::size_t l);

/// G(n, p). Draws one variate per unordered pair in lexicographic order from
/// mt19937_64(seed); the pair is an edge iff the 53-bit uniform is below p.
Graph gnp(std::size_t n, double p, std::uint64_t seed);

/// Builds a graph from a family expression, e.g. "complete 4",
/// "bipartite 2 3", "gnp 10 0.5 42", "complement-of(bipartite 2 3)",
/// "disjoint-union(complete 3, complete 3)", "fan-example 4 1", "petersen".
Graph generate(std::string_view spec);

}  // namespace bhole
