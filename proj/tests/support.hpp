#pragma once

#include <bhole/graph.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace bhole::testing {

/// Pairs (u, v), u < v, in lexicographic order.
inline std::vector<std::pair<Vertex, Vertex>> vertex_pairs(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return out;
}

/// Bit i of mask selects the i-th lexicographic pair.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  GraphBuilder b(n);
  const auto pairs = vertex_pairs(n);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (mask >> i & 1) b.add_edge(pairs[i].first, pairs[i].second);
  return std::move(b).build();
}

/// Calls fn on every labelled graph with n vertices.
template <typename Fn>
void for_each_graph(std::size_t n, Fn&& fn) {
  const std::size_t m = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) fn(graph_from_mask(n, mask));
}

}  // namespace bhole::testing
