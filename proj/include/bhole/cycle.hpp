#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bhole/graph.hpp"

namespace bhole {

/// Cyclic vertex sequence; order.back() is joined to order.front().
struct CycleSeq {
  std::vector<Vertex> order;

  std::size_t length() const noexcept { return order.size(); }
  /// Edges u < v, sorted.
  std::vector<Edge> edges() const;
  /// Rotated to start at the lowest id and oriented toward its smaller neighbour.
  CycleSeq canonical() const;

  friend bool operator==(const CycleSeq&, const CycleSeq&) = default;
};

/// Throws VerificationError unless `c` is a cycle of g: length >= 3, distinct
/// in-range vertices, consecutive vertices adjacent.
void validate_cycle(const Graph& g, const CycleSeq& c);
/// validate_cycle plus: visits every vertex of g.
void validate_hamilton_cycle(const Graph& g, const CycleSeq& c);

/// "cycle n" then the canonical vertex order. No trailing newline.
std::string format_cycle(const CycleSeq& c);
CycleSeq parse_cycle(std::string_view text);

}  // namespace bhole
