#pragma once

#include <deque>
#include <optional>
#include <variant>
#include <vector>

#include "bhole/cycle.hpp"
#include "bhole/graph.hpp"
#include "bhole/holes.hpp"

namespace bhole {

/// A path in a fixed graph, with O(1) membership. Positions are 0-based.
class PathState {
 public:
  /// Throws ContractError unless `order` is a path of g with at least 2 vertices.
  PathState(const Graph& g, std::vector<Vertex> order);

  const Graph& graph() const noexcept { return *g_; }
  std::size_t size() const noexcept { return order_.size(); }
  Vertex operator[](std::size_t pos) const { return order_[pos]; }
  Vertex front() const { return order_.front(); }
  Vertex back() const { return order_.back(); }
  bool contains(Vertex v) const { return on_path_[static_cast<std::size_t>(v)] != 0; }
  std::vector<Vertex> vertices() const { return {order_.begin(), order_.end()}; }

  /// Vertex must be off the path and adjacent to the current end.
  void push_front(Vertex v);
  void push_back(Vertex v);

  /// True when neither endpoint has a neighbour off the path.
  bool is_maximal() const;

 private:
  const Graph* g_;
  std::deque<Vertex> order_;
  std::vector<char> on_path_;
};

/// Either a Hamilton cycle or a certificate that alpha-tilde exceeds δ.
struct HamResult {
  std::variant<CycleSeq, HoleCertificate> value;

  bool is_cycle() const noexcept { return std::holds_alternative<CycleSeq>(value); }
  const CycleSeq& cycle() const { return std::get<CycleSeq>(value); }
  const HoleCertificate& certificate() const { return std::get<HoleCertificate>(value); }
};

/// Grows the path at either end until both endpoints have every neighbour on
/// it. Tries the front first, taking the lowest-id outside neighbour.
PathState extend_maximal(const Graph& g, PathState p);

/// Closes a maximal path into a cycle on the same vertices.
///
/// With positions 0..m-1, I = positions of neighbours of the first vertex and
/// J = positions of neighbours of the last, the rewirings tried in order are:
///   direct: first ~ last.
///   single flip: some x in I with x-1 in J.
///   nested double flip: x in I, y in J, x <= y, with P[x-1] ~ P[y+1].
///   crossing double flip: x in I, y in J, y < x, with P[x+1] ~ P[y+1].
/// Ties go to the lowest (x, y). One pass over I × J covers every split point
/// of the path at once.
std::optional<CycleSeq> try_close(const Graph& g, const PathState& p);

/// Certificate with k = δ + 1 read off a maximal path that try_close could
/// not close. Each emitted pair is checked against g before returning.
HoleCertificate extract_certificate(const Graph& g, const PathState& p);

/// Certificate with k = δ + 2 built from the two components holding the
/// smallest labels. Throws InvalidArgument if g is connected.
HoleCertificate disconnected_certificate(const Graph& g);

/// Attaches the lowest outside vertex y (then lowest cycle vertex x ~ y) and
/// returns the path y, x, then around the cycle from x.
PathState reopen_cycle(const Graph& g, const CycleSeq& c);

/// Runs the path-extension / closure loop. Requires n >= 3; O(n^3).
/// A returned cycle is in canonical order.
HamResult find_hamilton(const Graph& g);

}  // namespace bhole
