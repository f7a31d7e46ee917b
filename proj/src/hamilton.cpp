#include "bhole/hamilton.hpp"

#include <algorithm>

#include "bhole/errors.hpp"

namespace bhole {

PathState::PathState(const Graph& g, std::vector<Vertex> order)
    : g_(&g), order_(order.begin(), order.end()), on_path_(g.order(), 0) {
  if (order_.size() < 2) throw ContractError("a path needs at least 2 vertices");
  for (std::size_t i = 0; i < order_.size(); ++i) {
    Vertex v = order_[i];
    if (v < 0 || static_cast<std::size_t>(v) >= g.order())
      throw ContractError("path vertex " + std::to_string(v) + " out of range");
    if (on_path_[static_cast<std::size_t>(v)]) throw ContractError("path repeats vertex " + std::to_string(v));
    on_path_[static_cast<std::size_t>(v)] = 1;
    if (i > 0 && !g.adjacent(order_[i - 1], v))
      throw ContractError("path uses non-edge " + std::to_string(order_[i - 1]) + " " + std::to_string(v));
  }
}

void PathState::push_front(Vertex v) {
  if (contains(v) || !g_->adjacent(v, order_.front())) throw ContractError("invalid front extension");
  order_.push_front(v);
  on_path_[static_cast<std::size_t>(v)] = 1;
}

void PathState::push_back(Vertex v) {
  if (contains(v) || !g_->adjacent(order_.back(), v)) throw ContractError("invalid back extension");
  order_.push_back(v);
  on_path_[static_cast<std::size_t>(v)] = 1;
}

namespace {

std::optional<Vertex> outside_neighbor(const Graph& g, const PathState& p, Vertex end) {
  for (Vertex w : g.neighbors(end))
    if (!p.contains(w)) return w;
  return std::nullopt;
}

struct Positions {
  std::vector<std::size_t> of_vertex;  // SIZE_MAX off the path
  std::vector<std::size_t> first_nbrs;  // sorted positions of N(first)
  std::vector<std::size_t> last_nbrs;   // sorted positions of N(last)
};

Positions index_path(const Graph& g, const PathState& p) {
  if (!p.is_maximal()) throw ContractError("path is not maximal");
  Positions out;
  out.of_vertex.assign(g.order(), SIZE_MAX);
  for (std::size_t i = 0; i < p.size(); ++i) out.of_vertex[static_cast<std::size_t>(p[i])] = i;
  for (Vertex w : g.neighbors(p.front())) out.first_nbrs.push_back(out.of_vertex[static_cast<std::size_t>(w)]);
  for (Vertex w : g.neighbors(p.back())) out.last_nbrs.push_back(out.of_vertex[static_cast<std::size_t>(w)]);
  std::sort(out.first_nbrs.begin(), out.first_nbrs.end());
  std::sort(out.last_nbrs.begin(), out.last_nbrs.end());
  return out;
}

// Appends P[from..to] walking forward (from <= to) or backward (from > to).
void append_run(const PathState& p, std::size_t from, std::size_t to, std::vector<Vertex>& out) {
  if (from <= to) {
    for (std::size_t i = from; i <= to; ++i) out.push_back(p[i]);
  } else {
    for (std::size_t i = from + 1; i-- > to;) out.push_back(p[i]);
  }
}

}  // namespace

bool PathState::is_maximal() const {
  return !outside_neighbor(*g_, *this, front()) && !outside_neighbor(*g_, *this, back());
}

PathState extend_maximal(const Graph& g, PathState p) {
  while (true) {
    if (auto w = outside_neighbor(g, p, p.front())) {
      p.push_front(*w);
    } else if (auto w2 = outside_neighbor(g, p, p.back())) {
      p.push_back(*w2);
    } else {
      return p;
    }
  }
}

std::optional<CycleSeq> try_close(const Graph& g, const PathState& p) {
  const std::size_t m = p.size();
  if (m < 3) throw ContractError("try_close needs a path with at least 3 vertices");
  const std::size_t last = m - 1;
  if (g.adjacent(p.front(), p.back())) return CycleSeq{p.vertices()};

  const auto pos = index_path(g, p);
  const auto& first_nbrs = pos.first_nbrs;
  const auto& last_nbrs = pos.last_nbrs;
  std::vector<Vertex> order;
  order.reserve(m);

  // Single flip: P[0], P[x..last], P[x-1..1].
  for (std::size_t x : first_nbrs) {
    if (g.adjacent(p[x - 1], p.back())) {
      append_run(p, 0, 0, order);
      append_run(p, x, last, order);
      append_run(p, x - 1, 1, order);
      return CycleSeq{std::move(order)};
    }
  }

  // Nested double flip: P[0..x-1], P[y+1..last], P[y..x].
  for (std::size_t x : first_nbrs) {
    for (auto it = std::lower_bound(last_nbrs.begin(), last_nbrs.end(), x); it != last_nbrs.end(); ++it) {
      const std::size_t y = *it;
      if (g.adjacent(p[x - 1], p[y + 1])) {
        append_run(p, 0, x - 1, order);
        append_run(p, y + 1, last, order);
        append_run(p, y, x, order);
        return CycleSeq{std::move(order)};
      }
    }
  }

  // Crossing double flip: P[0..y], P[last..x+1], P[y+1..x].
  for (std::size_t x : first_nbrs) {
    for (std::size_t y : last_nbrs) {
      if (y >= x) break;
      if (g.adjacent(p[x + 1], p[y + 1])) {
        append_run(p, 0, y, order);
        append_run(p, last, x + 1, order);
        append_run(p, y + 1, x, order);
        return CycleSeq{std::move(order)};
      }
    }
  }
  return std::nullopt;
}

HoleCertificate extract_certificate(const Graph& g, const PathState& p) {
  if (p.size() < 3) throw ContractError("extract_certificate needs a path with at least 3 vertices");
  if (g.adjacent(p.front(), p.back())) throw ContractError("extract_certificate: path endpoints are adjacent");
  const auto pos = index_path(g, p);
  const auto& first_nbrs = pos.first_nbrs;
  const auto& last_nbrs = pos.last_nbrs;
  const auto delta = min_degree(g);
  const std::size_t k = delta + 1;

  HoleCertificate cert{static_cast<std::int64_t>(k), {}};
  for (std::size_t s = 1; s <= k / 2; ++s) {
    const std::size_t t = k - s;
    if (s > first_nbrs.size()) throw ContractError("extract_certificate: first vertex has fewer than s neighbours");
    const std::size_t split = first_nbrs[s - 1];

    std::vector<Vertex> before_first;  // predecessors of the first s neighbours of P[0]
    for (std::size_t i = 0; i < s; ++i) before_first.push_back(p[first_nbrs[i] - 1]);
    std::vector<Vertex> after_last_right;  // successors of N(last) at positions >= split
    std::vector<Vertex> after_last_left;   // successors of N(last) at positions < split
    for (std::size_t y : last_nbrs) (y >= split ? after_last_right : after_last_left).push_back(p[y + 1]);

    if (after_last_right.size() >= t) {
      cert.pairs.push_back({VertexSet(std::move(before_first)), VertexSet(std::move(after_last_right)).lowest(t)});
      continue;
    }
    std::vector<Vertex> after_first{p.front()};  // P[0] plus successors of N(first) at positions >= split
    for (std::size_t x : first_nbrs)
      if (x >= split) after_first.push_back(p[x + 1]);
    if (after_last_left.size() < s || after_first.size() < t)
      throw ContractError("extract_certificate: split " + std::to_string(s) + " has too few vertices");
    cert.pairs.push_back({VertexSet(std::move(after_last_left)).lowest(s), VertexSet(std::move(after_first)).lowest(t)});
  }

  try {
    verify_certificate(g, cert);
  } catch (const VerificationError& e) {
    throw ContractError(std::string("extract_certificate produced an invalid hole: ") + e.what());
  }
  return cert;
}

HoleCertificate disconnected_certificate(const Graph& g) {
  auto comps = components(g);
  if (comps.size() < 2) throw InvalidArgument("disconnected_certificate: graph is connected");
  const auto delta = min_degree(g);
  const std::size_t k = delta + 2;
  HoleCertificate cert{static_cast<std::int64_t>(k), {}};
  for (std::size_t i = 1; i <= k / 2; ++i) {
    if (comps[0].size() < i || comps[1].size() < k - i)
      throw ContractError("disconnected_certificate: component smaller than δ + 1");
    cert.pairs.push_back({comps[0].lowest(i), comps[1].lowest(k - i)});
  }
  return cert;
}

PathState reopen_cycle(const Graph& g, const CycleSeq& c) {
  std::vector<std::size_t> at(g.order(), SIZE_MAX);
  for (std::size_t i = 0; i < c.order.size(); ++i) at[static_cast<std::size_t>(c.order[i])] = i;
  for (std::size_t y = 0; y < g.order(); ++y) {
    if (at[y] != SIZE_MAX) continue;
    for (Vertex x : g.neighbors(static_cast<Vertex>(y))) {
      const auto start = at[static_cast<std::size_t>(x)];
      if (start == SIZE_MAX) continue;
      std::vector<Vertex> order{static_cast<Vertex>(y)};
      order.reserve(c.order.size() + 1);
      for (std::size_t i = 0; i < c.order.size(); ++i) order.push_back(c.order[(start + i) % c.order.size()]);
      return PathState(g, std::move(order));
    }
  }
  throw ContractError("reopen_cycle: no edge leaves the cycle");
}

HamResult find_hamilton(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) throw InvalidArgument("find_hamilton needs at least 3 vertices");
  if (!is_connected(g)) return {disconnected_certificate(g)};

  PathState path(g, {0, g.neighbors(0).front()});
  while (true) {
    path = extend_maximal(g, std::move(path));
    auto cycle = try_close(g, path);
    if (!cycle) return {extract_certificate(g, path)};
    if (cycle->length() == n) return {cycle->canonical()};
    path = reopen_cycle(g, *cycle);
  }
}

}  // namespace bhole
