#include "bhole/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <queue>

#include "bhole/errors.hpp"

namespace bhole {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaskLimit = 64;

Mask bit(std::size_t v) { return Mask{1} << v; }

std::vector<Mask> masks_of(const Graph& g, const char* what) {
  if (g.order() > kMaskLimit)
    throw InstanceTooLarge(std::string("instance too large: ") + what + " oracle supports at most 64 vertices");
  std::vector<Mask> adj(g.order(), 0);
  for (std::size_t v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) adj[v] |= bit(static_cast<std::size_t>(w));
  return adj;
}

// Enumerates Hamilton cycles of the mask graph, each undirected cycle once,
// as vertex orders starting at 0 with order[1] < order.back(). Cycles not
// lexicographically above `floor` are skipped. `visit` returns true to stop.
class HamiltonSearch {
 public:
  HamiltonSearch(const std::vector<Mask>& adj, WorkBudget& budget, const std::vector<Vertex>* floor,
                 std::function<bool(const std::vector<Vertex>&)> visit)
      : adj_(adj), n_(adj.size()), full_(n_ == 64 ? ~Mask{0} : bit(n_) - 1), budget_(budget), floor_(floor),
        visit_(std::move(visit)) {}

  bool run() {
    if (n_ < 3) return false;
    for (Mask a : adj_)
      if (std::popcount(a) < 2) return false;
    path_.assign(1, 0);
    return extend(0, bit(0), floor_ != nullptr);
  }

 private:
  bool viable(std::size_t tail, Mask visited) const {
    const Mask remaining = full_ & ~visited;
    if (!remaining) return true;
    const Mask ends = bit(tail) | bit(0);
    for (Mask rest = remaining; rest; rest &= rest - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(rest));
      if (std::popcount(adj_[u] & (remaining | ends)) < 2) return false;
    }
    // Everything left must stay reachable from the tail through unvisited vertices.
    Mask reached = adj_[tail] & remaining;
    Mask frontier = reached;
    while (frontier) {
      const auto u = static_cast<std::size_t>(std::countr_zero(frontier));
      frontier &= frontier - 1;
      const Mask fresh = adj_[u] & remaining & ~reached;
      reached |= fresh;
      frontier |= fresh;
    }
    return reached == remaining;
  }

  // `tight`: the path so far equals the floor's prefix.
  bool extend(std::size_t tail, Mask visited, bool tight) {
    budget_.tick("Hamilton cycle search");
    if (path_.size() == n_) {
      if (!(adj_[tail] & bit(0))) return false;
      if (path_[1] > path_.back()) return false;
      if (tight) return false;  // equal to the floor
      return visit_(path_);
    }
    if (!viable(tail, visited)) return false;
    const std::size_t depth = path_.size();
    for (Mask next = adj_[tail] & ~visited; next; next &= next - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(next));
      bool child_tight = false;
      if (tight) {
        const auto bound = static_cast<std::size_t>((*floor_)[depth]);
        if (v < bound) continue;
        child_tight = v == bound;
      }
      path_.push_back(static_cast<Vertex>(v));
      if (extend(v, visited | bit(v), child_tight)) return true;
      path_.pop_back();
    }
    return false;
  }

  const std::vector<Mask>& adj_;
  std::size_t n_;
  Mask full_;
  WorkBudget& budget_;
  const std::vector<Vertex>* floor_;
  std::function<bool(const std::vector<Vertex>&)> visit_;
  std::vector<Vertex> path_;
};

bool disjoint_cycles(std::vector<Mask>& adj, std::size_t r, const std::vector<Vertex>* floor, WorkBudget& budget) {
  if (r == 0) return true;
  for (Mask a : adj)
    if (static_cast<std::size_t>(std::popcount(a)) < 2 * r) return false;
  HamiltonSearch search(adj, budget, floor, [&](const std::vector<Vertex>& cycle) {
    auto reduced = adj;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto a = static_cast<std::size_t>(cycle[i]);
      const auto b = static_cast<std::size_t>(cycle[(i + 1) % cycle.size()]);
      reduced[a] &= ~bit(b);
      reduced[b] &= ~bit(a);
    }
    // Later cycles are taken in increasing lexicographic order.
    return disjoint_cycles(reduced, r - 1, &cycle, budget);
  });
  return search.run();
}

struct FlowNetwork {
  struct Arc {
    std::size_t to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<std::size_t>> out;

  explicit FlowNetwork(std::size_t nodes) : out(nodes) {}

  void add(std::size_t a, std::size_t b, int cap) {
    out[a].push_back(arcs.size());
    arcs.push_back({b, cap});
    out[b].push_back(arcs.size());
    arcs.push_back({a, 0});
  }
};

// Number of internally vertex-disjoint s-t paths, stopping once `stop_at` is reached.
std::size_t local_connectivity(const Graph& g, Vertex s, Vertex t, std::size_t stop_at, WorkBudget& budget) {
  const std::size_t n = g.order();
  const int big = static_cast<int>(n) + 1;
  FlowNetwork net(2 * n);
  for (std::size_t v = 0; v < n; ++v)
    net.add(2 * v, 2 * v + 1, (static_cast<Vertex>(v) == s || static_cast<Vertex>(v) == t) ? big : 1);
  for (const auto& e : g.edges()) {
    net.add(2 * static_cast<std::size_t>(e.u) + 1, 2 * static_cast<std::size_t>(e.v), 1);
    net.add(2 * static_cast<std::size_t>(e.v) + 1, 2 * static_cast<std::size_t>(e.u), 1);
  }
  const std::size_t source = 2 * static_cast<std::size_t>(s) + 1;
  const std::size_t sink = 2 * static_cast<std::size_t>(t);
  std::size_t flow = 0;
  std::vector<std::size_t> via(2 * n);
  while (flow < stop_at) {
    budget.tick("vertex connectivity");
    std::fill(via.begin(), via.end(), SIZE_MAX);
    std::queue<std::size_t> queue;
    queue.push(source);
    via[source] = SIZE_MAX - 1;
    while (!queue.empty() && via[sink] == SIZE_MAX) {
      const auto a = queue.front();
      queue.pop();
      for (auto arc : net.out[a]) {
        const auto& edge = net.arcs[arc];
        if (edge.cap > 0 && via[edge.to] == SIZE_MAX) {
          via[edge.to] = arc;
          queue.push(edge.to);
        }
      }
    }
    if (via[sink] == SIZE_MAX) break;
    for (std::size_t node = sink; node != source;) {
      const auto arc = via[node];
      net.arcs[arc].cap -= 1;
      net.arcs[arc ^ 1].cap += 1;
      node = net.arcs[arc ^ 1].to;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

HamiltonDecision is_hamiltonian_exact(const Graph& g, WorkBudget& budget) {
  if (g.order() < 3) throw InvalidArgument("Hamiltonicity oracle needs at least 3 vertices");
  const auto adj = masks_of(g, "Hamiltonicity");
  HamiltonDecision out;
  HamiltonSearch search(adj, budget, nullptr, [&](const std::vector<Vertex>& cycle) {
    out.hamiltonian = true;
    out.witness = CycleSeq{cycle};
    return true;
  });
  search.run();
  return out;
}

HamiltonDecision is_hamiltonian_exact(const Graph& g) {
  WorkBudget budget;
  return is_hamiltonian_exact(g, budget);
}

std::size_t independence_number_exact(const Graph& g, WorkBudget& budget) {
  const auto adj = masks_of(g, "independence number");
  const std::size_t n = adj.size();
  std::size_t best = 0;
  std::function<void(Mask, std::size_t)> branch = [&](Mask cand, std::size_t size) {
    budget.tick("independence number");
    if (!cand) {
      best = std::max(best, size);
      return;
    }
    if (size + static_cast<std::size_t>(std::popcount(cand)) <= best) return;
    const auto v = static_cast<std::size_t>(std::countr_zero(cand));
    if (!(adj[v] & cand)) {
      branch(cand & ~bit(v), size + 1);
      return;
    }
    branch(cand & ~(bit(v) | adj[v]), size + 1);
    branch(cand & ~bit(v), size);
  };
  branch(n == 64 ? ~Mask{0} : bit(n) - 1, 0);
  return best;
}

std::size_t independence_number_exact(const Graph& g) {
  WorkBudget budget;
  return independence_number_exact(g, budget);
}

std::size_t vertex_connectivity_exact(const Graph& g, WorkBudget& budget) {
  const std::size_t n = g.order();
  if (n == 0) throw InvalidArgument("vertex connectivity of the empty graph");
  std::size_t best = n - 1;
  for (std::size_t u = 0; u < n && best > 0; ++u)
    for (std::size_t v = u + 1; v < n && best > 0; ++v)
      if (!g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)))
        best = std::min(best, local_connectivity(g, static_cast<Vertex>(u), static_cast<Vertex>(v), best, budget));
  return best;
}

std::size_t vertex_connectivity_exact(const Graph& g) {
  WorkBudget budget;
  return vertex_connectivity_exact(g, budget);
}

bool exists_edge_disjoint_hc_exact(const Graph& g, std::size_t r, WorkBudget& budget) {
  if (g.order() < 3) throw InvalidArgument("edge-disjoint Hamilton cycle oracle needs at least 3 vertices");
  if (r == 0) throw InvalidArgument("r must be at least 1");
  auto adj = masks_of(g, "edge-disjoint Hamilton cycle");
  return disjoint_cycles(adj, r, nullptr, budget);
}

bool exists_edge_disjoint_hc_exact(const Graph& g, std::size_t r) {
  WorkBudget budget;
  return exists_edge_disjoint_hc_exact(g, r, budget);
}

}  // namespace bhole
