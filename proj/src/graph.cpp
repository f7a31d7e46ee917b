#include "bhole/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "bhole/errors.hpp"
#include "text.hpp"

namespace bhole {

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(Vertex v) const noexcept { return std::binary_search(ids_.begin(), ids_.end(), v); }

VertexSet VertexSet::lowest(std::size_t count) const {
  VertexSet out;
  out.ids_.assign(ids_.begin(), ids_.begin() + static_cast<std::ptrdiff_t>(std::min(count, ids_.size())));
  return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.ids_));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.ids_));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.ids_));
  return out;
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (std::size_t u = 0; u < n_; ++u)
    for (Vertex v : adjacency_[u])
      if (static_cast<std::size_t>(v) > u) out.push_back({static_cast<Vertex>(u), v});
  return out;
}

GraphBuilder::GraphBuilder(std::size_t n)
    : n_(n), words_((n + Graph::kWordBits - 1) / Graph::kWordBits), rows_(n * words_, 0) {
  if (n > static_cast<std::size_t>(std::numeric_limits<Vertex>::max()))
    throw InvalidArgument("vertex count " + std::to_string(n) + " out of range");
}

namespace {

void check_pair(std::size_t n, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
    throw InvalidArgument("vertex id out of range in edge " + std::to_string(u) + " " + std::to_string(v));
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
}

}  // namespace

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  check_pair(n_, u, v);
  auto uu = static_cast<std::size_t>(u);
  auto vv = static_cast<std::size_t>(v);
  return (rows_[uu * words_ + vv / Graph::kWordBits] >> (vv % Graph::kWordBits)) & 1U;
}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (has_edge(u, v)) return false;
  auto uu = static_cast<std::size_t>(u);
  auto vv = static_cast<std::size_t>(v);
  rows_[uu * words_ + vv / Graph::kWordBits] |= Graph::Word{1} << (vv % Graph::kWordBits);
  rows_[vv * words_ + uu / Graph::kWordBits] |= Graph::Word{1} << (uu % Graph::kWordBits);
  return true;
}

void GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check_pair(n_, u, v);
  auto uu = static_cast<std::size_t>(u);
  auto vv = static_cast<std::size_t>(v);
  rows_[uu * words_ + vv / Graph::kWordBits] &= ~(Graph::Word{1} << (vv % Graph::kWordBits));
  rows_[vv * words_ + uu / Graph::kWordBits] &= ~(Graph::Word{1} << (uu % Graph::kWordBits));
}

Graph GraphBuilder::build() && {
  Graph g;
  g.n_ = n_;
  g.words_ = words_;
  g.rows_ = std::move(rows_);
  g.adjacency_.resize(n_);
  std::size_t degree_sum = 0;
  for (std::size_t u = 0; u < n_; ++u) {
    auto& list = g.adjacency_[u];
    for (std::size_t w = 0; w < words_; ++w) {
      Graph::Word bits = g.rows_[u * words_ + w];
      while (bits) {
        list.push_back(static_cast<Vertex>(w * Graph::kWordBits + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
    degree_sum += list.size();
  }
  g.m_ = degree_sum / 2;
  return g;
}

Graph parse_graph(std::string_view text) {
  auto lines = text::content_lines(text);
  if (lines.empty()) throw ParseError(0, "missing header line 'n m'");
  auto header = text::tokens(lines[0].content);
  if (header.size() != 2) throw ParseError(lines[0].number, "header must be 'n m'");
  auto n = text::to_int<std::size_t>(header[0], lines[0].number, "vertex count");
  auto m = text::to_int<std::size_t>(header[1], lines[0].number, "edge count");

  GraphBuilder builder(n);
  std::size_t seen = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (seen == m)
      throw ParseError(line.number, "more edge lines than the declared " + std::to_string(m));
    auto tok = text::tokens(line.content);
    if (tok.size() != 2) throw ParseError(line.number, "edge line must be 'u v'");
    auto u = text::to_int<std::int64_t>(tok[0], line.number, "vertex id");
    auto v = text::to_int<std::int64_t>(tok[1], line.number, "vertex id");
    if (u < 0 || v < 0 || static_cast<std::uint64_t>(u) >= n || static_cast<std::uint64_t>(v) >= n)
      throw ParseError(line.number, "vertex id out of range (n = " + std::to_string(n) + ")");
    if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
    if (!builder.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
      throw ParseError(line.number, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    ++seen;
  }
  if (seen != m)
    throw ParseError(lines.back().number + 1,
                     "declared " + std::to_string(m) + " edges but found " + std::to_string(seen));
  return std::move(builder).build();
}

std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size());
  for (const auto& e : g.edges()) {
    out += '\n';
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
  }
  return out;
}

std::size_t min_degree(const Graph& g) {
  if (g.order() == 0) throw InvalidArgument("minimum degree of the empty vertex set");
  std::size_t best = g.degree(0);
  for (std::size_t v = 1; v < g.order(); ++v) best = std::min(best, g.degree(static_cast<Vertex>(v)));
  return best;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack;
  for (std::size_t root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> members;
    seen[root] = 1;
    stack.push_back(static_cast<Vertex>(root));
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

VertexSet external_neighborhood(const Graph& g, const VertexSet& s) {
  std::vector<char> mark(g.order(), 0);
  for (Vertex v : s) mark[static_cast<std::size_t>(v)] = 1;
  std::vector<Vertex> out;
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (mark[static_cast<std::size_t>(w)] == 0) {
        mark[static_cast<std::size_t>(w)] = 2;
        out.push_back(w);
      }
  return VertexSet(std::move(out));
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)))
        b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return std::move(b).build();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  GraphBuilder out(a.order() + b.order());
  const auto shift = static_cast<Vertex>(a.order());
  for (const auto& e : a.edges()) out.add_edge(e.u, e.v);
  for (const auto& e : b.edges()) out.add_edge(e.u + shift, e.v + shift);
  return std::move(out).build();
}

Graph remove_edges(const Graph& g, std::span<const Edge> edges) {
  GraphBuilder b(g.order());
  for (const auto& e : g.edges()) b.add_edge(e.u, e.v);
  for (const auto& e : edges) b.remove_edge(e.u, e.v);
  return std::move(b).build();
}

}  // namespace bhole
