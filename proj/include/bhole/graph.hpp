#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bhole {

using Vertex = std::int32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free list of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}
  /// Sorts and removes duplicates.
  explicit VertexSet(std::vector<Vertex> ids);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  bool contains(Vertex v) const noexcept;
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  const std::vector<Vertex>& ids() const noexcept { return ids_; }

  /// The `count` smallest members.
  VertexSet lowest(std::size_t count) const;

  friend VertexSet set_union(const VertexSet& a, const VertexSet& b);
  friend VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
  friend VertexSet set_difference(const VertexSet& a, const VertexSet& b);
  friend bool disjoint(const VertexSet& a, const VertexSet& b);

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.ids_ <=> b.ids_; }

 private:
  std::vector<Vertex> ids_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Keeps both a bit-matrix (constant-time adjacency) and ascending adjacency
/// lists (iteration). Build one with GraphBuilder.
class Graph {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Graph() = default;

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / kWordBits] >>
            (static_cast<std::size_t>(v) % kWordBits)) & 1U;
  }
  std::span<const Vertex> neighbors(Vertex v) const noexcept { return adjacency_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const noexcept { return adjacency_[static_cast<std::size_t>(v)].size(); }

  /// Words per bit-matrix row.
  std::size_t row_words() const noexcept { return words_; }
  std::span<const Word> row(Vertex v) const noexcept {
    return {rows_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  /// All edges (u < v) in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adjacency_ == b.adjacency_; }

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> rows_;
  std::vector<std::vector<Vertex>> adjacency_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  bool has_edge(Vertex u, Vertex v) const;
  /// Returns false if the edge was already present. Throws InvalidArgument on
  /// a self-loop or an out-of-range endpoint.
  bool add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  Graph build() &&;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<Graph::Word> rows_;
};

/// Parses the "n m" + m edge-lines format. Throws ParseError naming the line.
Graph parse_graph(std::string_view text);
/// Canonical text: header then edges u < v in lexicographic order, newline
/// separated, no trailing newline.
std::string serialize_graph(const Graph& g);

/// Requires n >= 1.
std::size_t min_degree(const Graph& g);
/// Components, each ascending, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
/// Vertices outside `s` adjacent to some member of `s`.
VertexSet external_neighborhood(const Graph& g, const VertexSet& s);

Graph complement(const Graph& g);
/// Vertices of `b` are relabeled to follow those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);
Graph remove_edges(const Graph& g, std::span<const Edge> edges);

}  // namespace bhole
