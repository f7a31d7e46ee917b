#include "bhole/holes.hpp"

#include <algorithm>
#include <bit>

#include "bhole/errors.hpp"
#include "text.hpp"

namespace bhole {

namespace {

using Word = Graph::Word;

std::size_t popcount(std::span<const Word> words) {
  std::size_t total = 0;
  for (Word w : words) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

// Depth-first enumeration of `size`-subsets in lexicographic order, carrying
// the union of closed neighbourhoods per level.
class ClosedUnionSearch {
 public:
  ClosedUnionSearch(const Graph& g, std::size_t size, std::size_t need_outside, WorkBudget& budget)
      : g_(g), size_(size), need_(need_outside), budget_(budget), words_(g.row_words()),
        unions_((size + 1) * words_, 0), chosen_(size) {}

  /// First subset X whose closed neighbourhood leaves >= need_ vertices uncovered.
  std::optional<std::vector<Vertex>> run() {
    if (descend(0, 0)) return chosen_;
    return std::nullopt;
  }

  std::span<const Word> final_union() const { return {unions_.data() + size_ * words_, words_}; }

 private:
  bool descend(std::size_t level, std::size_t first) {
    if (level == size_) {
      budget_.tick("bipartite-hole enumeration");
      return true;
    }
    const std::size_t n = g_.order();
    const Word* parent = unions_.data() + level * words_;
    Word* child = unions_.data() + (level + 1) * words_;
    for (std::size_t v = first; v + (size_ - level) <= n; ++v) {
      auto row = g_.row(static_cast<Vertex>(v));
      for (std::size_t w = 0; w < words_; ++w) child[w] = parent[w] | row[w];
      child[v / Graph::kWordBits] |= Word{1} << (v % Graph::kWordBits);
      if (n - popcount({child, words_}) < need_) continue;
      chosen_[level] = static_cast<Vertex>(v);
      if (descend(level + 1, v + 1)) return true;
    }
    return false;
  }

  const Graph& g_;
  std::size_t size_;
  std::size_t need_;
  WorkBudget& budget_;
  std::size_t words_;
  std::vector<Word> unions_;
  std::vector<Vertex> chosen_;
};

}  // namespace

std::optional<BipartiteHole> has_bipartite_hole(const Graph& g, std::size_t s, std::size_t t, WorkBudget& budget) {
  if (s == 0 || t == 0) throw InvalidArgument("hole sides must be positive");
  const std::size_t n = g.order();
  if (s + t > n) return std::nullopt;
  const std::size_t small = std::min(s, t);
  const std::size_t large = std::max(s, t);
  budget.require(binomial_saturating(n, small), "bipartite-hole enumeration C(" + std::to_string(n) + "," +
                                                    std::to_string(small) + ")");

  ClosedUnionSearch search(g, small, large, budget);
  auto found = search.run();
  if (!found) return std::nullopt;

  auto covered = search.final_union();
  std::vector<Vertex> rest;
  for (std::size_t v = 0; v < n && rest.size() < large; ++v)
    if (!((covered[v / Graph::kWordBits] >> (v % Graph::kWordBits)) & 1U)) rest.push_back(static_cast<Vertex>(v));

  VertexSet enumerated(std::move(*found));
  VertexSet completed(std::move(rest));
  if (s <= t) return BipartiteHole{std::move(enumerated), std::move(completed)};
  return BipartiteHole{std::move(completed), std::move(enumerated)};
}

std::optional<BipartiteHole> has_bipartite_hole(const Graph& g, std::size_t s, std::size_t t) {
  WorkBudget budget;
  return has_bipartite_hole(g, s, t, budget);
}

std::optional<HoleCertificate> find_certificate(const Graph& g, std::int64_t k, WorkBudget& budget) {
  if (k < 1) throw InvalidArgument("certificate value must be at least 1");
  HoleCertificate c{k, {}};
  for (std::int64_t i = 1; i <= k / 2; ++i) {
    auto hole = has_bipartite_hole(g, static_cast<std::size_t>(i), static_cast<std::size_t>(k - i), budget);
    if (!hole) return std::nullopt;
    c.pairs.push_back(std::move(*hole));
  }
  return c;
}

std::int64_t alpha_tilde_exact(const Graph& g, WorkBudget& budget, bool size_guard) {
  const std::size_t n = g.order();
  if (size_guard && n > kAlphaTildeSizeGuard)
    throw InstanceTooLarge("instance too large: exact alpha-tilde is limited to " +
                           std::to_string(kAlphaTildeSizeGuard) + " vertices (n = " + std::to_string(n) + ")");
  if (n < 2) return 1;
  for (std::size_t r = 1;; ++r) {
    const std::size_t total = r + 1;
    if (total > n) return static_cast<std::int64_t>(r);
    for (std::size_t s = 1; s <= total / 2; ++s)
      if (!has_bipartite_hole(g, s, total - s, budget)) return static_cast<std::int64_t>(r);
  }
}

std::int64_t alpha_tilde_exact(const Graph& g) {
  WorkBudget budget;
  return alpha_tilde_exact(g, budget);
}

std::int64_t verify_certificate(const Graph& g, const HoleCertificate& c) {
  if (c.k < 1) throw VerificationError("certificate value " + std::to_string(c.k) + " is below 1");
  const auto expected = static_cast<std::size_t>(c.k / 2);
  if (c.pairs.size() != expected)
    throw VerificationError("certificate for k = " + std::to_string(c.k) + " needs " + std::to_string(expected) +
                            " pairs, has " + std::to_string(c.pairs.size()));
  for (std::size_t idx = 0; idx < c.pairs.size(); ++idx) {
    const std::size_t i = idx + 1;
    const auto& hole = c.pairs[idx];
    const auto want_t = static_cast<std::size_t>(c.k) - i;
    if (hole.s_side.size() != i)
      throw VerificationError(i, "S has " + std::to_string(hole.s_side.size()) + " vertices, need " +
                                     std::to_string(i));
    if (hole.t_side.size() != want_t)
      throw VerificationError(i, "T has " + std::to_string(hole.t_side.size()) + " vertices, need " +
                                     std::to_string(want_t));
    for (const auto* side : {&hole.s_side, &hole.t_side})
      for (Vertex v : *side)
        if (v < 0 || static_cast<std::size_t>(v) >= g.order())
          throw VerificationError(i, "vertex " + std::to_string(v) + " out of range");
    if (!disjoint(hole.s_side, hole.t_side)) throw VerificationError(i, "S and T intersect");
    for (Vertex u : hole.s_side)
      for (Vertex w : hole.t_side)
        if (g.adjacent(u, w))
          throw VerificationError(i, "edge " + std::to_string(u) + " " + std::to_string(w) + " joins S and T");
  }
  return c.k;
}

HoleCertificate translate_certificate(const HoleCertificate& c, std::span<const CycleSeq> removed_cycles,
                                      const Graph& g) {
  const auto delta = static_cast<std::int64_t>(min_degree(g));
  const auto r = static_cast<std::int64_t>(removed_cycles.size());
  const std::int64_t numerator = delta - 2 * r + 1;
  // Floor division; numerator may be negative.
  std::int64_t formula = numerator >= 0 ? numerator / (r + 1) : -((-numerator + r) / (r + 1));
  const std::int64_t k_new = std::max<std::int64_t>(1, std::min(c.k, formula));

  std::vector<std::vector<std::size_t>> position(removed_cycles.size());
  for (std::size_t h = 0; h < removed_cycles.size(); ++h) {
    position[h].assign(g.order(), SIZE_MAX);
    const auto& order = removed_cycles[h].order;
    for (std::size_t i = 0; i < order.size(); ++i) position[h][static_cast<std::size_t>(order[i])] = i;
  }

  HoleCertificate out{k_new, {}};
  for (std::int64_t j = 1; j <= k_new / 2; ++j) {
    const auto idx = static_cast<std::size_t>(j - 1);
    if (idx >= c.pairs.size())
      throw ContractError("translate_certificate: source certificate lacks split " + std::to_string(j));
    const auto& src = c.pairs[idx];
    std::vector<char> blocked(g.order(), 0);
    for (std::size_t h = 0; h < removed_cycles.size(); ++h) {
      const auto& order = removed_cycles[h].order;
      const auto len = order.size();
      for (Vertex v : src.s_side) {
        const auto at = position[h][static_cast<std::size_t>(v)];
        if (at == SIZE_MAX) continue;
        blocked[static_cast<std::size_t>(order[(at + 1) % len])] = 1;
        blocked[static_cast<std::size_t>(order[(at + len - 1) % len])] = 1;
      }
    }
    std::vector<Vertex> survivors;
    for (Vertex w : src.t_side)
      if (!blocked[static_cast<std::size_t>(w)]) survivors.push_back(w);
    const auto want_s = static_cast<std::size_t>(j);
    const auto want_t = static_cast<std::size_t>(k_new - j);
    if (src.s_side.size() < want_s || survivors.size() < want_t)
      throw ContractError("translate_certificate: split " + std::to_string(j) + " keeps " +
                          std::to_string(survivors.size()) + " T-vertices, need " + std::to_string(want_t));
    out.pairs.push_back({src.s_side.lowest(want_s), VertexSet(std::move(survivors)).lowest(want_t)});
  }
  return out;
}

std::string format_certificate(const HoleCertificate& c) {
  std::string out = "alpha-tilde-ge " + std::to_string(c.k);
  for (std::size_t i = 0; i < c.pairs.size(); ++i) {
    out += "\n" + std::to_string(i + 1) + " | " + text::join(c.pairs[i].s_side.ids()) + " | " +
           text::join(c.pairs[i].t_side.ids());
  }
  return out;
}

namespace {

VertexSet parse_side(std::string_view field, std::size_t line) {
  std::vector<Vertex> ids;
  for (auto tok : text::tokens(field)) {
    auto v = text::to_int<Vertex>(tok, line, "vertex id");
    if (!ids.empty() && v <= ids.back()) throw ParseError(line, "vertex ids inside a side must be ascending");
    ids.push_back(v);
  }
  return VertexSet(std::move(ids));
}

}  // namespace

HoleCertificate parse_certificate(std::string_view input) {
  auto lines = text::content_lines(input);
  if (lines.empty()) throw ParseError(0, "missing header 'alpha-tilde-ge k'");
  auto header = text::tokens(lines[0].content);
  if (header.size() != 2 || header[0] != "alpha-tilde-ge")
    throw ParseError(lines[0].number, "header must be 'alpha-tilde-ge k'");
  HoleCertificate c;
  c.k = text::to_int<std::int64_t>(header[1], lines[0].number, "certificate value");
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& line = lines[li];
    auto content = line.content;
    auto bar1 = content.find('|');
    auto bar2 = bar1 == std::string_view::npos ? bar1 : content.find('|', bar1 + 1);
    if (bar2 == std::string_view::npos || content.find('|', bar2 + 1) != std::string_view::npos)
      throw ParseError(line.number, "pair line must be 'i | S | T'");
    auto index_tokens = text::tokens(content.substr(0, bar1));
    if (index_tokens.size() != 1) throw ParseError(line.number, "pair line must start with its index");
    auto index = text::to_int<std::size_t>(index_tokens[0], line.number, "pair index");
    if (index != li) throw ParseError(line.number, "expected pair index " + std::to_string(li));
    c.pairs.push_back({parse_side(content.substr(bar1 + 1, bar2 - bar1 - 1), line.number),
                       parse_side(content.substr(bar2 + 1), line.number)});
  }
  return c;
}

}  // namespace bhole
