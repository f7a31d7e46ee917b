#include "bhole/cycle.hpp"

#include <algorithm>

#include "bhole/errors.hpp"
#include "text.hpp"

namespace bhole {

std::vector<Edge> CycleSeq::edges() const {
  std::vector<Edge> out;
  out.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex a = order[i];
    Vertex b = order[(i + 1) % order.size()];
    out.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

CycleSeq CycleSeq::canonical() const {
  if (order.size() < 2) return *this;
  const auto n = order.size();
  const auto start = static_cast<std::size_t>(std::min_element(order.begin(), order.end()) - order.begin());
  const bool forward = order[(start + 1) % n] < order[(start + n - 1) % n];
  CycleSeq out;
  out.order.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.order.push_back(order[forward ? (start + i) % n : (start + n - i) % n]);
  return out;
}

void validate_cycle(const Graph& g, const CycleSeq& c) {
  const auto n = c.order.size();
  if (n < 3) throw VerificationError("cycle has " + std::to_string(n) + " vertices, need at least 3");
  std::vector<char> seen(g.order(), 0);
  for (Vertex v : c.order) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.order())
      throw VerificationError("cycle vertex " + std::to_string(v) + " out of range");
    if (seen[static_cast<std::size_t>(v)]) throw VerificationError("cycle repeats vertex " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vertex a = c.order[i];
    Vertex b = c.order[(i + 1) % n];
    if (!g.adjacent(a, b))
      throw VerificationError("cycle uses non-edge " + std::to_string(a) + " " + std::to_string(b));
  }
}

void validate_hamilton_cycle(const Graph& g, const CycleSeq& c) {
  validate_cycle(g, c);
  if (c.order.size() != g.order())
    throw VerificationError("cycle visits " + std::to_string(c.order.size()) + " of " +
                            std::to_string(g.order()) + " vertices");
}

std::string format_cycle(const CycleSeq& c) {
  return "cycle " + std::to_string(c.order.size()) + "\n" + text::join(c.canonical().order);
}

CycleSeq parse_cycle(std::string_view input) {
  auto lines = text::content_lines(input);
  if (lines.empty()) throw ParseError(0, "missing header 'cycle n'");
  auto header = text::tokens(lines[0].content);
  if (header.size() != 2 || header[0] != "cycle") throw ParseError(lines[0].number, "header must be 'cycle n'");
  auto n = text::to_int<std::size_t>(header[1], lines[0].number, "cycle length");
  if (lines.size() < 2) throw ParseError(lines[0].number + 1, "missing vertex line");
  if (lines.size() > 2) throw ParseError(lines[2].number, "unexpected content after vertex line");
  CycleSeq c;
  for (auto tok : text::tokens(lines[1].content))
    c.order.push_back(text::to_int<Vertex>(tok, lines[1].number, "vertex id"));
  if (c.order.size() != n)
    throw ParseError(lines[1].number, "expected " + std::to_string(n) + " vertices, got " +
                                          std::to_string(c.order.size()));
  return c;
}

}  // namespace bhole
