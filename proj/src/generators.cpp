#include "bhole/generators.hpp"

#include <cctype>
#include <charconv>
#include <random>
#include <string>
#include <vector>

#include "bhole/errors.hpp"

namespace bhole {

Graph complete_graph(std::size_t n) {
  if (n == 0) throw InvalidArgument("complete: n must be at least 1");
  GraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return std::move(b).build();
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a + b == 0) throw InvalidArgument("bipartite: a + b must be at least 1");
  GraphBuilder g(a + b);
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t v = a; v < a + b; ++v) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return std::move(g).build();
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle: n must be at least 3");
  GraphBuilder b(n);
  for (std::size_t v = 0; v < n; ++v) b.add_edge(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n));
  return std::move(b).build();
}

Graph path_graph(std::size_t n) {
  if (n == 0) throw InvalidArgument("path: n must be at least 1");
  GraphBuilder b(n);
  for (std::size_t v = 0; v + 1 < n; ++v) b.add_edge(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));
  return std::move(b).build();
}

Graph petersen_graph() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return std::move(b).build();
}

Graph fan_example(std::size_t k, std::size_t l) {
  if (l < 1 || k < l + 3) throw InvalidArgument("fan-example: requires l >= 1 and k >= l + 3");
  const std::size_t b_size = k + l;
  const std::size_t c_size = k;
  const std::size_t d_size = l + 1;
  const Vertex a = 0;
  const auto b0 = Vertex{1};
  const auto c0 = static_cast<Vertex>(1 + b_size);
  const auto d0 = static_cast<Vertex>(1 + b_size + c_size);
  GraphBuilder g(1 + b_size + c_size + d_size);
  auto in = [](Vertex first, std::size_t count) {
    std::vector<Vertex> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = first + static_cast<Vertex>(i);
    return out;
  };
  const auto bs = in(b0, b_size);
  const auto cs = in(c0, c_size);
  const auto ds = in(d0, d_size);
  for (Vertex x : bs) g.add_edge(a, x);
  for (Vertex x : bs)
    for (Vertex y : cs) g.add_edge(x, y);
  for (Vertex x : cs)
    for (Vertex y : ds) g.add_edge(x, y);
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = i + 1; j < bs.size(); ++j) g.add_edge(bs[i], bs[j]);
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = i + 1; j < ds.size(); ++j) g.add_edge(ds[i], ds[j]);
  return std::move(g).build();
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("gnp: n must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("gnp: p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  GraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  return std::move(b).build();
}

namespace {

// expr := name ( '(' expr (',' expr)* ')' | argument* )
class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  Graph parse_all() {
    Graph g = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(text_.substr(pos_)) + "'");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw InvalidArgument("family spec '" + std::string(text_) + "': " + message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view word() {
    skip_space();
    auto start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != ',')
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Graph parse_expr() {
    auto name = word();
    if (name.empty()) fail("expected a family name");
    if (peek('(')) {
      ++pos_;
      std::vector<Graph> parts{parse_expr()};
      while (peek(',')) {
        ++pos_;
        parts.push_back(parse_expr());
      }
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return combine(name, std::move(parts));
    }
    std::vector<std::string_view> args;
    while (true) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ',' || text_[pos_] == ')') break;
      args.push_back(word());
    }
    return primitive(name, args);
  }

  Graph combine(std::string_view name, std::vector<Graph> parts) {
    if (name == "complement-of") {
      if (parts.size() != 1) fail("complement-of takes one graph");
      return complement(parts[0]);
    }
    if (name == "disjoint-union") {
      if (parts.size() != 2) fail("disjoint-union takes two graphs");
      return disjoint_union(parts[0], parts[1]);
    }
    fail("unknown composite family '" + std::string(name) + "'");
  }

  std::size_t count(std::string_view token) const {
    std::size_t v{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) fail("bad integer '" + std::string(token) + "'");
    return v;
  }

  std::uint64_t seed(std::string_view token) const {
    std::uint64_t v{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) fail("bad seed '" + std::string(token) + "'");
    return v;
  }

  double real(std::string_view token) const {
    std::string copy(token);
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(copy, &used);
    } catch (const std::exception&) {
      fail("bad number '" + copy + "'");
    }
    if (used != copy.size()) fail("bad number '" + copy + "'");
    return v;
  }

  void arity(std::string_view name, const std::vector<std::string_view>& args, std::size_t expected) const {
    if (args.size() != expected)
      fail(std::string(name) + " takes " + std::to_string(expected) + " parameter(s), got " +
           std::to_string(args.size()));
  }

  Graph primitive(std::string_view name, const std::vector<std::string_view>& args) {
    if (name == "complete") {
      arity(name, args, 1);
      return complete_graph(count(args[0]));
    }
    if (name == "bipartite") {
      arity(name, args, 2);
      return complete_bipartite(count(args[0]), count(args[1]));
    }
    if (name == "cycle") {
      arity(name, args, 1);
      return cycle_graph(count(args[0]));
    }
    if (name == "path") {
      arity(name, args, 1);
      return path_graph(count(args[0]));
    }
    if (name == "petersen") {
      arity(name, args, 0);
      return petersen_graph();
    }
    if (name == "fan-example") {
      arity(name, args, 2);
      return fan_example(count(args[0]), count(args[1]));
    }
    if (name == "gnp") {
      if (args.size() == 2) fail("gnp requires a seed");
      arity(name, args, 3);
      return gnp(count(args[0]), real(args[1]), seed(args[2]));
    }
    if (name == "complement-of" || name == "disjoint-union") fail(std::string(name) + " needs parenthesised graphs");
    fail("unknown family '" + std::string(name) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph generate(std::string_view spec) { return SpecParser(spec).parse_all(); }

}  // namespace bhole
