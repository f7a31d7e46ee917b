#include "bhole/disjoint.hpp"

#include <algorithm>

#include "bhole/errors.hpp"
#include "bhole/hamilton.hpp"
#include "text.hpp"

namespace bhole {

DisjointResult find_edge_disjoint_hamilton(const Graph& g, std::optional<std::size_t> r_cap) {
  if (g.order() < 3) throw InvalidArgument("find_edge_disjoint_hamilton needs at least 3 vertices");
  DisjointResult out;
  out.delta = min_degree(g);
  Graph current = g;
  while (true) {
    if (r_cap && out.cycles.size() >= *r_cap) {
      out.capped = true;
      return out;
    }
    const std::size_t removed = out.cycles.size();
    const auto current_delta = min_degree(current);
    if (current_delta + 2 * removed < out.delta)
      throw ContractError("residual minimum degree fell below δ - 2i");
    auto result = find_hamilton(current);
    if (!result.is_cycle()) {
      out.residual_certificate = result.certificate();
      out.translated_certificate = translate_certificate(out.residual_certificate, out.cycles, g);
      return out;
    }
    const auto edges = result.cycle().edges();
    current = remove_edges(current, edges);
    out.cycles.push_back(result.cycle());
  }
}

void verify_disjoint_result(const Graph& g, const DisjointResult& r) {
  std::vector<Edge> used;
  for (std::size_t i = 0; i < r.cycles.size(); ++i) {
    try {
      validate_hamilton_cycle(g, r.cycles[i]);
    } catch (const VerificationError& e) {
      throw VerificationError("cycle " + std::to_string(i + 1) + ": " + e.what());
    }
    auto edges = r.cycles[i].edges();
    used.insert(used.end(), edges.begin(), edges.end());
  }
  std::sort(used.begin(), used.end());
  if (auto dup = std::adjacent_find(used.begin(), used.end()); dup != used.end())
    throw VerificationError("edge " + std::to_string(dup->u) + " " + std::to_string(dup->v) +
                            " is used by two cycles");
  if (r.capped) return;

  const Graph residual = remove_edges(g, used);
  try {
    verify_certificate(residual, r.residual_certificate);
  } catch (const VerificationError& e) {
    throw VerificationError(std::string("residual certificate: ") + e.what());
  }
  try {
    verify_certificate(g, r.translated_certificate);
  } catch (const VerificationError& e) {
    throw VerificationError(std::string("translated certificate: ") + e.what());
  }
  const auto delta = static_cast<std::int64_t>(min_degree(g));
  const auto cycles = static_cast<std::int64_t>(r.cycles.size());
  const auto m = r.translated_certificate.k;
  // m > (δ - 3r) / (r + 1)
  if (!(m * (cycles + 1) > delta - 3 * cycles))
    throw VerificationError("translated value m = " + std::to_string(m) + " does not exceed (δ - 3r)/(r + 1) = (" +
                            std::to_string(delta) + " - " + std::to_string(3 * cycles) + ")/" +
                            std::to_string(cycles + 1));
}

std::string format_summary(const DisjointResult& r) {
  return "r=" + std::to_string(r.cycles.size()) + " delta=" + std::to_string(r.delta) +
         " m=" + std::to_string(r.translated_certificate.k);
}

std::string format_bundle(const DisjointResult& r) {
  std::string out = format_summary(r);
  for (const auto& c : r.cycles) out += "\n\n" + format_cycle(c);
  if (!r.capped) {
    out += "\n\n" + format_certificate(r.residual_certificate);
    out += "\n\n" + format_certificate(r.translated_certificate);
  }
  return out;
}

namespace {

struct Block {
  std::size_t first_line;
  std::string body;
};

std::vector<Block> blocks(std::string_view input) {
  std::vector<Block> out;
  bool open = false;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= input.size()) {
    auto end = input.find('\n', pos);
    if (end == std::string_view::npos) end = input.size();
    auto line = input.substr(pos, end - pos);
    ++number;
    const bool blank = line.find_first_not_of(" \t\r") == std::string_view::npos;
    if (blank) {
      open = false;
    } else {
      if (!open) out.push_back({number, {}});
      open = true;
      out.back().body += std::string(line) + "\n";
    }
    if (end == input.size()) break;
    pos = end + 1;
  }
  return out;
}

// Re-anchors a block-relative parse error to the bundle's line numbers.
template <typename Fn>
auto in_block(const Block& b, Fn&& fn) {
  try {
    return fn(b.body);
  } catch (const ParseError& e) {
    const auto line = e.line() == 0 ? 0 : e.line() + b.first_line - 1;
    std::string msg = e.what();
    auto colon = msg.find(": ");
    throw ParseError(line, colon == std::string::npos ? msg : msg.substr(colon + 2));
  }
}

}  // namespace

DisjointResult parse_bundle(std::string_view input) {
  auto parts = blocks(input);
  if (parts.empty()) throw ParseError(0, "empty bundle");
  DisjointResult out;
  std::size_t declared_r = 0;
  std::int64_t declared_m = 0;
  {
    auto tok = text::tokens(text::content_lines(parts[0].body).at(0).content);
    if (tok.size() != 3 || !tok[0].starts_with("r=") || !tok[1].starts_with("delta=") || !tok[2].starts_with("m="))
      throw ParseError(parts[0].first_line, "summary must be 'r=<r> delta=<delta> m=<m>'");
    declared_r = text::to_int<std::size_t>(tok[0].substr(2), parts[0].first_line, "r");
    out.delta = text::to_int<std::size_t>(tok[1].substr(6), parts[0].first_line, "delta");
    declared_m = text::to_int<std::int64_t>(tok[2].substr(2), parts[0].first_line, "m");
  }
  std::vector<HoleCertificate> certs;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto& b = parts[i];
    if (b.body.starts_with("cycle")) {
      if (!certs.empty()) throw ParseError(b.first_line, "cycle block after certificates");
      out.cycles.push_back(in_block(b, [](std::string_view s) { return parse_cycle(s); }));
    } else if (b.body.starts_with("alpha-tilde-ge")) {
      certs.push_back(in_block(b, [](std::string_view s) { return parse_certificate(s); }));
    } else {
      throw ParseError(b.first_line, "expected a cycle or certificate block");
    }
  }
  if (certs.empty()) {
    out.capped = true;
    out.translated_certificate = {};
  } else if (certs.size() == 2) {
    out.residual_certificate = std::move(certs[0]);
    out.translated_certificate = std::move(certs[1]);
  } else {
    throw ParseError(0, "bundle needs exactly two certificates (residual, translated) or none");
  }
  if (declared_r != out.cycles.size())
    throw ParseError(parts[0].first_line, "summary says r=" + std::to_string(declared_r) + " but bundle has " +
                                              std::to_string(out.cycles.size()) + " cycles");
  if (declared_m != out.translated_certificate.k)
    throw ParseError(parts[0].first_line, "summary m does not match the translated certificate");
  return out;
}

}  // namespace bhole
