#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bhole/cycle.hpp"
#include "bhole/graph.hpp"
#include "bhole/holes.hpp"

namespace bhole {

struct DisjointResult {
  std::vector<CycleSeq> cycles;
  /// Over g minus all cycle edges.
  HoleCertificate residual_certificate;
  /// Over g; its value m satisfies m > (δ(g) - 3r) / (r + 1) with r = cycles.size().
  HoleCertificate translated_certificate;
  std::size_t delta = 0;
  /// True when the run stopped at the cycle cap; both certificates are then the empty k = 1 one.
  bool capped = false;
};

/// Repeatedly finds a Hamilton cycle and deletes its edges until the
/// algorithm returns a certificate (or `r_cap` cycles are found).
DisjointResult find_edge_disjoint_hamilton(const Graph& g, std::optional<std::size_t> r_cap = std::nullopt);

/// Throws VerificationError unless the cycles are Hamilton cycles of g that
/// share no edge and both certificates verify against their graphs.
void verify_disjoint_result(const Graph& g, const DisjointResult& r);

/// Summary line, then blank-line separated blocks: each cycle, the residual
/// certificate, the translated certificate. No trailing newline.
std::string format_bundle(const DisjointResult& r);
std::string format_summary(const DisjointResult& r);
/// Reads a bundle back; delta/capped come from the summary line.
DisjointResult parse_bundle(std::string_view text);

}  // namespace bhole
