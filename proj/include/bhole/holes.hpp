#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bhole/budget.hpp"
#include "bhole/cycle.hpp"
#include "bhole/graph.hpp"

namespace bhole {

/// Disjoint non-empty vertex sets with no edge between them.
struct BipartiteHole {
  VertexSet s_side;
  VertexSet t_side;

  friend bool operator==(const BipartiteHole&, const BipartiteHole&) = default;
};

/// Holes for every split of `k`: pairs[i-1] has sides of sizes (i, k-i) for
/// i = 1..floor(k/2).
///
/// Soundness: a hole at every split (i, k-i) with i <= k/2 gives, by symmetry,
/// an (s, t)-hole for every positive s + t = k, and by shrinking sides, one
/// for every s + t <= k. The least s + t - 1 without a hole is therefore at
/// least k, so the bipartite-hole-number is at least k.
struct HoleCertificate {
  std::int64_t k = 1;
  std::vector<BipartiteHole> pairs;

  friend bool operator==(const HoleCertificate&, const HoleCertificate&) = default;
};

/// Searches for an (s, t)-hole. The smaller side is enumerated in
/// lexicographic order; a set X of that size extends to a hole iff
/// |V \ (X ∪ N(X))| reaches the larger size. The witness is the first such X
/// with the lowest-labeled completion.
///
/// Throws InstanceTooLarge when C(n, min(s, t)) exceeds the budget.
std::optional<BipartiteHole> has_bipartite_hole(const Graph& g, std::size_t s, std::size_t t,
                                                WorkBudget& budget);
std::optional<BipartiteHole> has_bipartite_hole(const Graph& g, std::size_t s, std::size_t t);

/// Holes at every split of k, or nullopt as soon as one split has none.
std::optional<HoleCertificate> find_certificate(const Graph& g, std::int64_t k, WorkBudget& budget);

inline constexpr std::size_t kAlphaTildeSizeGuard = 20;

/// Exact bipartite-hole-number by scanning r = 1, 2, ... until some split of
/// r + 1 admits no hole. Graphs with fewer than two vertices get 1.
/// Throws InstanceTooLarge above kAlphaTildeSizeGuard vertices unless
/// `size_guard` is false, or when the budget runs out.
std::int64_t alpha_tilde_exact(const Graph& g, WorkBudget& budget, bool size_guard = true);
std::int64_t alpha_tilde_exact(const Graph& g);

/// Returns c.k if every pair is a hole of g with the exact sizes; otherwise
/// throws VerificationError naming the pair.
std::int64_t verify_certificate(const Graph& g, const HoleCertificate& c);

/// Carries a certificate for g minus `removed_cycles` over to g.
///
/// With δ = δ(g) and r = |removed_cycles| the new value is
/// k' = max(1, min(c.k, floor((δ - 2r + 1) / (r + 1)))). Each kept split j
/// drops from T_j every cycle-neighbour of S_j (at most 2rj vertices), then
/// both sides are cut down to (j, k' - j) keeping the lowest labels.
/// Throws ContractError if a split is missing or too few vertices survive.
HoleCertificate translate_certificate(const HoleCertificate& c, std::span<const CycleSeq> removed_cycles,
                                      const Graph& g);

/// "alpha-tilde-ge k" then one "i | S | T" line per split. No trailing newline.
std::string format_certificate(const HoleCertificate& c);
HoleCertificate parse_certificate(std::string_view text);

}  // namespace bhole
