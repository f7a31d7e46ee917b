#pragma once

#include <cstdint>
#include <numeric>
#include <string_view>

#include "bhole/errors.hpp"

namespace bhole {

/// Cap on node expansions / subset probes for exact searches. Exceeding it
/// aborts with InstanceTooLarge; a search never returns a guess.
class WorkBudget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 100'000'000;

  constexpr WorkBudget() = default;
  constexpr explicit WorkBudget(std::uint64_t limit) : limit_(limit) {}

  constexpr std::uint64_t limit() const noexcept { return limit_; }
  constexpr std::uint64_t used() const noexcept { return used_; }
  constexpr std::uint64_t remaining() const noexcept { return limit_ - used_; }

  /// Throws if `amount` more units would not fit.
  void require(std::uint64_t amount, std::string_view what) const {
    if (amount > remaining()) too_large(what);
  }

  void charge(std::uint64_t amount, std::string_view what) {
    require(amount, what);
    used_ += amount;
  }

  void tick(std::string_view what) { charge(1, what); }

 private:
  [[noreturn]] static void too_large(std::string_view what) {
    throw InstanceTooLarge("instance too large: " + std::string(what) + " exceeds work budget");
  }

  std::uint64_t limit_ = kDefaultLimit;
  std::uint64_t used_ = 0;
};

/// C(n, k) saturating at UINT64_MAX.
constexpr std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is exact; cancel gcd(result, i) first.
    const std::uint64_t g = std::gcd(result, i);
    const std::uint64_t factor = (n - k + i) / (i / g);
    const std::uint64_t base = result / g;
    if (factor != 0 && base > UINT64_MAX / factor) return UINT64_MAX;
    result = base * factor;
  }
  return result;
}

}  // namespace bhole
