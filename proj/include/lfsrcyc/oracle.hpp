#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lfsrcyc/lfsr.hpp"

namespace lfsrcyc {

inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

struct BruteCycle {
  std::uint64_t period = 0;
  State representative;  // least state of the cycle
};

struct BruteCyclePartition {
  std::vector<BruteCycle> cycles;  // in order of their representatives
  std::uint64_t visited_count = 0;
};

// Walks every one of the q^n states. ResourceError when q^n > cap.
BruteCyclePartition brute_partition(const Poly& f, std::uint64_t cap = kDefaultOracleCap);

// Least j with T^j(from) = to, walking at most one period of from.
std::optional<std::uint64_t> brute_shift(const Poly& f, std::span<const GFElem> from, std::span<const GFElem> to,
                                         std::uint64_t cap = kDefaultOracleCap);

// True iff T^j(v2) = v1 for some j.
bool brute_same_cycle(const Poly& f, std::span<const GFElem> v1, std::span<const GFElem> v2,
                      std::uint64_t cap = kDefaultOracleCap);

}  // namespace lfsrcyc
