#include "lfsrcyc/oracle.hpp"

#include "lfsrcyc/errors.hpp"

namespace lfsrcyc {

namespace {

std::uint64_t rank_of(const Field& field, std::span<const GFElem> s) {
  std::uint64_t r = 0;
  for (const GFElem& x : s) r = r * field.q() + field.index(x);
  return r;
}

State unrank(const Field& field, std::uint64_t r, std::size_t n) {
  State s(n, field.zero());
  for (std::size_t i = n; i-- > 0;) {
    s[i] = field.from_index(r % field.q());
    r /= field.q();
  }
  return s;
}

}  // namespace

BruteCyclePartition brute_partition(const Poly& f, std::uint64_t cap) {
  const Lfsr reg(f);
  const Field& field = f.field();
  const std::size_t n = reg.stages();
  std::uint64_t total = 0;
  try {
    total = checked_pow(field.q(), n);
  } catch (const ResourceError&) {
    total = cap + 1;
  }
  if (total > cap) {
    throw ResourceError("brute force over " + std::to_string(field.q()) + "^" + std::to_string(n) +
                        " states exceeds the oracle cap of " + std::to_string(cap));
  }
  BruteCyclePartition out;
  std::vector<bool> visited(total, false);
  for (std::uint64_t r = 0; r < total; ++r) {
    if (visited[r]) continue;
    const State start = unrank(field, r, n);
    State s = start;
    std::uint64_t period = 0;
    do {
      visited[rank_of(field, s)] = true;
      reg.step(s);
      ++period;
    } while (s != start);
    out.visited_count += period;
    out.cycles.push_back({period, start});
  }
  return out;
}

std::optional<std::uint64_t> brute_shift(const Poly& f, std::span<const GFElem> from, std::span<const GFElem> to,
                                         std::uint64_t cap) {
  const Lfsr reg(f);
  const State start(from.begin(), from.end());
  const State target(to.begin(), to.end());
  if (target.size() != start.size()) throw DomainError("states have different lengths");
  State s = start;
  std::uint64_t j = 0;
  do {
    if (s == target) return j;
    if (++j > cap) throw ResourceError("cycle period exceeds the oracle cap of " + std::to_string(cap));
    reg.step(s);
  } while (s != start);
  return std::nullopt;
}

bool brute_same_cycle(const Poly& f, std::span<const GFElem> v1, std::span<const GFElem> v2, std::uint64_t cap) {
  return brute_shift(f, v2, v1, cap).has_value();
}

}  // namespace lfsrcyc
