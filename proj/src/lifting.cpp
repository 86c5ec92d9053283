#include "lfsrcyc/lifting.hpp"

#include <algorithm>

#include "lfsrcyc/errors.hpp"
#include "lfsrcyc/irreducible.hpp"

namespace lfsrcyc {

namespace {

std::size_t stages_of(const Poly& g) {
  if (g.degree() < 1 || !g.is_monic()) throw DomainError("expected a monic polynomial of positive degree");
  return static_cast<std::size_t>(g.degree());
}

// Mixed-radix rank of a state prefix, first entry most significant.
std::uint64_t rank_prefix(std::span<const GFElem> s, std::size_t n) {
  const Field& field = s.front().field();
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < n; ++i) r = r * field.q() + field.index(s[i]);
  return r;
}

State add(const State& a, const State& b) {
  State out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

}  // namespace

std::vector<GFElem> d_map(const Poly& g, std::span<const GFElem> a) {
  const std::size_t n = stages_of(g);
  if (a.size() % n != 0 || a.size() < 2 * n) {
    throw DomainError("D expects (r+1)n entries with r >= 1, got " + std::to_string(a.size()));
  }
  std::vector<GFElem> b;
  for (std::size_t i = 0; i + n < a.size(); ++i) {
    GFElem acc = a[i + n];
    for (std::size_t j = 0; j < n; ++j) acc += g.coeffs()[j] * a[i + j];
    b.push_back(std::move(acc));
  }
  return b;
}

std::vector<GFElem> d_preimage(const Poly& g, std::span<const GFElem> b, std::span<const GFElem> prefix) {
  const std::size_t n = stages_of(g);
  if (prefix.size() != n) throw DomainError("preimage prefix must have n entries");
  std::vector<GFElem> a(prefix.begin(), prefix.end());
  for (std::size_t i = 0; i < b.size(); ++i) {
    GFElem acc = b[i];
    for (std::size_t j = 0; j < n; ++j) acc -= g.coeffs()[j] * a[i + j];
    a.push_back(std::move(acc));
  }
  return a;
}

std::vector<State> kernel_states(const Poly& g, unsigned r) {
  const std::size_t n = stages_of(g);
  const Lfsr reg(g);
  const Field& field = g.field();
  const std::uint64_t count = checked_pow(field.q(), n);
  std::vector<State> out;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    State s(n, field.zero());
    std::uint64_t rest = k;
    for (std::size_t i = n; i-- > 0;) {
      s[i] = field.from_index(rest % field.q());
      rest /= field.q();
    }
    reg.extend(s, (r + 1) * n);
    out.push_back(std::move(s));
  }
  return out;
}

LiftedRepresentative lift_representative(const Poly& g, unsigned r, std::uint64_t e, const State& b) {
  const std::size_t n = stages_of(g);
  if (b.size() != r * n) throw DomainError("level-r representative must have r n entries");
  const Field& field = g.field();
  LiftedRepresentative out;
  out.a = d_preimage(g, b, State(n, field.zero()));
  const std::vector<State> kernel = kernel_states(g, r);
  if (!is_power_of(r, field.p())) {
    for (const State& k : kernel) out.states.push_back(add(out.a, k));
    return out;
  }
  const Lfsr upper(pow(g, r + 1));
  out.a_prime = upper.advance(out.a, checked_mul(e, r));
  for (std::size_t i = 0; i < n * (r + 1); ++i) out.a_prime[i] -= out.a[i];
  if (std::all_of(out.a_prime.begin(), out.a_prime.end(), [](const GFElem& x) { return x.is_zero(); })) {
    throw InternalError("a' vanished for a power-of-p level");
  }
  // Greedy coset representatives of {eta a' : eta in GF(p)}, least first.
  std::vector<bool> covered(kernel.size(), false);
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    if (covered[i]) continue;
    out.states.push_back(add(out.a, kernel[i]));
    State member = kernel[i];
    for (std::uint64_t eta = 0; eta < field.p(); ++eta) {
      covered[rank_prefix(member, n)] = true;
      member = add(member, out.a_prime);
    }
  }
  return out;
}

std::vector<State> lift_level(const Poly& g, unsigned r, std::uint64_t e, std::span<const State> reps) {
  std::vector<State> out;
  for (const State& b : reps) {
    for (State& s : lift_representative(g, r, e, b).states) out.push_back(std::move(s));
  }
  return out;
}

LevelShape level_shape(const Poly& g, std::uint64_t e, unsigned r) {
  if (r == 0) return {1, 1};
  const std::uint64_t p = g.field().p();
  const std::uint64_t n = static_cast<std::uint64_t>(g.degree());
  const std::uint64_t full = checked_pow(g.field().q(), n) - 1;
  const std::uint64_t pc = checked_pow(p, ceil_log(p, r));
  const std::uint64_t states = checked_mul(full / e, checked_pow(g.field().q(), n * (r - 1)));
  return {states / pc, checked_mul(e, pc)};
}

std::vector<PrimePowerCycle> cycle_structure_prime_power(const Poly& g, unsigned b, std::uint64_t factor_cap) {
  if (b < 1) throw DomainError("multiplicity must be at least 1");
  const IrreducibleFactorInfo info = irreducible_info(g, factor_cap);
  const Poly& h = info.g;
  const std::size_t n = info.n;
  const std::size_t width = b * n;
  std::vector<PrimePowerCycle> out;
  out.push_back({0, 1, State(width, h.field().zero())});
  std::vector<State> level = states_by_decimation(info);
  for (unsigned r = 1; r <= b; ++r) {
    if (r > 1) level = lift_level(h, r - 1, info.e, level);
    const LevelShape shape = level_shape(h, info.e, r);
    if (level.size() != shape.count) throw InternalError("lifted cycle count disagrees with the level formula");
    const Lfsr reg(pow(h, r));
    for (const State& s : level) {
      State wide = s;
      reg.extend(wide, width);
      out.push_back({r, shape.period, std::move(wide)});
    }
  }
  return out;
}

}  // namespace lfsrcyc
