#include "lfsrcyc/structure.hpp"

#include <algorithm>
#include <functional>

#include "lfsrcyc/errors.hpp"
#include "lfsrcyc/irreducible.hpp"

namespace lfsrcyc {

namespace {

__extension__ using i128 = __int128;

// x with x = r1 (mod m1) and x = r2 (mod m2), 0 <= x < lcm; both r in range.
std::optional<std::pair<std::uint64_t, std::uint64_t>> merge(std::uint64_t r1, std::uint64_t m1, std::uint64_t r2,
                                                             std::uint64_t m2) {
  // Extended Euclid on (m1, m2): s m1 + u m2 = g.
  i128 old_r = m1, r = m2, old_s = 1, s = 0;
  while (r != 0) {
    const i128 q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  const i128 g = old_r;
  const i128 diff = static_cast<i128>(r2) - static_cast<i128>(r1);
  if (diff % g != 0) return std::nullopt;
  const std::uint64_t l = lcm_checked(m1, m2);
  const i128 step = static_cast<i128>(m2 / static_cast<std::uint64_t>(g));
  // k = (diff / g) * s mod (m2 / g); x = r1 + m1 k.
  i128 k = ((diff / g) % step) * (old_s % step) % step;
  if (k < 0) k += step;
  const i128 x = (static_cast<i128>(r1) + static_cast<i128>(m1) * k) % static_cast<i128>(l);
  return std::make_pair(static_cast<std::uint64_t>(x), l);
}

}  // namespace

BlockMatrixP build_P(const FactoredPoly& factored) {
  if (factored.factors.empty()) throw DomainError("P needs at least one factor");
  const Field& field = factored.unit.field();
  const std::size_t n = factored.degree();
  BlockMatrixP out{Matrix(field, n, n), Matrix(field, n, n), {}, {}, {}};
  std::size_t row = 0;
  for (const auto& [g, b] : factored.factors) {
    const Poly block = pow(g, b);
    const std::size_t size = static_cast<std::size_t>(block.degree());
    const Lfsr reg(block);
    out.offsets.push_back(row);
    out.sizes.push_back(size);
    out.block_polys.push_back(block);
    for (std::size_t j = 0; j < size; ++j, ++row) {
      std::vector<GFElem> s(size, field.zero());
      s[j] = field.one();
      reg.extend(s, std::max(n, size));
      for (std::size_t c = 0; c < n; ++c) out.P.at(row, c) = s[c];
    }
  }
  std::optional<Matrix> inv = inverse(out.P);
  if (!inv) throw InternalError("P is singular");
  out.P_inv = std::move(*inv);
  return out;
}

State compose_state(const BlockMatrixP& P, std::span<const State> components) {
  if (components.size() != P.sizes.size()) throw DomainError("one component state per factor is required");
  std::vector<GFElem> concat;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].size() != P.sizes[i]) {
      throw DomainError("component " + std::to_string(i) + " must have " + std::to_string(P.sizes[i]) + " entries");
    }
    concat.insert(concat.end(), components[i].begin(), components[i].end());
  }
  return std::span<const GFElem>(concat) * P.P;
}

std::vector<State> decompose_state(const BlockMatrixP& P, std::span<const GFElem> v) {
  if (v.size() != P.P.rows()) throw DomainError("state length does not match deg f");
  const std::vector<GFElem> flat = v * P.P_inv;
  std::vector<State> out;
  for (std::size_t i = 0; i < P.sizes.size(); ++i) {
    out.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(P.offsets[i]),
                     flat.begin() + static_cast<std::ptrdiff_t>(P.offsets[i] + P.sizes[i]));
  }
  return out;
}

FactorCycleSet factor_cycles(const Poly& g, unsigned b, std::uint64_t factor_cap) {
  const IrreducibleFactorInfo info = irreducible_info(g, factor_cap);
  FactorCycleSet out{info.g, b, info.n, info.e, info.t, 0, cycle_structure_prime_power(info.g, b, factor_cap)};
  out.sigma = out.cycles.size() - 1;
  return out;
}

CycleStructure enumerate_cycles(const Poly& f, const StructureOptions& options) {
  if (f.degree() < 1) throw DomainError("characteristic polynomial must have positive degree");
  if (!f.is_monic()) throw DomainError("characteristic polynomial must be monic");
  if (f.coeff(0).is_zero()) throw DomainError("characteristic polynomial must satisfy f(0) != 0");
  FactoredPoly factored = factorize(f, options.seed);
  BlockMatrixP P = build_P(factored);
  CycleStructure out{f, std::move(factored), std::move(P), {}, {}, false};
  for (const auto& [g, b] : out.factored.factors) out.per_factor.push_back(factor_cycles(g, b, options.factor_cap));

  const std::size_t k = out.per_factor.size();
  std::vector<Lfsr> regs;
  for (const Poly& block : out.P.block_polys) regs.emplace_back(block);

  std::vector<State> chosen(k);
  std::vector<unsigned> exps(k, 0);
  std::function<void(std::size_t, std::uint64_t)> recurse = [&](std::size_t i, std::uint64_t period) {
    if (i == k) {
      out.cycles.push_back({exps, period, compose_state(out.P, chosen), chosen});
      return;
    }
    for (const PrimePowerCycle& c : out.per_factor[i].cycles) {
      exps[i] = c.r;
      // Offsets 0 <= l < gcd(e_i, lcm of earlier periods); the first factor only takes 0.
      const std::uint64_t offsets = i == 0 ? 1 : gcd_u64(c.period, period);
      const std::uint64_t next = lcm_checked(period, c.period);
      chosen[i] = c.state;
      for (std::uint64_t l = 0; l < offsets; ++l) {
        if (l > 0) regs[i].step(chosen[i]);
        recurse(i + 1, next);
      }
    }
  };
  recurse(0, 1);

  std::uint64_t total = 0;
  for (const CycleClass& c : out.cycles) total = checked_add(total, c.period);
  const std::uint64_t states = checked_pow(f.field().q(), static_cast<std::uint64_t>(f.degree()));
  if (total != states) throw InternalError("cycle periods do not partition the state space");

  if (states <= options.canonical_state_cap) {
    const Lfsr reg(out.f);
    for (CycleClass& c : out.cycles) {
      State s = c.representative;
      std::uint64_t best = 0;
      State least = s;
      for (std::uint64_t j = 1; j < c.period; ++j) {
        reg.step(s);
        if (s < least) {
          least = s;
          best = j;
        }
      }
      if (best == 0) continue;
      c.representative = std::move(least);
      for (std::size_t i = 0; i < k; ++i) c.component_states[i] = regs[i].advance(c.component_states[i], best);
    }
    out.canonical = true;
  }
  std::sort(out.cycles.begin(), out.cycles.end(), [](const CycleClass& a, const CycleClass& b) {
    if (a.factor_exponents != b.factor_exponents) return a.factor_exponents < b.factor_exponents;
    if (a.period != b.period) return a.period < b.period;
    return a.representative < b.representative;
  });
  return out;
}

std::optional<std::uint64_t> generalized_crt(std::span<const std::int64_t> residues,
                                             std::span<const std::uint64_t> moduli) {
  if (residues.size() != moduli.size() || residues.empty()) {
    throw DomainError("CRT needs equally many residues and moduli, at least one");
  }
  std::uint64_t x = 0, m = 1;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (moduli[i] == 0) throw DomainError("CRT modulus must be positive");
    const auto mi = static_cast<std::int64_t>(moduli[i]);
    const auto ri = static_cast<std::uint64_t>(((residues[i] % mi) + mi) % mi);
    const auto merged = merge(x, m, ri, moduli[i]);
    if (!merged) return std::nullopt;
    std::tie(x, m) = *merged;
  }
  return x;
}

SameCycleResult same_cycle(const BlockMatrixP& P, std::span<const GFElem> v1, std::span<const GFElem> v2) {
  if (v1.size() != v2.size()) throw DomainError("states have different lengths");
  const std::vector<State> a = decompose_state(P, v1);
  const std::vector<State> b = decompose_state(P, v2);
  SameCycleResult out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Lfsr reg(P.block_polys[i]);
    State s = a[i];
    std::optional<std::uint64_t> hit;
    std::uint64_t period = 0;
    do {
      if (!hit && s == b[i]) hit = period;
      reg.step(s);
      ++period;
    } while (s != a[i]);
    out.component_periods.push_back(period);
    if (!hit) return out;
    out.component_shifts.push_back(*hit);
  }
  std::vector<std::int64_t> residues(out.component_shifts.begin(), out.component_shifts.end());
  const auto l = generalized_crt(residues, out.component_periods);
  if (!l) return out;
  out.same = true;
  out.shift = *l;
  return out;
}

}  // namespace lfsrcyc
