#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lfsrcyc/factor.hpp"
#include "lfsrcyc/lifting.hpp"
#include "lfsrcyc/lfsr.hpp"
#include "lfsrcyc/matrix.hpp"

namespace lfsrcyc {

// Cycles are rotated to their least state only when q^n is at most this.
inline constexpr std::uint64_t kDefaultCanonicalStateCap = 1u << 20;

/// Maps component states (a_1, ..., a_k), a_i in Omega(g_i^{b_i}), to a state
/// of Omega(f) by v = (a_1, ..., a_k) P. Row j of block i is the first n
/// entries of the sequence of g_i^{b_i} seeded with the j-th unit vector.
struct BlockMatrixP {
  Matrix P;
  Matrix P_inv;
  std::vector<std::size_t> offsets;  // first row of each block
  std::vector<std::size_t> sizes;    // b_i n_i
  std::vector<Poly> block_polys;     // g_i^{b_i}
};

BlockMatrixP build_P(const FactoredPoly& factored);

State compose_state(const BlockMatrixP& P, std::span<const State> components);
std::vector<State> decompose_state(const BlockMatrixP& P, std::span<const GFElem> v);

/// All cycles of Omega(g^b) for one factor.
struct FactorCycleSet {
  Poly g;
  unsigned b = 0;
  unsigned n = 0;
  std::uint64_t e = 0;
  std::uint64_t t = 0;
  std::uint64_t sigma = 0;  // nonzero cycles
  std::vector<PrimePowerCycle> cycles;  // zero cycle first
};

struct CycleClass {
  std::vector<unsigned> factor_exponents;  // minimal polynomial prod g_i^{r_i}
  std::uint64_t period = 0;
  State representative;
  std::vector<State> component_states;
};

struct CycleStructure {
  Poly f;
  FactoredPoly factored;
  BlockMatrixP P;
  std::vector<FactorCycleSet> per_factor;
  std::vector<CycleClass> cycles;
  bool canonical = false;  // representatives are least states of their cycles
};

struct StructureOptions {
  std::uint64_t factor_cap = kDefaultFactorCap;
  std::uint64_t canonical_state_cap = kDefaultCanonicalStateCap;
  std::uint64_t seed = kDefaultFactorSeed;
};

FactorCycleSet factor_cycles(const Poly& g, unsigned b, std::uint64_t factor_cap = kDefaultFactorCap);

// Every cycle of Omega(f) exactly once. Cycles are sorted by factor
// exponents, then period, then representative.
CycleStructure enumerate_cycles(const Poly& f, const StructureOptions& options = {});

// Least l >= 0 with l = residues[i] (mod moduli[i]) for all i, if any. Needs at
// least one congruence.
std::optional<std::uint64_t> generalized_crt(std::span<const std::int64_t> residues,
                                             std::span<const std::uint64_t> moduli);

struct SameCycleResult {
  bool same = false;
  std::uint64_t shift = 0;  // T^shift(v1) = v2 when same
  std::vector<std::uint64_t> component_periods;
  // T^{l_i}(a_i) = b_i; shorter than the factor list when a component failed.
  std::vector<std::uint64_t> component_shifts;
};

SameCycleResult same_cycle(const BlockMatrixP& P, std::span<const GFElem> v1, std::span<const GFElem> v2);

}  // namespace lfsrcyc
