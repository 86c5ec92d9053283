#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lfsrcyc/lfsr.hpp"
#include "lfsrcyc/poly.hpp"

namespace lfsrcyc {

// b_i = g_0 a_i + ... + g_{n-1} a_{i+n-1} + a_{i+n} for 0 <= i < |a| - n.
// |a| must be (r+1)n with r >= 1.
std::vector<GFElem> d_map(const Poly& g, std::span<const GFElem> a);

// The unique a with the given first n entries and d_map(g, a) = b.
std::vector<GFElem> d_preimage(const Poly& g, std::span<const GFElem> b, std::span<const GFElem> prefix);

// The (r+1)n-stage states of all q^n sequences of Omega(g), ordered
// lexicographically (equivalently by their first n entries).
std::vector<State> kernel_states(const Poly& g, unsigned r);

struct LiftedRepresentative {
  State a;        // d_preimage(g, b, 0)
  State a_prime;  // T^{er}(a) - a under g^{r+1}; empty unless r is a power of p
  std::vector<State> states;  // (r+1)n-stage, one per cycle
};

// Lifts one cycle with minimal polynomial g^r (given by an rn-stage state b)
// to the cycles with minimal polynomial g^{r+1} lying over it. e = ord(g).
LiftedRepresentative lift_representative(const Poly& g, unsigned r, std::uint64_t e, const State& b);

std::vector<State> lift_level(const Poly& g, unsigned r, std::uint64_t e, std::span<const State> reps);

struct LevelShape {
  std::uint64_t count = 0;   // t q^{n(r-1)} / p^c, or 1 for r = 0
  std::uint64_t period = 0;  // e p^c, or 1 for r = 0
};

// c is the least integer with p^c >= r.
LevelShape level_shape(const Poly& g, std::uint64_t e, unsigned r);

struct PrimePowerCycle {
  unsigned r = 0;  // minimal polynomial g^r
  std::uint64_t period = 0;
  State state;  // b n stages
};

// All cycles of Omega(g^b), level by level starting from the zero cycle.
std::vector<PrimePowerCycle> cycle_structure_prime_power(const Poly& g, unsigned b,
                                                         std::uint64_t factor_cap = kDefaultFactorCap);

}  // namespace lfsrcyc
