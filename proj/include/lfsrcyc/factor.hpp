#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lfsrcyc/poly.hpp"

namespace lfsrcyc {

// Seed of the equal-degree splitting PRNG (std::mt19937_64). The factor list
// itself does not depend on it; only the work done to find the splits does.
inline constexpr std::uint64_t kDefaultFactorSeed = 20160901;

/// f = unit * prod g_i^{b_i} with g_i pairwise distinct, monic, irreducible,
/// sorted by poly_less.
struct FactoredPoly {
  GFElem unit;
  std::vector<std::pair<Poly, unsigned>> factors;

  Poly expand() const;
  // sum of b_i * deg g_i
  unsigned degree() const;
};

// Square-free decomposition, distinct-degree and equal-degree splitting.
FactoredPoly factorize(const Poly& f, std::uint64_t seed = kDefaultFactorSeed);

}  // namespace lfsrcyc
