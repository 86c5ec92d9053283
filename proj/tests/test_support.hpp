#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lfsrcyc/lfsr.hpp"
#include "lfsrcyc/poly.hpp"
#include "lfsrcyc/text.hpp"

namespace lfsrcyc::testing {

inline const Field& gf2() {
  static const Field f = Field::prime(2);
  return f;
}

inline const Field& gf3() {
  static const Field f = Field::prime(3);
  return f;
}

inline Poly P3(const std::string& text) { return parse_poly(text, gf3()); }
inline State S3(const std::string& text) { return parse_state(text, gf3()); }

inline std::string str(const Poly& f) { return render_poly(f); }
inline std::string str(const State& s) { return render_state(s); }

inline std::vector<std::uint32_t> ints(std::span<const GFElem> s) {
  std::vector<std::uint32_t> out;
  for (const GFElem& x : s) out.push_back(x.coeffs()[0]);
  return out;
}

// Order of x modulo g by repeated multiplication.
inline std::uint64_t naive_order(const Poly& g) {
  const ResidueRing ring(g);
  const Poly x = ring.x();
  Poly acc = x;
  std::uint64_t e = 1;
  while (!(acc == ring.one())) {
    acc = ring.mul(acc, x);
    ++e;
  }
  return e;
}

// Least state on the cycle through s, found by stepping one full period.
inline State least_on_cycle(const Poly& f, const State& s) {
  const Lfsr reg(f);
  State cur = s, best = s;
  do {
    reg.step(cur);
    if (cur < best) best = cur;
  } while (cur != s);
  return best;
}

inline std::set<State> cycle_keys(const Poly& f, const std::vector<State>& states) {
  std::set<State> out;
  for (const State& s : states) out.insert(least_on_cycle(f, s));
  return out;
}

// Monic f of degree n with f(0) != 0 in lexicographic order.
inline std::vector<Poly> register_polys(const Field& field, unsigned n) {
  std::vector<Poly> out;
  for_each_monic(field, n, MonicOrder::kHighDegreeFirst, [&](const Poly& f) {
    if (!f.coeff(0).is_zero()) out.push_back(f);
    return true;
  });
  return out;
}

inline State random_state(const Field& field, std::size_t n, std::mt19937_64& rng) {
  State s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(field.from_index(rng() % field.q()));
  return s;
}

}  // namespace lfsrcyc::testing
