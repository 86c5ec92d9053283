#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lfsrcyc/lfsr.hpp"
#include "lfsrcyc/poly.hpp"

namespace lfsrcyc {

/// Data attached to a monic irreducible g with g(0) != 0 of degree n and
/// order e: t = (q^n - 1)/e, a primitive q(x) of degree n, and the exponent
/// t with g(alpha^t) = 0 for alpha the class of x modulo q(x).
struct IrreducibleFactorInfo {
  Poly g;
  unsigned n = 0;
  std::uint64_t e = 0;
  std::uint64_t t = 0;
  Poly associated_primitive;
  std::uint64_t beta_power = 0;
};

// Primitive polynomials of degree n, monic, in lexicographic order of their
// coefficient vectors with the constant term most significant.
std::vector<Poly> primitive_polynomials(const Field& field, unsigned n,
                                        std::uint64_t factor_cap = kDefaultFactorCap);

struct AssociationCount {
  std::uint64_t count = 0;
  bool self = false;  // g is primitive and is its own associate
};

// phi(q^n - 1) / phi(e); {1, true} when g is primitive.
AssociationCount count_associated_primitives(const Poly& g, std::uint64_t factor_cap = kDefaultFactorCap);

// True iff the t-decimation of q's m-sequence has minimal polynomial g.
bool is_associated(const Poly& g, const Poly& qpoly, std::uint64_t factor_cap = kDefaultFactorCap);

// First candidate associated with g; NotFoundError when none is.
Poly associate_primitive(const Poly& g, std::span<const Poly> candidates,
                         std::uint64_t factor_cap = kDefaultFactorCap);
// Scans all primitive polynomials of degree deg g in the documented order.
Poly associate_primitive(const Poly& g, std::uint64_t factor_cap = kDefaultFactorCap);

IrreducibleFactorInfo irreducible_info(const Poly& g, std::uint64_t factor_cap = kDefaultFactorCap);
// Uses the given primitive polynomial instead of searching for one.
IrreducibleFactorInfo irreducible_info(const Poly& g, const Poly& qpoly,
                                       std::uint64_t factor_cap = kDefaultFactorCap);

// One n-stage state per nonzero cycle of Omega(g), t in total. State i is
// (m_i, m_{i+t}, ..., m_{i+(n-1)t}) for the m-sequence m of q(x).
std::vector<State> states_by_decimation(const IrreducibleFactorInfo& info);

// Coordinates of alpha^i in the basis 1, beta, ..., beta^{n-1}.
std::vector<GFElem> beta_coordinates(const IrreducibleFactorInfo& info, std::uint64_t i);

// State i is (a_{i,0}, a_{i+t,0}, ..., a_{i+(n-1)t,0}) where a_{k,0} is the
// constant coordinate of alpha^k in the beta basis.
std::vector<State> states_by_cyclotomy(const IrreducibleFactorInfo& info);

struct CycleRep {
  std::uint64_t period = 0;
  State state;
};

// The zero cycle followed by the t cycles of period e (decimation states).
std::vector<CycleRep> cycle_structure_irreducible(const Poly& g, std::uint64_t factor_cap = kDefaultFactorCap);

}  // namespace lfsrcyc
