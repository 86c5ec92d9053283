#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "lfsrcyc/gf.hpp"
#include "lfsrcyc/matrix.hpp"
#include "lfsrcyc/poly.hpp"

namespace lfsrcyc {

// n consecutive sequence entries (s_j, ..., s_{j+n-1}).
using State = std::vector<GFElem>;

// Upper bound on the number of steps generate_sequence will take.
inline constexpr std::uint64_t kDefaultPeriodCap = 100'000'000;

/// One least period of a periodic sequence.
struct Sequence {
  std::vector<GFElem> entries;

  std::uint64_t period() const { return entries.size(); }
  // s_i for any i >= 0, read cyclically.
  const GFElem& operator[](std::uint64_t i) const { return entries[i % entries.size()]; }
  friend bool operator==(const Sequence&, const Sequence&) = default;
};

/// Feedback of a monic characteristic polynomial f with f(0) != 0:
/// s_{k+n} = -(c_0 s_k + ... + c_{n-1} s_{k+n-1}).
class Lfsr {
 public:
  explicit Lfsr(const Poly& f);

  const Poly& poly() const { return f_; }
  const Field& field() const { return f_.field(); }
  unsigned stages() const { return static_cast<unsigned>(taps_.size()); }

  // The entry that follows the window s (|s| = n).
  GFElem next(std::span<const GFElem> s) const;
  // T: drop s_0, append the feedback entry.
  void step(State& s) const;
  // T^k. Iterates for k <= 4n, otherwise multiplies by A^k.
  State advance(const State& s, std::uint64_t k) const;
  // Appends entries to s until it has the requested length.
  void extend(std::vector<GFElem>& s, std::size_t length) const;

 private:
  void check(std::span<const GFElem> s) const;
  Poly f_;
  std::vector<GFElem> taps_;  // -c_i
};

// Ones on the subdiagonal, last column (-c_0, ..., -c_{n-1}).
Matrix companion_matrix(const Poly& f);

State step_state(const Poly& f, const State& s, std::uint64_t k);

// Runs the register until the state first returns to s0.
Sequence generate_sequence(const Poly& f, const State& s0, std::uint64_t period_cap = kDefaultPeriodCap);

// Least period of a periodic word given by one (not necessarily least) period.
std::uint64_t least_period(std::span<const GFElem> entries);

// L^i; negative i shifts right.
Sequence shift(const Sequence& s, std::int64_t i);

// v_j = s_{d j}, reduced to its least period.
Sequence decimate(const Sequence& s, std::uint64_t d);

// Tr(a) = a + a^q + ... + a^{q^{n-1}} for a in ring = GF(q)[x]/(g), g irreducible.
GFElem trace(const ResidueRing& ring, const Poly& a);

// Tr(gamma alpha^i) for i = 0 .. q^n - 2, alpha the class of x modulo qpoly.
Sequence trace_sequence(const Poly& qpoly, const Poly& gamma);

// The m-sequence of a primitive qpoly used throughout: the one whose first
// n entries are all 1. It is a shift of Tr(alpha^i).
Sequence m_sequence(const Poly& qpoly, std::uint64_t factor_cap = kDefaultFactorCap);

struct ZeroSequence {
  friend bool operator==(ZeroSequence, ZeroSequence) { return true; }
};
using MinimalPolynomial = std::variant<ZeroSequence, Poly>;

// Berlekamp-Massey over the given prefix. DomainError when the prefix is too
// short to determine the result (linear complexity above half its length).
MinimalPolynomial minimal_polynomial(std::span<const GFElem> prefix);
// Uses two full periods, which always suffices.
MinimalPolynomial minimal_polynomial(const Sequence& s);

}  // namespace lfsrcyc
