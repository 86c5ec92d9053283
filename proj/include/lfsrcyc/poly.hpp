#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "lfsrcyc/gf.hpp"
#include "lfsrcyc/intmath.hpp"

namespace lfsrcyc {

/// Dense univariate polynomial over GF(q), constant term first.
///
/// The zero polynomial has an empty coefficient vector and degree -1; every
/// other polynomial has a nonzero leading coefficient.
class Poly {
 public:
  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, std::vector<GFElem> coeffs);

  static Poly constant(const GFElem& c);
  static Poly monomial(const GFElem& c, std::size_t k);
  static Poly x(const Field& field);
  // Prime-field shorthand: integers are reduced into the prime subfield.
  static Poly from_ints(const Field& field, std::vector<std::int64_t> constant_first);

  const Field& field() const { return field_; }
  const std::vector<GFElem>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  GFElem coeff(std::size_t i) const;
  GFElem leading() const;
  bool is_monic() const;
  Poly monic() const;
  Poly derivative() const;
  GFElem eval(const GFElem& at) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& b);
  Poly& operator-=(const Poly& b);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const GFElem& c);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  Field field_;
  std::vector<GFElem> coeffs_;
};

// Degree first, then coefficients compared from the top degree down.
bool poly_less(const Poly& a, const Poly& b);

// Quotient and remainder; deg(remainder) < deg(divisor). Zero divisor -> DomainError.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly pow(const Poly& base, unsigned e);

/// Arithmetic in GF(q)[x]/(modulus). When the modulus is irreducible of
/// degree n this is GF(q^n) with the class of x as a root of the modulus.
class ResidueRing {
 public:
  explicit ResidueRing(Poly modulus);

  const Poly& modulus() const { return modulus_; }
  const Field& base() const { return modulus_.field(); }
  unsigned degree() const { return static_cast<unsigned>(modulus_.degree()); }

  Poly reduce(const Poly& a) const { return a % modulus_; }
  Poly one() const;
  Poly x() const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly pow(const Poly& a, std::uint64_t k) const;
  // a^q
  Poly frobenius(const Poly& a) const;
  // h(a) for a polynomial h over the base field.
  Poly eval(const Poly& h, const Poly& a) const;

 private:
  Poly modulus_;
};

// Rabin's test. Constant input -> DomainError.
bool is_irreducible(const Poly& g);

// Least e with g | x^e - 1, for monic irreducible g with g(0) != 0.
std::uint64_t poly_order(const Poly& g, std::uint64_t factor_cap = kDefaultFactorCap);

bool is_primitive(const Poly& g, std::uint64_t factor_cap = kDefaultFactorCap);

enum class MonicOrder {
  kConstantFirst,    // c_0 is the most significant digit
  kHighDegreeFirst,  // c_{n-1} is the most significant digit
};

// Visits every monic polynomial of degree n in lexicographic order of its
// coefficient vector under the chosen significance. The visitor returns
// false to stop early.
void for_each_monic(const Field& field, unsigned n, MonicOrder order,
                    const std::function<bool(const Poly&)>& visit);

}  // namespace lfsrcyc
