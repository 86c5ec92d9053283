#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace lfsrcyc {

class GFElem;

// GF(p^m) as Z_p[t]/(modulus). For m == 1 the modulus is empty.
struct FieldSpec {
  std::uint64_t p = 0;
  unsigned m = 0;
  std::vector<std::uint32_t> modulus;  // constant term first, monic, degree m
  std::uint64_t q = 0;
};

bool operator==(const FieldSpec& a, const FieldSpec& b);

/// Shared, immutable handle to a finite field. Cheap to copy.
///
/// Elements are dense coefficient vectors in the polynomial basis of the
/// modulus. Two handles compare equal when their specs are equal, so fields
/// built independently from the same parameters interoperate.
class Field {
 public:
  static Field prime(std::uint64_t p);
  // Uses the lexicographically smallest monic irreducible of degree m
  // (coefficients compared from the top degree down).
  static Field extension(std::uint64_t p, unsigned m);
  static Field extension(std::uint64_t p, unsigned m, std::vector<std::uint32_t> modulus);

  std::uint64_t p() const { return spec_->p; }
  unsigned m() const { return spec_->m; }
  std::uint64_t q() const { return spec_->q; }
  const FieldSpec& spec() const { return *spec_; }

  GFElem zero() const;
  GFElem one() const;
  // Image of an integer in the prime subfield.
  GFElem from_int(std::int64_t v) const;
  // Coefficients constant term first; length must be m, entries in [0, p).
  GFElem element(std::span<const std::uint32_t> coeffs) const;

  // Mixed-radix rank in [0, q) with the constant coefficient most
  // significant. Rank order agrees with operator<=> on elements.
  GFElem from_index(std::uint64_t index) const;
  std::uint64_t index(const GFElem& a) const;
  std::vector<GFElem> elements() const;

  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.spec_ == b.spec_ || *a.spec_ == *b.spec_;
  }

 private:
  explicit Field(std::shared_ptr<const FieldSpec> spec) : spec_(std::move(spec)) {}
  std::shared_ptr<const FieldSpec> spec_;
};

class GFElem {
 public:
  using Coeffs = boost::container::small_vector<std::uint32_t, 4>;

  const Field& field() const { return field_; }
  std::span<const std::uint32_t> coeffs() const { return {coeffs_.data(), coeffs_.size()}; }

  bool is_zero() const;
  bool is_one() const;

  GFElem operator-() const;
  GFElem& operator+=(const GFElem& b);
  GFElem& operator-=(const GFElem& b);
  GFElem& operator*=(const GFElem& b);
  GFElem& operator/=(const GFElem& b);
  friend GFElem operator+(GFElem a, const GFElem& b) { return a += b; }
  friend GFElem operator-(GFElem a, const GFElem& b) { return a -= b; }
  friend GFElem operator*(GFElem a, const GFElem& b) { return a *= b; }
  friend GFElem operator/(GFElem a, const GFElem& b) { return a /= b; }

  // Throws DomainError on zero.
  GFElem inv() const;
  // 0^0 = 1.
  GFElem pow(std::uint64_t k) const;

  friend bool operator==(const GFElem& a, const GFElem& b) { return a.coeffs_ == b.coeffs_; }
  // Lexicographic on coefficient tuples, constant term first.
  friend std::strong_ordering operator<=>(const GFElem& a, const GFElem& b);

 private:
  friend class Field;
  GFElem(Field f, Coeffs c) : field_(std::move(f)), coeffs_(std::move(c)) {}
  void require_same_field(const GFElem& b) const;

  Field field_;
  Coeffs coeffs_;
};

}  // namespace lfsrcyc
