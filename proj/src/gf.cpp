#include "lfsrcyc/gf.hpp"

#include <algorithm>
#include <optional>

#include "lfsrcyc/errors.hpp"
#include "lfsrcyc/intmath.hpp"
#include "lfsrcyc/poly.hpp"

namespace lfsrcyc {

bool operator==(const FieldSpec& a, const FieldSpec& b) {
  return a.p == b.p && a.m == b.m && a.modulus == b.modulus;
}

namespace {

// Largest characteristic accepted; keeps every product of two residues in 64 bits.
constexpr std::uint64_t kMaxCharacteristic = (1ULL << 31);

void check_characteristic(std::uint64_t p) {
  if (p < 2 || !is_prime_u64(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  if (p >= kMaxCharacteristic) throw DomainError("characteristic " + std::to_string(p) + " is too large");
}

std::vector<std::uint32_t> to_residues(const Poly& g) {
  std::vector<std::uint32_t> out;
  for (const auto& c : g.coeffs()) out.push_back(c.coeffs()[0]);
  return out;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  check_characteristic(p);
  auto spec = std::make_shared<FieldSpec>();
  spec->p = p;
  spec->m = 1;
  spec->q = p;
  return Field(std::move(spec));
}

Field Field::extension(std::uint64_t p, unsigned m) {
  if (m == 0) throw DomainError("extension degree must be at least 1");
  if (m == 1) return prime(p);
  const Field base = prime(p);
  checked_pow(p, m);
  // Candidates in increasing order when compared from the top coefficient
  // down: enumerate c_{m-1} slowest, c_0 fastest.
  std::optional<Poly> found;
  for_each_monic(base, m, MonicOrder::kHighDegreeFirst, [&](const Poly& g) {
    if (g.coeff(0).is_zero() || !is_irreducible(g)) return true;
    found = g;
    return false;
  });
  if (!found) throw InternalError("no irreducible polynomial of degree " + std::to_string(m));
  return extension(p, m, to_residues(*found));
}

Field Field::extension(std::uint64_t p, unsigned m, std::vector<std::uint32_t> modulus) {
  if (m == 0) throw DomainError("extension degree must be at least 1");
  if (m == 1) {
    if (!modulus.empty() && !(modulus.size() == 2 && modulus[1] == 1))
      throw DomainError("a degree-1 field takes no modulus");
    return prime(p);
  }
  const Field base = prime(p);
  if (modulus.size() != m + 1) throw DomainError("modulus must have degree exactly " + std::to_string(m));
  if (modulus.back() != 1) throw DomainError("modulus must be monic");
  std::vector<GFElem> cs;
  for (auto c : modulus) {
    if (c >= p) throw DomainError("modulus coefficient out of range");
    cs.push_back(base.from_int(c));
  }
  if (!is_irreducible(Poly(base, std::move(cs)))) throw DomainError("modulus is not irreducible over Z_p");
  auto spec = std::make_shared<FieldSpec>();
  spec->p = p;
  spec->m = m;
  spec->modulus = std::move(modulus);
  spec->q = checked_pow(p, m);
  return Field(std::move(spec));
}

GFElem Field::zero() const { return GFElem(*this, GFElem::Coeffs(m(), 0)); }

GFElem Field::one() const {
  GFElem::Coeffs c(m(), 0);
  c[0] = 1;
  return GFElem(*this, std::move(c));
}

GFElem Field::from_int(std::int64_t v) const {
  const auto pp = static_cast<std::int64_t>(p());
  std::int64_t r = v % pp;
  if (r < 0) r += pp;
  GFElem::Coeffs c(m(), 0);
  c[0] = static_cast<std::uint32_t>(r);
  return GFElem(*this, std::move(c));
}

GFElem Field::element(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != m()) throw DomainError("element needs exactly " + std::to_string(m()) + " coefficients");
  for (auto c : coeffs) {
    if (c >= p()) throw DomainError("coefficient " + std::to_string(c) + " out of range for GF(" + std::to_string(p()) + ")");
  }
  return GFElem(*this, GFElem::Coeffs(coeffs.begin(), coeffs.end()));
}

GFElem Field::from_index(std::uint64_t index) const {
  if (index >= q()) throw DomainError("element index out of range");
  GFElem::Coeffs c(m(), 0);
  for (unsigned i = m(); i-- > 0;) {
    c[i] = static_cast<std::uint32_t>(index % p());
    index /= p();
  }
  return GFElem(*this, std::move(c));
}

std::uint64_t Field::index(const GFElem& a) const {
  std::uint64_t r = 0;
  for (auto c : a.coeffs()) r = r * p() + c;
  return r;
}

std::vector<GFElem> Field::elements() const {
  std::vector<GFElem> out;
  out.reserve(q());
  for (std::uint64_t i = 0; i < q(); ++i) out.push_back(from_index(i));
  return out;
}

std::string Field::describe() const {
  if (m() == 1) return "GF(" + std::to_string(p()) + ")";
  std::string s = "GF(" + std::to_string(p()) + "^" + std::to_string(m()) + ") mod ";
  bool first = true;
  for (unsigned i = m() + 1; i-- > 0;) {
    const auto c = spec_->modulus[i];
    if (c == 0) continue;
    if (!first) s += "+";
    first = false;
    if (i == 0 || c != 1) s += std::to_string(c);
    if (i >= 1) s += "t";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

// ---------------------------------------------------------------------------

void GFElem::require_same_field(const GFElem& b) const {
  if (!(field_ == b.field_)) throw DomainError("operands belong to different fields");
}

bool GFElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c == 0; });
}

bool GFElem::is_one() const {
  if (coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](auto c) { return c == 0; });
}

GFElem GFElem::operator-() const {
  GFElem r = *this;
  const auto p = field_.p();
  for (auto& c : r.coeffs_) c = c == 0 ? 0 : static_cast<std::uint32_t>(p - c);
  return r;
}

GFElem& GFElem::operator+=(const GFElem& b) {
  require_same_field(b);
  const auto p = field_.p();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::uint64_t s = std::uint64_t{coeffs_[i]} + b.coeffs_[i];
    coeffs_[i] = static_cast<std::uint32_t>(s >= p ? s - p : s);
  }
  return *this;
}

GFElem& GFElem::operator-=(const GFElem& b) {
  require_same_field(b);
  const auto p = field_.p();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::uint64_t s = std::uint64_t{coeffs_[i]} + p - b.coeffs_[i];
    coeffs_[i] = static_cast<std::uint32_t>(s >= p ? s - p : s);
  }
  return *this;
}

GFElem& GFElem::operator*=(const GFElem& b) {
  require_same_field(b);
  const auto p = field_.p();
  const unsigned m = field_.m();
  if (m == 1) {
    coeffs_[0] = static_cast<std::uint32_t>(std::uint64_t{coeffs_[0]} * b.coeffs_[0] % p);
    return *this;
  }
  boost::container::small_vector<std::uint64_t, 8> prod(2 * m - 1, 0);
  for (unsigned i = 0; i < m; ++i) {
    if (coeffs_[i] == 0) continue;
    for (unsigned j = 0; j < m; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{coeffs_[i]} * b.coeffs_[j]) % p;
    }
  }
  // Reduce with the monic modulus: t^m = -(mod_0 + ... + mod_{m-1} t^{m-1}).
  const auto& mod = field_.spec().modulus;
  for (unsigned d = 2 * m - 2; d >= m; --d) {
    const std::uint64_t top = prod[d];
    if (top == 0) continue;
    prod[d] = 0;
    for (unsigned i = 0; i < m; ++i) {
      prod[d - m + i] = (prod[d - m + i] + (p - top) * mod[i]) % p;
    }
  }
  for (unsigned i = 0; i < m; ++i) coeffs_[i] = static_cast<std::uint32_t>(prod[i]);
  return *this;
}

GFElem& GFElem::operator/=(const GFElem& b) {
  require_same_field(b);
  return *this *= b.inv();
}

GFElem GFElem::inv() const {
  if (is_zero()) throw DomainError("division by zero in " + field_.describe());
  if (field_.m() == 1) {
    // Extended Euclid on residues.
    std::int64_t a = coeffs_[0], m = static_cast<std::int64_t>(field_.p());
    std::int64_t x0 = 1, x1 = 0;
    while (m != 0) {
      const std::int64_t qt = a / m;
      std::int64_t t = a - qt * m;
      a = m;
      m = t;
      t = x0 - qt * x1;
      x0 = x1;
      x1 = t;
    }
    return field_.from_int(x0);
  }
  return pow(field_.q() - 2);
}

GFElem GFElem::pow(std::uint64_t k) const {
  GFElem result = field_.one();
  GFElem base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

std::strong_ordering operator<=>(const GFElem& a, const GFElem& b) {
  return std::lexicographical_compare_three_way(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(),
                                                b.coeffs_.end());
}

}  // namespace lfsrcyc
