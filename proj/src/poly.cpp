#include "lfsrcyc/poly.hpp"

#include <algorithm>

#include "lfsrcyc/errors.hpp"

namespace lfsrcyc {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) throw DomainError("polynomials over different fields");
}

}  // namespace

Poly::Poly(Field field, std::vector<GFElem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!(c.field() == field_)) throw DomainError("coefficient from a different field");
  }
  trim();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const GFElem& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const GFElem& c, std::size_t k) {
  std::vector<GFElem> cs(k + 1, c.field().zero());
  cs[k] = c;
  return Poly(c.field(), std::move(cs));
}

Poly Poly::x(const Field& field) { return monomial(field.one(), 1); }

Poly Poly::from_ints(const Field& field, std::vector<std::int64_t> constant_first) {
  std::vector<GFElem> cs;
  cs.reserve(constant_first.size());
  for (auto v : constant_first) cs.push_back(field.from_int(v));
  return Poly(field, std::move(cs));
}

GFElem Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }

GFElem Poly::leading() const {
  if (is_zero()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool Poly::is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inv();
}

Poly Poly::derivative() const {
  std::vector<GFElem> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(coeffs_[i] * field_.from_int(static_cast<std::int64_t>(i % field_.p())));
  }
  return Poly(field_, std::move(out));
}

GFElem Poly::eval(const GFElem& at) const {
  GFElem acc = field_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& b) {
  require_same_field(*this, b);
  if (coeffs_.size() < b.coeffs_.size()) coeffs_.resize(b.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& b) {
  require_same_field(*this, b);
  if (coeffs_.size() < b.coeffs_.size()) coeffs_.resize(b.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  std::vector<GFElem> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.field().zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(a.field(), std::move(out));
}

Poly operator*(const Poly& a, const GFElem& c) {
  Poly r = a;
  for (auto& x : r.coeffs_) x *= c;
  r.trim();
  return r;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(),
                                      b.coeffs().rend());
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<GFElem> rem = a.coeffs();
  std::vector<GFElem> quot(a.degree() - b.degree() + 1, f.zero());
  const GFElem lead_inv = b.leading().inv();
  const int db = b.degree();
  for (int d = a.degree(); d >= db; --d) {
    if (rem[d].is_zero()) continue;
    const GFElem c = rem[d] * lead_inv;
    quot[d - db] = c;
    for (int i = 0; i <= db; ++i) rem[d - db + i] -= c * b.coeffs()[i];
  }
  rem.resize(db, f.zero());
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly pow(const Poly& base, unsigned e) {
  Poly result = Poly::constant(base.field().one());
  for (unsigned i = 0; i < e; ++i) result = result * base;
  return result;
}

// ---------------------------------------------------------------------------

ResidueRing::ResidueRing(Poly modulus) : modulus_(std::move(modulus)) {
  if (modulus_.degree() < 1) throw DomainError("residue ring modulus must have positive degree");
  modulus_ = modulus_.monic();
}

Poly ResidueRing::one() const { return Poly::constant(base().one()); }

Poly ResidueRing::x() const { return reduce(Poly::x(base())); }

Poly ResidueRing::mul(const Poly& a, const Poly& b) const { return reduce(a * b); }

Poly ResidueRing::pow(const Poly& a, std::uint64_t k) const {
  Poly result = one() % modulus_;
  Poly b = reduce(a);
  while (k) {
    if (k & 1) result = mul(result, b);
    k >>= 1;
    if (k) b = mul(b, b);
  }
  return result;
}

Poly ResidueRing::frobenius(const Poly& a) const { return pow(a, base().q()); }

Poly ResidueRing::eval(const Poly& h, const Poly& a) const {
  Poly acc(base());
  for (auto it = h.coeffs().rbegin(); it != h.coeffs().rend(); ++it) {
    acc = mul(acc, a) + Poly::constant(*it);
  }
  return reduce(acc);
}

// ---------------------------------------------------------------------------

bool is_irreducible(const Poly& g) {
  if (g.degree() < 1) throw DomainError("irreducibility is undefined for constants");
  const unsigned n = static_cast<unsigned>(g.degree());
  if (n == 1) return true;
  const ResidueRing ring(g);
  const Poly x = ring.x();
  // frob[k] = x^{q^k} mod g for k = 0..n
  std::vector<Poly> frob{x};
  for (unsigned k = 1; k <= n; ++k) frob.push_back(ring.frobenius(frob.back()));
  if (!(frob[n] == x)) return false;
  for (auto [r, mult] : factor_trial(n)) {
    (void)mult;
    const Poly d = gcd(frob[n / r] - x, ring.modulus());
    if (d.degree() != 0) return false;
  }
  return true;
}

std::uint64_t poly_order(const Poly& g, std::uint64_t factor_cap) {
  if (g.degree() < 1) throw DomainError("order is undefined for constants");
  const Poly h = g.monic();
  if (h.coeff(0).is_zero()) throw DomainError("order requires g(0) != 0");
  if (!is_irreducible(h)) throw DomainError("order computation requires an irreducible polynomial");
  const ResidueRing ring(h);
  std::uint64_t e = checked_pow(h.field().q(), static_cast<std::uint64_t>(h.degree())) - 1;
  const Poly x = ring.x();
  for (auto [r, mult] : factor_trial(e, factor_cap)) {
    for (unsigned i = 0; i < mult; ++i) {
      if (!(ring.pow(x, e / r) == ring.one())) break;
      e /= r;
    }
  }
  return e;
}

bool is_primitive(const Poly& g, std::uint64_t factor_cap) {
  if (g.degree() < 1) return false;
  const Poly h = g.monic();
  if (h.coeff(0).is_zero() || !is_irreducible(h)) return false;
  const std::uint64_t full = checked_pow(h.field().q(), static_cast<std::uint64_t>(h.degree())) - 1;
  return poly_order(h, factor_cap) == full;
}

void for_each_monic(const Field& field, unsigned n, MonicOrder order,
                    const std::function<bool(const Poly&)>& visit) {
  const std::uint64_t q = field.q();
  const std::uint64_t count = checked_pow(q, n);
  std::vector<GFElem> cs(n + 1, field.zero());
  cs[n] = field.one();
  for (std::uint64_t k = 0; k < count; ++k) {
    std::uint64_t rest = k;
    // Least significant digit first.
    for (unsigned d = 0; d < n; ++d) {
      const unsigned pos = order == MonicOrder::kHighDegreeFirst ? d : n - 1 - d;
      cs[pos] = field.from_index(rest % q);
      rest /= q;
    }
    if (!visit(Poly(field, cs))) return;
  }
}

}  // namespace lfsrcyc
