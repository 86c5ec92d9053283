#include "lfsrcyc/lfsr.hpp"

#include "lfsrcyc/errors.hpp"

namespace lfsrcyc {

namespace {

void require_register_poly(const Poly& f) {
  if (f.degree() < 1) throw DomainError("characteristic polynomial must have positive degree");
  if (!f.is_monic()) throw DomainError("characteristic polynomial must be monic");
  if (f.coeff(0).is_zero()) throw DomainError("characteristic polynomial must satisfy f(0) != 0");
}

}  // namespace

Lfsr::Lfsr(const Poly& f) : f_(f) {
  require_register_poly(f);
  for (int i = 0; i < f.degree(); ++i) taps_.push_back(-f.coeffs()[i]);
}

void Lfsr::check(std::span<const GFElem> s) const {
  if (s.size() != taps_.size()) {
    throw DomainError("state has " + std::to_string(s.size()) + " entries, register has " +
                      std::to_string(taps_.size()) + " stages");
  }
}

GFElem Lfsr::next(std::span<const GFElem> s) const {
  GFElem acc = field().zero();
  for (std::size_t i = 0; i < taps_.size(); ++i) {
    if (!taps_[i].is_zero() && !s[i].is_zero()) acc += taps_[i] * s[i];
  }
  return acc;
}

void Lfsr::step(State& s) const {
  check(s);
  GFElem fresh = next(s);
  for (std::size_t i = 0; i + 1 < s.size(); ++i) s[i] = std::move(s[i + 1]);
  s.back() = std::move(fresh);
}

State Lfsr::advance(const State& s, std::uint64_t k) const {
  check(s);
  if (k <= 4 * static_cast<std::uint64_t>(stages())) {
    State out = s;
    for (std::uint64_t i = 0; i < k; ++i) step(out);
    return out;
  }
  return std::span<const GFElem>(s) * pow(companion_matrix(f_), k);
}

void Lfsr::extend(std::vector<GFElem>& s, std::size_t length) const {
  if (s.size() < taps_.size()) throw DomainError("cannot extend a partial state");
  const std::size_t n = taps_.size();
  while (s.size() < length) s.push_back(next(std::span<const GFElem>(s).subspan(s.size() - n, n)));
}

Matrix companion_matrix(const Poly& f) {
  require_register_poly(f);
  const std::size_t n = static_cast<std::size_t>(f.degree());
  Matrix a(f.field(), n, n);
  for (std::size_t i = 1; i < n; ++i) a.at(i, i - 1) = f.field().one();
  for (std::size_t i = 0; i < n; ++i) a.at(i, n - 1) = -f.coeffs()[i];
  return a;
}

State step_state(const Poly& f, const State& s, std::uint64_t k) { return Lfsr(f).advance(s, k); }

Sequence generate_sequence(const Poly& f, const State& s0, std::uint64_t period_cap) {
  const Lfsr reg(f);
  State s = s0;
  reg.step(s);  // validates the length
  Sequence out;
  out.entries.push_back(s0.front());
  while (s != s0) {
    if (out.entries.size() >= period_cap) {
      throw ResourceError("period exceeds the cap of " + std::to_string(period_cap));
    }
    out.entries.push_back(s.front());
    reg.step(s);
  }
  return out;
}

std::uint64_t least_period(std::span<const GFElem> entries) {
  const std::uint64_t n = entries.size();
  if (n == 0) throw DomainError("empty sequence has no period");
  auto is_period = [&](std::uint64_t d) {
    for (std::uint64_t i = d; i < n; ++i) {
      if (!(entries[i] == entries[i - d])) return false;
    }
    return true;
  };
  std::uint64_t best = n;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    if (is_period(d)) return d;
    if (n / d < best && is_period(n / d)) best = n / d;
  }
  return best;
}

Sequence shift(const Sequence& s, std::int64_t i) {
  const auto n = static_cast<std::int64_t>(s.period());
  const auto k = static_cast<std::uint64_t>(((i % n) + n) % n);
  Sequence out;
  out.entries.reserve(s.entries.size());
  for (std::uint64_t j = 0; j < s.period(); ++j) out.entries.push_back(s[j + k]);
  return out;
}

Sequence decimate(const Sequence& s, std::uint64_t d) {
  if (d == 0) throw DomainError("decimation factor must be positive");
  const std::uint64_t n = s.period();
  const std::uint64_t len = n / gcd_u64(n, d % n == 0 ? n : d % n);
  Sequence out;
  out.entries.reserve(len);
  for (std::uint64_t j = 0; j < len; ++j) out.entries.push_back(s.entries[(j * (d % n)) % n]);
  out.entries.resize(least_period(out.entries), s.entries.front());
  return out;
}

GFElem trace(const ResidueRing& ring, const Poly& a) {
  Poly acc(ring.base());
  Poly term = ring.reduce(a);
  for (unsigned i = 0; i < ring.degree(); ++i) {
    acc += term;
    term = ring.frobenius(term);
  }
  if (acc.degree() > 0) throw InternalError("trace left the base field");
  return acc.coeff(0);
}

Sequence trace_sequence(const Poly& qpoly, const Poly& gamma) {
  if (!is_irreducible(qpoly)) throw DomainError("trace sequence needs an irreducible modulus");
  const ResidueRing ring(qpoly);
  const std::uint64_t len = checked_pow(qpoly.field().q(), ring.degree()) - 1;
  Sequence out;
  Poly power = ring.reduce(gamma);
  const Poly x = ring.x();
  for (std::uint64_t i = 0; i < len; ++i) {
    out.entries.push_back(trace(ring, power));
    power = ring.mul(power, x);
  }
  out.entries.resize(least_period(out.entries), qpoly.field().zero());
  return out;
}

Sequence m_sequence(const Poly& qpoly, std::uint64_t factor_cap) {
  if (!is_primitive(qpoly, factor_cap)) throw DomainError("m-sequence needs a primitive polynomial");
  const Poly f = qpoly.monic();
  return generate_sequence(f, State(static_cast<std::size_t>(f.degree()), f.field().one()));
}

MinimalPolynomial minimal_polynomial(std::span<const GFElem> prefix) {
  if (prefix.empty()) throw DomainError("minimal polynomial needs at least one entry");
  const Field& field = prefix.front().field();
  // Connection polynomial C(x) = 1 + c_1 x + ... + c_L x^L.
  std::vector<GFElem> c{field.one()}, b{field.one()};
  std::size_t len = 0, gap = 1;
  GFElem last = field.one();
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    GFElem d = prefix[k];
    for (std::size_t i = 1; i <= len && i < c.size(); ++i) d += c[i] * prefix[k - i];
    if (d.is_zero()) {
      ++gap;
      continue;
    }
    const GFElem coef = d / last;
    std::vector<GFElem> updated = c;
    if (updated.size() < b.size() + gap) updated.resize(b.size() + gap, field.zero());
    for (std::size_t i = 0; i < b.size(); ++i) updated[i + gap] -= coef * b[i];
    if (2 * len <= k) {
      b = std::move(c);
      len = k + 1 - len;
      last = d;
      gap = 1;
    } else {
      ++gap;
    }
    c = std::move(updated);
  }
  if (2 * len > prefix.size()) {
    throw DomainError("prefix of length " + std::to_string(prefix.size()) +
                      " is too short for linear complexity " + std::to_string(len));
  }
  if (len == 0) return ZeroSequence{};
  c.resize(len + 1, field.zero());
  // x^L C(1/x)
  std::vector<GFElem> coeffs(c.rbegin(), c.rend());
  return Poly(field, std::move(coeffs));
}

MinimalPolynomial minimal_polynomial(const Sequence& s) {
  std::vector<GFElem> two = s.entries;
  two.insert(two.end(), s.entries.begin(), s.entries.end());
  return minimal_polynomial(two);
}

}  // namespace lfsrcyc
