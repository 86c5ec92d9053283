#include "lfsrcyc/irreducible.hpp"

#include <optional>

#include "lfsrcyc/errors.hpp"

namespace lfsrcyc {

namespace {

Poly require_irreducible(const Poly& g) {
  if (g.degree() < 1) throw DomainError("expected an irreducible polynomial of positive degree");
  const Poly h = g.monic();
  if (h.coeff(0).is_zero()) throw DomainError("irreducible factor must satisfy g(0) != 0");
  if (!is_irreducible(h)) throw DomainError("polynomial is not irreducible");
  return h;
}

std::uint64_t group_order(const Poly& g) {
  return checked_pow(g.field().q(), static_cast<std::uint64_t>(g.degree())) - 1;
}

// Cheap necessary and sufficient test: g(alpha^t) = 0 in GF(q)[x]/(qpoly).
bool root_matches(const Poly& g, const Poly& qpoly, std::uint64_t t) {
  const ResidueRing ring(qpoly);
  return ring.eval(g, ring.pow(ring.x(), t)).is_zero();
}

}  // namespace

std::vector<Poly> primitive_polynomials(const Field& field, unsigned n, std::uint64_t factor_cap) {
  std::vector<Poly> out;
  for_each_monic(field, n, MonicOrder::kConstantFirst, [&](const Poly& p) {
    if (!p.coeff(0).is_zero() && is_primitive(p, factor_cap)) out.push_back(p);
    return true;
  });
  return out;
}

AssociationCount count_associated_primitives(const Poly& g, std::uint64_t factor_cap) {
  const Poly h = require_irreducible(g);
  const std::uint64_t full = group_order(h);
  const std::uint64_t e = poly_order(h, factor_cap);
  if (e == full) return {1, true};
  return {euler_phi(full, factor_cap) / euler_phi(e, factor_cap), false};
}

bool is_associated(const Poly& g, const Poly& qpoly, std::uint64_t factor_cap) {
  const Poly h = require_irreducible(g);
  if (qpoly.degree() != h.degree()) return false;
  const std::uint64_t t = group_order(h) / poly_order(h, factor_cap);
  const Sequence decimated = decimate(m_sequence(qpoly, factor_cap), t);
  const MinimalPolynomial mp = minimal_polynomial(decimated);
  const Poly* found = std::get_if<Poly>(&mp);
  return found && *found == h;
}

Poly associate_primitive(const Poly& g, std::span<const Poly> candidates, std::uint64_t factor_cap) {
  for (const Poly& p : candidates) {
    if (is_associated(g, p, factor_cap)) return p;
  }
  throw NotFoundError("no candidate primitive polynomial is associated with the given factor");
}

Poly associate_primitive(const Poly& g, std::uint64_t factor_cap) {
  const Poly h = require_irreducible(g);
  const std::uint64_t t = group_order(h) / poly_order(h, factor_cap);
  if (t == 1) return h;
  std::optional<Poly> found;
  for_each_monic(h.field(), static_cast<unsigned>(h.degree()), MonicOrder::kConstantFirst, [&](const Poly& p) {
    if (p.coeff(0).is_zero() || !is_primitive(p, factor_cap)) return true;
    if (!root_matches(h, p, t)) return true;
    if (!is_associated(h, p, factor_cap)) throw InternalError("decimation disagrees with root test");
    found = p;
    return false;
  });
  if (!found) throw InternalError("irreducible polynomial without an associated primitive polynomial");
  return *found;
}

IrreducibleFactorInfo irreducible_info(const Poly& g, std::uint64_t factor_cap) {
  const Poly h = require_irreducible(g);
  return irreducible_info(h, associate_primitive(h, factor_cap), factor_cap);
}

IrreducibleFactorInfo irreducible_info(const Poly& g, const Poly& qpoly, std::uint64_t factor_cap) {
  IrreducibleFactorInfo info{require_irreducible(g), 0, 0, 0, qpoly.monic(), 0};
  info.n = static_cast<unsigned>(info.g.degree());
  info.e = poly_order(info.g, factor_cap);
  info.t = group_order(info.g) / info.e;
  info.beta_power = info.t;
  if (!is_primitive(info.associated_primitive, factor_cap) || info.associated_primitive.degree() != g.degree()) {
    throw DomainError("associated polynomial must be primitive of the same degree");
  }
  if (!root_matches(info.g, info.associated_primitive, info.t)) {
    throw DomainError("primitive polynomial is not associated with the factor");
  }
  return info;
}

std::vector<State> states_by_decimation(const IrreducibleFactorInfo& info) {
  const Sequence m = m_sequence(info.associated_primitive);
  std::vector<State> out;
  for (std::uint64_t i = 0; i < info.t; ++i) {
    State s;
    for (unsigned j = 0; j < info.n; ++j) s.push_back(m[i + j * info.t]);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<GFElem> beta_coordinates(const IrreducibleFactorInfo& info, std::uint64_t i) {
  const ResidueRing ring(info.associated_primitive);
  const Field& field = ring.base();
  const std::size_t n = info.n;
  const Poly beta = ring.pow(ring.x(), info.beta_power);
  // Column j holds the alpha-coordinates of beta^j.
  Matrix basis(field, n, n);
  Poly power = ring.one();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) basis.at(k, j) = power.coeff(k);
    power = ring.mul(power, beta);
  }
  const std::optional<Matrix> inv = inverse(basis);
  if (!inv) throw InternalError("powers of beta do not form a basis");
  const Poly target = ring.pow(ring.x(), i);
  std::vector<GFElem> coords(n, field.zero());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) coords[j] += inv->at(j, k) * target.coeff(k);
  }
  return coords;
}

std::vector<State> states_by_cyclotomy(const IrreducibleFactorInfo& info) {
  const std::size_t n = info.n;
  std::vector<State> out;
  for (std::uint64_t i = 0; i < info.t; ++i) {
    std::vector<GFElem> v = beta_coordinates(info, i);
    State s;
    for (std::size_t j = 0; j < n; ++j) {
      s.push_back(v[0]);
      // Multiply by beta, reducing with beta^n = -(g_0 + ... + g_{n-1} beta^{n-1}).
      const GFElem top = v[n - 1];
      for (std::size_t k = n - 1; k > 0; --k) v[k] = v[k - 1] - info.g.coeffs()[k] * top;
      v[0] = -(info.g.coeffs()[0] * top);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<CycleRep> cycle_structure_irreducible(const Poly& g, std::uint64_t factor_cap) {
  const IrreducibleFactorInfo info = irreducible_info(g, factor_cap);
  std::vector<CycleRep> out;
  out.push_back({1, State(info.n, info.g.field().zero())});
  for (State& s : states_by_decimation(info)) out.push_back({info.e, std::move(s)});
  return out;
}

}  // namespace lfsrcyc
