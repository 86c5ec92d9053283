#include "lfsrcyc/factor.hpp"

#include <algorithm>
#include <random>

#include "lfsrcyc/errors.hpp"

namespace lfsrcyc {

namespace {

using Factors = std::vector<std::pair<Poly, unsigned>>;

// Input has f' = 0, i.e. only exponents divisible by p.
Poly pth_root(const Poly& f) {
  const Field& field = f.field();
  const std::uint64_t p = field.p();
  const std::uint64_t root_exp = field.q() / p;  // c^{q/p} is the p-th root of c
  std::vector<GFElem> cs;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) cs.push_back(f.coeffs()[i].pow(root_exp));
  return Poly(field, std::move(cs));
}

Factors square_free(const Poly& f) {
  Factors out;
  const std::uint64_t p = f.field().p();
  const Poly fp = f.derivative();
  if (fp.is_zero()) {
    for (auto& [g, k] : square_free(pth_root(f))) out.emplace_back(g, static_cast<unsigned>(k * p));
    return out;
  }
  Poly c = gcd(f, fp);
  Poly w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac, i);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) {
    for (auto& [g, k] : square_free(pth_root(c))) out.emplace_back(g, static_cast<unsigned>(k * p));
  }
  return out;
}

// Returns (product of all irreducible factors of degree d, d).
std::vector<std::pair<Poly, unsigned>> distinct_degree(const Poly& f) {
  std::vector<std::pair<Poly, unsigned>> out;
  const Poly x = Poly::x(f.field());
  Poly rest = f;
  Poly h = x % f;
  unsigned d = 0;
  while (rest.degree() >= 2 * static_cast<int>(d + 1)) {
    ++d;
    h = ResidueRing(rest).frobenius(h);
    Poly g = gcd(h - x, rest);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
  return out;
}

void equal_degree(const Poly& f, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  const Field& field = f.field();
  const ResidueRing ring(f);
  const std::uint64_t q = field.q();
  for (;;) {
    std::vector<GFElem> cs;
    for (int i = 0; i < f.degree(); ++i) cs.push_back(field.from_index(rng() % q));
    const Poly a(field, std::move(cs));
    if (a.degree() < 1) continue;
    Poly candidate(field);
    if (q % 2 == 1) {
      // a^{(q^d - 1)/2} = (a^{1 + q + ... + q^{d-1}})^{(q-1)/2}
      Poly t = a, acc = a;
      for (unsigned i = 1; i < d; ++i) {
        t = ring.frobenius(t);
        acc = ring.mul(acc, t);
      }
      candidate = ring.pow(acc, (q - 1) / 2) - ring.one();
    } else {
      // Absolute trace down to GF(2): a + a^2 + ... + a^{2^{md-1}}.
      const unsigned steps = field.m() * d;
      Poly t = a, acc = a;
      for (unsigned i = 1; i < steps; ++i) {
        t = ring.mul(t, t);
        acc += t;
      }
      candidate = acc;
    }
    Poly g = gcd(candidate, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

Poly FactoredPoly::expand() const {
  Poly acc = Poly::constant(unit);
  for (const auto& [g, b] : factors) acc = acc * pow(g, b);
  return acc;
}

unsigned FactoredPoly::degree() const {
  unsigned n = 0;
  for (const auto& [g, b] : factors) n += b * static_cast<unsigned>(g.degree());
  return n;
}

FactoredPoly factorize(const Poly& f, std::uint64_t seed) {
  if (f.degree() < 1) throw DomainError("factorization requires a polynomial of positive degree");
  FactoredPoly result{f.leading(), {}};
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Poly, unsigned>> found;
  for (const auto& [part, mult] : square_free(f.monic())) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<Poly> irreducibles;
      equal_degree(block, d, rng, irreducibles);
      for (auto& g : irreducibles) found.emplace_back(std::move(g), mult);
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  for (auto& [g, mult] : found) {
    if (!result.factors.empty() && result.factors.back().first == g) {
      result.factors.back().second += mult;
    } else {
      result.factors.emplace_back(std::move(g), mult);
    }
  }
  return result;
}

}  // namespace lfsrcyc
