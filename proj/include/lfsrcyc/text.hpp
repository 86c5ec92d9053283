#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lfsrcyc/gf.hpp"
#include "lfsrcyc/poly.hpp"

namespace lfsrcyc {

// Element syntax: a decimal residue for GF(p), a bracketed coefficient tuple
// "[c0,c1,...]" (constant term first) for GF(p^m). A bare decimal c < p is
// also accepted for GF(p^m) and denotes the prime-subfield element c.
GFElem parse_element(std::string_view text, const Field& field);
std::string render_element(const GFElem& a);

// Terms "c", "x", "c x", "c*x", "x^k", "c x^k" joined by '+', spaces allowed;
// or "coeffs:" followed by a comma-separated constant-first coefficient list.
Poly parse_poly(std::string_view text, const Field& field);
std::string render_poly(const Poly& f);

// "(e0,e1,...)"
std::vector<GFElem> parse_state(std::string_view text, const Field& field);
std::string render_state(std::span<const GFElem> entries);

}  // namespace lfsrcyc
