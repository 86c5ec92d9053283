#include "lfsrcyc/text.hpp"

#include <cctype>
#include <map>

#include "lfsrcyc/errors.hpp"

namespace lfsrcyc {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }
  std::uint64_t number() {
    skip_space();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (UINT64_MAX - digit) / 10) fail("number too large");
      v = v * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }
  std::size_t position() const { return pos_; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, position()); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

GFElem residue(std::uint64_t v, const Field& field) {
  if (v >= field.p()) {
    throw DomainError("coefficient " + std::to_string(v) + " out of range for characteristic " +
                      std::to_string(field.p()));
  }
  return field.from_int(static_cast<std::int64_t>(v));
}

GFElem element_at(Cursor& cur, const Field& field) {
  if (cur.accept('[')) {
    std::vector<std::uint32_t> cs;
    do {
      const std::uint64_t v = cur.number();
      if (v > UINT32_MAX) cur.fail("coefficient too large");
      cs.push_back(static_cast<std::uint32_t>(v));
    } while (cur.accept(','));
    cur.expect(']');
    if (cs.size() != field.m()) {
      cur.fail("element tuple needs " + std::to_string(field.m()) + " coefficients, got " +
               std::to_string(cs.size()));
    }
    return field.element(cs);
  }
  return residue(cur.number(), field);
}

bool starts_element(char c) { return c == '[' || std::isdigit(static_cast<unsigned char>(c)); }

}  // namespace

GFElem parse_element(std::string_view text, const Field& field) {
  Cursor cur(text);
  GFElem e = element_at(cur, field);
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return e;
}

std::string render_element(const GFElem& a) {
  const auto cs = a.coeffs();
  if (cs.size() == 1) return std::to_string(cs[0]);
  std::string s = "[";
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(cs[i]);
  }
  return s + "]";
}

Poly parse_poly(std::string_view text, const Field& field) {
  Cursor cur(text);
  if (cur.at_end()) cur.fail("empty polynomial");
  if (cur.accept_word("coeffs:")) {
    std::vector<GFElem> cs;
    do {
      cs.push_back(element_at(cur, field));
    } while (cur.accept(','));
    if (!cur.at_end()) cur.fail("unexpected trailing input");
    return Poly(field, std::move(cs));
  }
  std::map<std::uint64_t, GFElem> terms;
  do {
    GFElem c = field.one();
    bool have_coeff = false;
    if (starts_element(cur.peek())) {
      c = element_at(cur, field);
      have_coeff = true;
    }
    std::uint64_t degree = 0;
    if (have_coeff) cur.accept('*');
    if (cur.accept('x')) {
      degree = 1;
      if (cur.accept('^')) degree = cur.number();
    } else if (!have_coeff) {
      cur.fail("expected a coefficient or 'x'");
    }
    if (degree > (1u << 24)) cur.fail("exponent too large");
    auto [it, inserted] = terms.try_emplace(degree, c);
    if (!inserted) it->second += c;
  } while (cur.accept('+'));
  if (!cur.at_end()) cur.fail("unexpected input");
  const std::uint64_t top = terms.rbegin()->first;
  std::vector<GFElem> cs(top + 1, field.zero());
  for (auto& [d, c] : terms) cs[d] = c;
  return Poly(field, std::move(cs));
}

std::string render_poly(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (int d = f.degree(); d >= 0; --d) {
    const GFElem& c = f.coeffs()[d];
    if (c.is_zero()) continue;
    if (!s.empty()) s += "+";
    if (d == 0 || !c.is_one()) s += render_element(c);
    if (d >= 1) s += "x";
    if (d >= 2) s += "^" + std::to_string(d);
  }
  return s;
}

std::vector<GFElem> parse_state(std::string_view text, const Field& field) {
  Cursor cur(text);
  cur.expect('(');
  std::vector<GFElem> out;
  do {
    out.push_back(element_at(cur, field));
  } while (cur.accept(','));
  cur.expect(')');
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return out;
}

std::string render_state(std::span<const GFElem> entries) {
  std::string s = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ",";
    s += render_element(entries[i]);
  }
  return s + ")";
}

}  // namespace lfsrcyc
