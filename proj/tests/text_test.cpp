#include "lfsrcyc/text.hpp"

#include <gtest/gtest.h>

#include "lfsrcyc/errors.hpp"
#include "test_support.hpp"

namespace lfsrcyc {
namespace {

using testing::gf3;
using testing::ints;

TEST(TextTest, ParsesPolynomials) {
  const Poly f = parse_poly("x^3+2x+2", gf3());
  EXPECT_EQ(ints(f.coeffs()), (std::vector<std::uint32_t>{2, 2, 0, 1}));
  EXPECT_EQ(parse_poly("1", gf3()), Poly::constant(gf3().one()));
  EXPECT_EQ(parse_poly("2 * x^2 + x", gf3()), Poly::from_ints(gf3(), {0, 1, 2}));
  EXPECT_EQ(parse_poly("2x^2 + 2x^2", gf3()), Poly::from_ints(gf3(), {0, 0, 1}));
  EXPECT_EQ(parse_poly("coeffs: 2,2,0,1", gf3()), f);
  const Poly big = parse_poly("x^16+2x^15+x^14+2x^13+x^12+x^11+x^9+x^8+x^7+x^5+x^4+2x^3+x^2+2x+1", gf3());
  EXPECT_EQ(big, pow(parse_poly("x^2+1", gf3()) * parse_poly("x^3+2x+2", gf3()) * parse_poly("x^3+x^2+2", gf3()), 2));
}

TEST(TextTest, RoundTrips) {
  for (const char* text : {"x^3+2x+2", "x^16+2x^15+x^14+x+1", "2x", "1", "x", "0"}) {
    EXPECT_EQ(render_poly(parse_poly(text, gf3())), text);
  }
  const Field f9 = Field::extension(3, 2);
  const Poly g = parse_poly("x^2+[1,2]x+[0,1]", f9);
  EXPECT_EQ(render_poly(g), "x^2+[1,2]x+[0,1]");
  EXPECT_EQ(parse_poly(render_poly(g), f9), g);
}

TEST(TextTest, Elements) {
  const Field f9 = Field::extension(3, 2);
  EXPECT_EQ(render_element(parse_element("[1,2]", f9)), "[1,2]");
  EXPECT_EQ(parse_element("2", f9), f9.from_int(2));
  EXPECT_EQ(render_element(gf3().from_int(2)), "2");
  EXPECT_THROW(parse_element("[1,2,0]", f9), ParseError);
  EXPECT_THROW(parse_element("[1,3]", f9), DomainError);
}

TEST(TextTest, States) {
  const State s = parse_state("(2, 2,0,1)", gf3());
  EXPECT_EQ(ints(s), (std::vector<std::uint32_t>{2, 2, 0, 1}));
  EXPECT_EQ(render_state(s), "(2,2,0,1)");
  EXPECT_THROW(parse_state("2,2", gf3()), ParseError);
  EXPECT_THROW(parse_state("(2,2", gf3()), ParseError);
}

TEST(TextTest, Errors) {
  EXPECT_THROW(parse_poly("", gf3()), ParseError);
  EXPECT_THROW(parse_poly("x^", gf3()), ParseError);
  EXPECT_THROW(parse_poly("x+", gf3()), ParseError);
  EXPECT_THROW(parse_poly("x^2 x", gf3()), ParseError);
  EXPECT_THROW(parse_poly("3x", gf3()), DomainError);
  try {
    parse_poly("x^2+y", gf3());
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

}  // namespace
}  // namespace lfsrcyc
