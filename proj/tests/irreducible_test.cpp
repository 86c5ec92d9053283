#include "lfsrcyc/irreducible.hpp"

#include <gtest/gtest.h>

#include "lfsrcyc/errors.hpp"
#include "lfsrcyc/oracle.hpp"
#include "test_support.hpp"

namespace lfsrcyc {
namespace {

using testing::gf2;
using testing::gf3;
using testing::ints;
using testing::P3;
using testing::S3;
using testing::str;

struct TableRow {
  const char* g;
  const char* q;
  const char* s0;
  const char* s1;
};

const TableRow kTable[] = {
    {"x^3+2x^2+2x+2", "x^3+2x^2+1", "(1,1,2)", "(1,0,1)"},
    {"x^3+2x+2", "x^3+x^2+2x+1", "(1,1,1)", "(1,2,0)"},
    {"x^3+x^2+2", "x^3+2x^2+x+1", "(1,1,0)", "(1,2,0)"},
    {"x^3+x^2+x+2", "x^3+2x+1", "(1,1,0)", "(1,0,2)"},
};

TEST(IrreducibleTest, PrimitiveListOrder) {
  const std::vector<Poly> ps = primitive_polynomials(gf3(), 3);
  ASSERT_EQ(ps.size(), 4u);
  // Constant term most significant, then x, then x^2.
  EXPECT_EQ(ps[0], P3("x^3+2x^2+1"));
  EXPECT_EQ(ps[1], P3("x^3+2x^2+x+1"));
  EXPECT_EQ(ps[2], P3("x^3+2x+1"));
  EXPECT_EQ(ps[3], P3("x^3+x^2+2x+1"));
}

TEST(IrreducibleTest, AssociationCounts) {
  EXPECT_EQ(count_associated_primitives(P3("x^3+2x+2")).count, 1u);
  EXPECT_FALSE(count_associated_primitives(P3("x^3+2x+2")).self);
  EXPECT_EQ(count_associated_primitives(P3("x^2+1")).count, 2u);
  const AssociationCount self = count_associated_primitives(P3("x^2+x+2"));
  EXPECT_EQ(self.count, 1u);
  EXPECT_TRUE(self.self);
  EXPECT_THROW(count_associated_primitives(P3("x^4+2x^2+1")), DomainError);
}

TEST(IrreducibleTest, AssociationCountMatchesEnumeration) {
  for (const auto& [field, top] : {std::pair{&gf2(), 6u}, std::pair{&gf3(), 4u}}) {
    for (unsigned n = 1; n <= top; ++n) {
      const std::vector<Poly> prims = primitive_polynomials(*field, n);
      for (const Poly& g : testing::register_polys(*field, n)) {
        if (!is_irreducible(g)) continue;
        std::uint64_t count = 0;
        for (const Poly& p : prims) count += is_associated(g, p) ? 1 : 0;
        EXPECT_EQ(count, count_associated_primitives(g).count) << str(g);
      }
    }
  }
}

TEST(IrreducibleTest, AssociatesMatchTable) {
  const std::vector<Poly> prims = primitive_polynomials(gf3(), 3);
  for (const TableRow& row : kTable) {
    EXPECT_EQ(associate_primitive(P3(row.g), prims), P3(row.q)) << row.g;
    EXPECT_EQ(associate_primitive(P3(row.g)), P3(row.q)) << row.g;
  }
  EXPECT_EQ(associate_primitive(P3("x^2+1")), P3("x^2+x+2"));
  const std::vector<Poly> wrong{P3("x^3+2x+1")};
  EXPECT_THROW(associate_primitive(P3("x^3+2x+2"), wrong), NotFoundError);
}

TEST(IrreducibleTest, InfoFields) {
  const IrreducibleFactorInfo info = irreducible_info(P3("x^3+2x+2"));
  EXPECT_EQ(info.n, 3u);
  EXPECT_EQ(info.e, 13u);
  EXPECT_EQ(info.t, 2u);
  EXPECT_EQ(info.beta_power, 2u);
  EXPECT_EQ(info.e * info.t, 26u);
  const ResidueRing ring(info.associated_primitive);
  EXPECT_TRUE(ring.eval(info.g, ring.pow(ring.x(), info.t)).is_zero());
  EXPECT_THROW(irreducible_info(P3("x^3+2x+2"), P3("x^3+2x+1")), DomainError);
  EXPECT_THROW(irreducible_info(P3("x^2+2x+1")), DomainError);
}

TEST(IrreducibleTest, DecimationStatesMatchTable) {
  for (const TableRow& row : kTable) {
    const auto states = states_by_decimation(irreducible_info(P3(row.g)));
    ASSERT_EQ(states.size(), 2u);
    EXPECT_EQ(states[0], S3(row.s0)) << row.g;
    EXPECT_EQ(states[1], S3(row.s1)) << row.g;
  }
  const IrreducibleFactorInfo prim = irreducible_info(P3("x^3+2x+1"));
  ASSERT_EQ(prim.t, 1u);
  EXPECT_EQ(states_by_decimation(prim), std::vector<State>{S3("(1,1,1)")});
}

TEST(IrreducibleTest, Cyclotomy) {
  const IrreducibleFactorInfo info = irreducible_info(P3("x^3+2x+2"));
  EXPECT_EQ(ints(beta_coordinates(info, 1)), (std::vector<std::uint32_t>{2, 1, 1}));
  EXPECT_EQ(ints(beta_coordinates(info, 0)), (std::vector<std::uint32_t>{1, 0, 0}));
  const auto states = states_by_cyclotomy(info);
  ASSERT_EQ(states.size(), 2u);
  EXPECT_EQ(states[0], S3("(1,0,0)"));
  EXPECT_EQ(states[1], S3("(2,1,1)"));
}

TEST(IrreducibleTest, CycleStructure) {
  auto periods = [](const std::vector<CycleRep>& cs) {
    std::vector<std::uint64_t> out;
    for (const auto& c : cs) out.push_back(c.period);
    return out;
  };
  EXPECT_EQ(periods(cycle_structure_irreducible(P3("x^3+2x+2"))), (std::vector<std::uint64_t>{1, 13, 13}));
  EXPECT_EQ(periods(cycle_structure_irreducible(P3("x^3+2x+1"))), (std::vector<std::uint64_t>{1, 26}));
  const auto quad = cycle_structure_irreducible(P3("x^2+1"));
  EXPECT_EQ(periods(quad), (std::vector<std::uint64_t>{1, 4, 4}));
  EXPECT_EQ(quad[1].state, S3("(1,0)"));
  EXPECT_EQ(quad[2].state, S3("(1,1)"));
}

// Both constructions agree with brute force for every irreducible of small degree.
TEST(IrreduciblePropertyTest, BothMethodsPartitionTheStateSpace) {
  const Field f4 = Field::extension(2, 2);
  for (const auto& [field, top] : {std::pair{&gf2(), 5u}, std::pair{&gf3(), 3u}, std::pair{&f4, 2u}}) {
    for (unsigned n = 1; n <= top; ++n) {
      for (const Poly& g : testing::register_polys(*field, n)) {
        if (!is_irreducible(g)) continue;
        const IrreducibleFactorInfo info = irreducible_info(g);
        const auto dec = states_by_decimation(info);
        const auto cyc = states_by_cyclotomy(info);
        ASSERT_EQ(dec.size(), info.t);
        const auto dec_keys = testing::cycle_keys(g, dec);
        EXPECT_EQ(dec_keys.size(), info.t) << str(g);
        EXPECT_EQ(dec_keys, testing::cycle_keys(g, cyc)) << str(g);
        for (const State& s : dec) {
          const Sequence seq = generate_sequence(g, s);
          EXPECT_EQ(seq.period(), info.e);
          EXPECT_EQ(std::get<Poly>(minimal_polynomial(seq)), g);
        }
        const BruteCyclePartition brute = brute_partition(g);
        std::set<State> nonzero;
        for (const auto& c : brute.cycles) {
          if (c.period > 1 || !std::all_of(c.representative.begin(), c.representative.end(),
                                           [](const GFElem& x) { return x.is_zero(); })) {
            nonzero.insert(c.representative);
          }
        }
        EXPECT_EQ(nonzero, dec_keys) << str(g);
        EXPECT_EQ(1 + info.t * info.e, checked_pow(field->q(), n));
      }
    }
  }
}

}  // namespace
}  // namespace lfsrcyc
