#include "lfsrcyc/structure.hpp"

#include <map>
#include <set>

#include <gtest/gtest.h>

#include "lfsrcyc/errors.hpp"
#include "lfsrcyc/oracle.hpp"
#include "reference_data.hpp"
#include "test_support.hpp"

namespace lfsrcyc {
namespace {

using testing::gf2;
using testing::gf3;
using testing::P3;
using testing::S3;
using testing::str;

Poly example_f() { return P3("x^16+2x^15+x^14+2x^13+x^12+x^11+x^9+x^8+x^7+x^5+x^4+2x^3+x^2+2x+1"); }

const State kV1 = S3("(2,2,0,1,1,2,2,1,2,2,2,2,0,2,1,0)");

// Least state of each listed cycle, taking the first b n entries as a state.
std::set<State> listed_cycles(const Poly& gb, std::span<const std::string_view> periods) {
  const std::size_t stages = static_cast<std::size_t>(gb.degree());
  std::vector<State> states;
  for (auto text : periods) {
    State u = parse_state(text, gf3());
    const Lfsr reg(gb);
    reg.extend(u, stages);
    u.resize(stages, gf3().zero());
    states.push_back(u);
  }
  return testing::cycle_keys(gb, states);
}

std::multiset<std::pair<State, std::uint64_t>> as_multiset(const CycleStructure& cs) {
  std::multiset<std::pair<State, std::uint64_t>> out;
  for (const auto& c : cs.cycles) out.emplace(c.representative, c.period);
  return out;
}

std::multiset<std::pair<State, std::uint64_t>> as_multiset(const BruteCyclePartition& bp) {
  std::multiset<std::pair<State, std::uint64_t>> out;
  for (const auto& c : bp.cycles) out.emplace(c.representative, c.period);
  return out;
}

TEST(StructureTest, BlockMatrixMatchesReference) {
  const FactoredPoly fp = factorize(example_f());
  ASSERT_EQ(fp.factors.size(), 3u);
  EXPECT_EQ(fp.factors[0].first, P3("x^2+1"));
  EXPECT_EQ(fp.factors[1].first, P3("x^3+2x+2"));
  EXPECT_EQ(fp.factors[2].first, P3("x^3+x^2+2"));
  const BlockMatrixP P = build_P(fp);
  ASSERT_EQ(P.P.rows(), 16u);
  for (std::size_t r = 0; r < 16; ++r) {
    for (std::size_t c = 0; c < 16; ++c) {
      EXPECT_EQ(P.P.at(r, c).coeffs()[0], static_cast<std::uint32_t>(testing::kExampleP[r][c] - '0'))
          << "row " << r << " col " << c;
    }
  }
  EXPECT_EQ(P.P * P.P_inv, Matrix::identity(gf3(), 16));
  EXPECT_EQ(P.offsets, (std::vector<std::size_t>{0, 4, 10}));
  EXPECT_EQ(P.sizes, (std::vector<std::size_t>{4, 6, 6}));
}

TEST(StructureTest, ComposeExample) {
  const Poly f = example_f();
  const BlockMatrixP P = build_P(factorize(f));
  const std::vector<State> parts{S3("(1,2,0,1)"), S3("(0,1,2,2,0,1)"), S3("(1,2,1,1,2,2)")};
  const State v = compose_state(P, parts);
  EXPECT_EQ(v, kV1);
  EXPECT_EQ(decompose_state(P, v), parts);
  const Sequence s = generate_sequence(f, v);
  EXPECT_EQ(s.period(), 156u);
  const Sequence u1 = generate_sequence(P.block_polys[0], parts[0]);
  const Sequence u2 = generate_sequence(P.block_polys[1], parts[1]);
  const Sequence u3 = generate_sequence(P.block_polys[2], parts[2]);
  for (std::uint64_t i = 0; i < 156; ++i) EXPECT_EQ(s[i], u1[i] + u2[i] + u3[i]) << i;
}

TEST(StructureTest, DecomposeExamples) {
  const BlockMatrixP P = build_P(factorize(example_f()));
  EXPECT_EQ(decompose_state(P, S3("(0,1,0,1,0,2,0,1,0,1,1,0,0,1,1,2)")),
            (std::vector<State>{S3("(0,1,0,2)"), S3("(1,1,0,2,0,0)"), S3("(2,2,0,0,0,1)")}));
  EXPECT_EQ(decompose_state(P, S3("(1,0,2,0,2,2,0,1,1,2,2,1,2,2,2,2)")),
            (std::vector<State>{S3("(0,2,1,1)"), S3("(1,0,0,0,0,1)"), S3("(0,1,1,2,1,2)")}));
  EXPECT_THROW(decompose_state(P, S3("(1,0)")), DomainError);
}

TEST(StructureTest, SameCycleExamples) {
  const Poly f = example_f();
  const BlockMatrixP P = build_P(factorize(f));
  const SameCycleResult no = same_cycle(P, kV1, S3("(0,1,0,1,0,2,0,1,0,1,1,0,0,1,1,2)"));
  EXPECT_FALSE(no.same);
  EXPECT_TRUE(no.component_shifts.empty());

  const State v2 = S3("(1,0,2,0,2,2,0,1,1,2,2,1,2,2,2,2)");
  const SameCycleResult yes = same_cycle(P, kV1, v2);
  ASSERT_TRUE(yes.same);
  EXPECT_EQ(yes.component_shifts, (std::vector<std::uint64_t>{8, 35, 35}));
  EXPECT_EQ(yes.component_periods, (std::vector<std::uint64_t>{12, 39, 39}));
  EXPECT_EQ(yes.shift, 152u);
  EXPECT_EQ(step_state(f, kV1, yes.shift), v2);
  EXPECT_EQ(brute_shift(f, kV1, v2), std::optional<std::uint64_t>(152));

  const SameCycleResult self = same_cycle(P, kV1, kV1);
  EXPECT_TRUE(self.same);
  EXPECT_EQ(self.shift, 0u);
}

TEST(StructureTest, FactorCyclesMatchReference) {
  const std::vector<std::pair<Poly, std::span<const std::string_view>>> cases{
      {P3("x^2+1"), testing::kCyclesG1}, {P3("x^3+2x+2"), testing::kCyclesG2}, {P3("x^3+x^2+2"), testing::kCyclesG3}};
  for (const auto& [g, listed] : cases) {
    const FactorCycleSet set = factor_cycles(g, 2);
    const Poly g2 = pow(g, 2);
    std::vector<State> mine;
    for (const auto& c : set.cycles) {
      if (c.r > 0) mine.push_back(c.state);
    }
    EXPECT_EQ(mine.size(), listed.size());
    EXPECT_EQ(set.sigma, listed.size());
    EXPECT_EQ(testing::cycle_keys(g2, mine), listed_cycles(g2, listed)) << str(g);
  }
}

TEST(StructureTest, GeneralizedCrt) {
  const std::vector<std::int64_t> r{8, 35, 35};
  const std::vector<std::uint64_t> m{12, 39, 39};
  EXPECT_EQ(generalized_crt(r, m), std::optional<std::uint64_t>(152));
  std::optional<std::uint64_t> scan;
  for (std::uint64_t l = 0; l < 156 && !scan; ++l) {
    if (l % 12 == 8 && l % 39 == 35) scan = l;
  }
  EXPECT_EQ(scan, std::optional<std::uint64_t>(152));

  EXPECT_EQ(generalized_crt(std::vector<std::int64_t>{0}, std::vector<std::uint64_t>{5}), std::optional<std::uint64_t>(0));
  EXPECT_EQ(generalized_crt(std::vector<std::int64_t>{1, 2}, std::vector<std::uint64_t>{4, 6}), std::nullopt);
  EXPECT_EQ(generalized_crt(std::vector<std::int64_t>{-1}, std::vector<std::uint64_t>{7}), std::optional<std::uint64_t>(6));
  EXPECT_THROW(generalized_crt(std::vector<std::int64_t>{}, std::vector<std::uint64_t>{}), DomainError);
  EXPECT_THROW(generalized_crt(std::vector<std::int64_t>{1}, std::vector<std::uint64_t>{0}), DomainError);
  EXPECT_THROW(generalized_crt(std::vector<std::int64_t>{1}, std::vector<std::uint64_t>{2, 3}), DomainError);
}

TEST(StructureTest, GeneralizedCrtAgainstScan) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t k = 1 + rng() % 3;
    std::vector<std::int64_t> r;
    std::vector<std::uint64_t> m;
    std::uint64_t bound = 1;
    for (std::size_t i = 0; i < k; ++i) {
      m.push_back(1 + rng() % 30);
      r.push_back(static_cast<std::int64_t>(rng() % 60) - 20);
      bound *= m.back();
    }
    std::optional<std::uint64_t> scan;
    for (std::uint64_t l = 0; l < bound && !scan; ++l) {
      bool ok = true;
      for (std::size_t i = 0; i < k; ++i) {
        const auto mi = static_cast<std::int64_t>(m[i]);
        ok = ok && ((static_cast<std::int64_t>(l) - r[i]) % mi + mi) % mi == 0;
      }
      if (ok) scan = l;
    }
    ASSERT_EQ(generalized_crt(r, m), scan);
  }
}

TEST(StructureTest, TwoFactorStructure) {
  const Poly f = P3("x^2+1") * P3("x^3+2x+2");
  const CycleStructure cs = enumerate_cycles(f);
  std::map<std::uint64_t, int> periods;
  for (const auto& c : cs.cycles) ++periods[c.period];
  EXPECT_EQ(periods, (std::map<std::uint64_t, int>{{1, 1}, {4, 2}, {13, 2}, {52, 4}}));
  EXPECT_TRUE(cs.canonical);
  EXPECT_EQ(as_multiset(cs), as_multiset(brute_partition(f)));
}

TEST(StructureTest, Errors) {
  EXPECT_THROW(enumerate_cycles(Poly::from_ints(gf3(), {1, 0, 2})), DomainError);
  EXPECT_THROW(enumerate_cycles(Poly::from_ints(gf3(), {0, 1, 1})), DomainError);
  EXPECT_THROW(enumerate_cycles(Poly::from_ints(gf3(), {2})), DomainError);
}

TEST(StructureTest, OrderingAndCanonicalForm) {
  const Poly f = P3("x^4+2x^2+1") * P3("x^3+2x+2");
  const CycleStructure cs = enumerate_cycles(f);
  for (std::size_t i = 1; i < cs.cycles.size(); ++i) {
    const auto& a = cs.cycles[i - 1];
    const auto& b = cs.cycles[i];
    EXPECT_TRUE(std::tie(a.factor_exponents, a.period, a.representative) <
                std::tie(b.factor_exponents, b.period, b.representative));
  }
  std::uint64_t total = 0;
  for (const auto& c : cs.cycles) {
    total += c.period;
    EXPECT_EQ(c.representative, testing::least_on_cycle(f, c.representative));
    EXPECT_EQ(compose_state(cs.P, c.component_states), c.representative);
  }
  EXPECT_EQ(total, 2187u);
}

// Every monic f with f(0) != 0 of degree <= 4 over GF(2) and GF(3).
TEST(StructurePropertyTest, MatchesBruteForce) {
  for (const Field* field : {&gf2(), &gf3()}) {
    for (unsigned n = 1; n <= 4; ++n) {
      for (const Poly& f : testing::register_polys(*field, n)) {
        const CycleStructure cs = enumerate_cycles(f);
        ASSERT_TRUE(cs.canonical);
        EXPECT_EQ(as_multiset(cs), as_multiset(brute_partition(f))) << str(f);
      }
    }
  }
}

TEST(StructurePropertyTest, ComposeDecomposeInverse) {
  std::mt19937_64 rng(99);
  const std::vector<Poly> fs{example_f(), P3("x^2+1") * P3("x^3+2x+2"),
                             Poly::from_ints(gf2(), {1, 1}) * pow(Poly::from_ints(gf2(), {1, 1, 1}), 2)};
  for (int trial = 0; trial < 1000; ++trial) {
    const Poly& f = fs[trial % fs.size()];
    const BlockMatrixP P = build_P(factorize(f));
    const State v = testing::random_state(f.field(), static_cast<std::size_t>(f.degree()), rng);
    const std::vector<State> parts = decompose_state(P, v);
    ASSERT_EQ(compose_state(P, parts), v);
    // T commutes with the block map.
    std::vector<State> stepped;
    for (std::size_t i = 0; i < parts.size(); ++i) stepped.push_back(step_state(P.block_polys[i], parts[i], 1));
    ASSERT_EQ(compose_state(P, stepped), step_state(f, v, 1));
  }
}

TEST(StructurePropertyTest, SameCycleAgreesWithBruteForce) {
  std::mt19937_64 rng(5);
  const std::vector<Poly> fs{P3("x^2+1") * P3("x^3+2x+2"), pow(P3("x+1"), 2) * P3("x^2+1"),
                             Poly::from_ints(gf2(), {1, 1}) * pow(Poly::from_ints(gf2(), {1, 1, 1}), 2),
                             example_f()};
  for (const Poly& f : fs) {
    const BlockMatrixP P = build_P(factorize(f));
    const std::size_t n = static_cast<std::size_t>(f.degree());
    for (int trial = 0; trial < 1000; ++trial) {
      const State v1 = testing::random_state(f.field(), n, rng);
      // Half of the pairs share a cycle by construction.
      const State v2 = trial % 2 ? step_state(f, v1, rng() % 1000) : testing::random_state(f.field(), n, rng);
      const SameCycleResult res = same_cycle(P, v1, v2);
      ASSERT_EQ(res.same, brute_same_cycle(f, v1, v2)) << str(f) << " " << str(v1) << " " << str(v2);
      if (res.same) {
        ASSERT_EQ(step_state(f, v1, res.shift), v2);
        ASSERT_EQ(std::optional<std::uint64_t>(res.shift), brute_shift(f, v1, v2));
      }
    }
  }
}

}  // namespace
}  // namespace lfsrcyc
