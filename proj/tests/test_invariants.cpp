#include <gtest/gtest.h>

#include "monospread/depth.hpp"
#include "monospread/error.hpp"
#include "monospread/homology.hpp"
#include "monospread/lattice.hpp"
#include "monospread/laws.hpp"
#include "monospread/sdepth.hpp"
#include "monospread/spread.hpp"
#include "support/oracles.hpp"
#include "support/random_ideals.hpp"

using namespace mspread;
using testing_support::Rng;
using testing_support::uniform;

TEST(Homology, SmallComplexes) {
  EXPECT_EQ(reduced_betti_gf2({}).at(-1), 1u);
  // two isolated points
  const ReducedBetti two = reduced_betti_gf2({{0}, {1}});
  EXPECT_EQ(two.at(0), 1u);
  // a filled edge is a cone
  EXPECT_TRUE(reduced_betti_gf2({{0}, {1}, {0, 1}}).acyclic());
  // hollow triangle
  EXPECT_EQ(reduced_betti_gf2({{0}, {1}, {2}, {0, 1}, {1, 2}, {0, 2}}).at(1), 1u);
}

TEST(Homology, OrderComplexIntervals) {
  const LcmLattice B2(MonomialIdeal(2, {{1, 0}, {0, 1}}));
  EXPECT_EQ(order_complex_betti(B2, B2.top()).at(0), 1u);
  EXPECT_EQ(order_complex_betti(B2, *B2.find(Monomial{1, 0})).at(-1), 1u);

  const LcmLattice B3(MonomialIdeal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  const ReducedBetti hexagon = order_complex_betti(B3, B3.top());
  EXPECT_EQ(hexagon.at(1), 1u);
  EXPECT_EQ(hexagon.at(0), 0u);

  // below the top of (x1^2, x1x2, x2^2) the order complex is a path
  const LcmLattice path(MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 2}}));
  EXPECT_TRUE(order_complex_betti(path, path.top()).acyclic());
  const LcmLattice fork(MonomialIdeal(2, {{2, 0}, {1, 1}}));
  EXPECT_EQ(order_complex_betti(fork, fork.top()).at(0), 1u);

  try {
    (void)order_complex_betti(B2, B2.bottom());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadParameter);
  }
}

TEST(Depth, Examples) {
  EXPECT_EQ(depth_quotient(MonomialIdeal(2, {{1, 1}})).value, 1u);
  EXPECT_EQ(depth_quotient(MonomialIdeal(2, {{2, 0}, {0, 2}})).value, 0u);
  const MonomialIdeal s = spread_ideal(MonomialIdeal(2, {{2, 1}, {0, 2}}), 2, SpreadAmbient::Padded);
  EXPECT_EQ(depth_quotient(s).value, 4u);
  EXPECT_EQ(depth_quotient(MonomialIdeal(2, {{2, 1}, {0, 2}})).value, 0u);
}

TEST(Depth, BettiTableConventions) {
  const BettiTable t = multigraded_betti(MonomialIdeal(2, {{1, 0}, {0, 1}}));
  EXPECT_EQ(t.value(0, Monomial(2)), 1u);
  EXPECT_EQ(t.value(1, Monomial{1, 0}), 1u);
  EXPECT_EQ(t.value(2, Monomial{1, 1}), 1u);
  EXPECT_EQ(t.total(1), 2u);
  EXPECT_EQ(t.projective_dimension(), 2u);
}

TEST(Depth, RejectsTooManyGenerators) {
  std::vector<Monomial> gens;
  for (std::size_t k = 0; k <= kMaxDepthGenerators; ++k)
    gens.push_back(Monomial{static_cast<Exponent>(k + 1), static_cast<Exponent>(kMaxDepthGenerators + 1 - k)});
  try {
    (void)depth_quotient(MonomialIdeal(2, gens));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
}

TEST(Depth, LatticeAndTaylorBettiAgree) {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = uniform(rng, 1, 4);
    const auto I = testing_support::random_ideal(rng, n, uniform(rng, 1, 4), 3);
    const auto expected = oracle::taylor_betti(testing_support::to_rows(I.generators()));
    const BettiTable got = multigraded_betti(I);
    std::map<std::pair<std::size_t, oracle::Row>, std::size_t> as_map;
    for (const BettiEntry& e : got.entries()) as_map[{e.i, testing_support::to_row(e.multidegree)}] = e.value;
    ASSERT_EQ(as_map, expected) << to_string(I);
  }
}

TEST(Depth, IsomorphicLatticesShiftDepth) {
  const MonomialIdeal I(2, {{2, 2}, {0, 3}});
  const MonomialIdeal S = spread_ideal(I, 2, SpreadAmbient::Padded);
  ASSERT_TRUE(is_isomorphic(LcmLattice(I), LcmLattice(S)).has_value());
  EXPECT_EQ(depth_quotient(I).value + S.ambient() - I.ambient(), depth_quotient(S).value);
}

TEST(Sdepth, Examples) {
  EXPECT_EQ(sdepth_quotient(MonomialIdeal(2, {{1, 1}})).value, 1u);
  EXPECT_EQ(sdepth_ideal(MonomialIdeal(2, {{1, 0}, {0, 1}})).value, 1u);
  EXPECT_EQ(sdepth_quotient(MonomialIdeal(1, {{3}})).value, 0u);
  EXPECT_EQ(sdepth_ideal(MonomialIdeal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).value, 2u);
  EXPECT_EQ(sdepth_ideal(MonomialIdeal(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})).value, 2u);
}

TEST(Sdepth, PartitionCoversTheSideOnce) {
  const MonomialIdeal I(3, {{2, 1, 0}, {0, 1, 2}, {1, 0, 1}});
  for (bool side : {false, true}) {
    const SdepthReport r = side ? sdepth_ideal(I) : sdepth_quotient(I);
    const CharacteristicPoset P(I);
    std::vector<int> hits(P.size(), 0);
    for (const PosetInterval& iv : r.partition) {
      for (std::size_t idx = 0; idx < P.size(); ++idx) {
        const Monomial c = P.point(idx);
        if (divides(iv.lower, c) && divides(c, iv.upper)) ++hits[idx];
      }
      ASSERT_GE(P.saturated(iv.upper.exponents()), r.value);
    }
    for (std::size_t idx = 0; idx < P.size(); ++idx) ASSERT_EQ(hits[idx], P.in_ideal(idx) == side ? 1 : 0);
  }
}

TEST(Sdepth, RejectsLargePosets) {
  try {
    (void)sdepth_quotient(MonomialIdeal(2, {{100, 100}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
}

TEST(Sdepth, AgreesWithNaivePartitionSearch) {
  Rng rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = uniform(rng, 1, 3);
    const auto I = testing_support::random_ideal(rng, n, uniform(rng, 1, 3), 2);
    const auto rows = testing_support::to_rows(I.generators());
    ASSERT_EQ(sdepth_quotient(I).value, oracle::sdepth_by_search(rows, false)) << to_string(I);
    ASSERT_EQ(sdepth_ideal(I).value, oracle::sdepth_by_search(rows, true)) << to_string(I);
  }
}

TEST(Sdepth, NeverExceedsAmbient) {
  Rng rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = uniform(rng, 1, 4);
    const auto I = testing_support::random_ideal(rng, n, uniform(rng, 1, 3), 2);
    ASSERT_LE(sdepth_quotient(I).value, n);
    ASSERT_LE(sdepth_ideal(I).value, n);
  }
}

TEST(Laws, NonSmoothUpperBound) {
  const LawsReport r = verify_spreading_laws(MonomialIdeal(2, {{2, 1}, {0, 2}}), 2, 3);
  EXPECT_TRUE(r.all_passed());
  EXPECT_FALSE(r.smooth);
  ASSERT_FALSE(r.spreads.empty());
  EXPECT_EQ(r.spreads.front().t, 2u);
  EXPECT_EQ(r.spreads.front().depth, 4u);
  EXPECT_EQ(r.base.depth, 0u);
}

TEST(Laws, SmoothShift) {
  const MonomialIdeal I(3, {{1, 1, 1}, {0, 2, 1}});
  const LawsReport r = verify_spreading_laws(I, 3, 4);
  EXPECT_TRUE(r.all_passed());
  EXPECT_TRUE(r.smooth);
  EXPECT_TRUE(r.lattice_isomorphic);
  for (const InvariantRow& row : r.spreads) {
    EXPECT_EQ(row.depth, r.base.depth + row.t * r.d - r.n);
    EXPECT_EQ(row.sdepth_quotient, r.base.sdepth_quotient + row.t * r.d - r.n);
    EXPECT_EQ(row.sdepth_ideal, r.base.sdepth_ideal + row.t * r.d - r.n);
  }
}

TEST(Laws, IsomorphicButNotSmooth) {
  const LawsReport r = verify_spreading_laws(MonomialIdeal(2, {{2, 2}, {0, 3}}), 2, 2);
  EXPECT_TRUE(r.all_passed());
  EXPECT_TRUE(r.lattice_isomorphic);
  EXPECT_FALSE(r.smooth);
  const auto& row = r.spreads.front();
  EXPECT_EQ(row.depth, r.base.depth + r.n * (r.d - 1));
}

TEST(Laws, StrictBoundWhenLatticeGrows) {
  const LawsReport r = verify_spreading_laws(MonomialIdeal(2, {{4, 0}, {2, 1}, {0, 2}}), 2, 3);
  EXPECT_TRUE(r.all_passed());
  EXPECT_FALSE(r.lattice_isomorphic);
  EXPECT_EQ(r.spreads.front().depth, 5u);
  EXPECT_EQ(r.spreads.front().sdepth_quotient, 5u);
  EXPECT_EQ(r.spreads.front().sdepth_ideal, 7u);
  EXPECT_EQ(r.base.depth + r.n * (r.d - 1), 6u);
}

TEST(Laws, RejectsRangeBelowAmbient) {
  try {
    (void)verify_spreading_laws(MonomialIdeal(2, {{1, 1}}), 1, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadParameter);
  }
}
