#include "mobkit/inclexcl.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "support/inclexcl_oracles.hpp"

namespace {

using mobkit::BigInt;
using mobkit::Rational;
namespace inclexcl = mobkit::inclexcl;
namespace mt = mobkit::testing;

TEST(UnionSize, SmallExamples) {
  const auto disjoint = inclexcl::SetFamily::from_labels({"a", "b", "c"}, {{"a"}, {"b"}});
  EXPECT_EQ(inclexcl::union_size_ie(disjoint), 2u);
  const auto same = inclexcl::SetFamily::from_labels({"a", "b"}, {{"a"}, {"a"}});
  EXPECT_EQ(inclexcl::union_size_ie(same), 1u);
  const auto none = inclexcl::SetFamily::from_labels({"a"}, {});
  EXPECT_EQ(inclexcl::union_size_ie(none), 0u);
}

TEST(UnionSize, RandomFamiliesMatchDirectUnion) {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 500; ++trial) {
    const auto fam = mt::random_family(rng, 8, 16);
    ASSERT_EQ(inclexcl::union_size_ie(fam), inclexcl::union_size_direct(fam)) << trial;
  }
}

TEST(UnionSize, TwentySets) {
  std::mt19937_64 rng(20);
  const inclexcl::SetFamily fam(mt::numbered_labels("x", 40), mt::random_sets(rng, 20, 40));
  EXPECT_EQ(inclexcl::union_size_ie(fam), inclexcl::union_size_direct(fam));
}

TEST(UnionSize, RejectsTooManySetsAndForeignLabels) {
  std::mt19937_64 rng(1);
  EXPECT_THROW(inclexcl::SetFamily(mt::numbered_labels("x", 4), mt::random_sets(rng, 21, 4)),
               mobkit::CapError);
  EXPECT_THROW(inclexcl::SetFamily::from_labels({"a"}, {{"b"}}), mobkit::DomainError);
  EXPECT_THROW(inclexcl::SetFamily::from_labels({"a", "a"}, {}), mobkit::DomainError);
}

TEST(IndicatorIdentity, EmptySetsAndRandomFamilies) {
  const auto empties = inclexcl::SetFamily::from_labels({"a", "b"}, {{}, {}, {}});
  EXPECT_TRUE(inclexcl::verify_indicator_identity(empties));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    ASSERT_TRUE(inclexcl::verify_indicator_identity(mt::random_family(rng, 10, 12))) << trial;
  }
}

TEST(IndicatorIdentity, PointInEveryOneOfMSets) {
  for (std::size_t m = 1; m <= 12; ++m) {
    std::vector<std::vector<std::string>> sets(m, std::vector<std::string>{"p"});
    sets.push_back({"q"});
    EXPECT_TRUE(inclexcl::verify_indicator_identity(inclexcl::SetFamily::from_labels({"p", "q", "r"}, sets)));
  }
}

TEST(ProbUnion, SmallExamples) {
  const auto coin = inclexcl::FiniteProbSpace::from_labels({"H", "T"}, {Rational(1, 2), Rational(1, 2)}, {{"H"}});
  EXPECT_EQ(inclexcl::prob_union_ie(coin), Rational(1, 2));
  const auto full = inclexcl::FiniteProbSpace::from_labels({"H", "T"}, {Rational(1, 2), Rational(1, 2)},
                                                           {{"H", "T"}, {"H", "T"}});
  EXPECT_EQ(inclexcl::prob_union_ie(full), Rational(1));
}

TEST(ProbUnion, RandomSpacesMatchDirectMeasure) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const auto space = mt::random_space(rng, 8, 10);
    ASSERT_EQ(inclexcl::prob_union_ie(space), inclexcl::prob_union_direct(space)) << trial;
  }
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> uniform(6, Rational(1, 6));
    const inclexcl::FiniteProbSpace space(mt::numbered_labels("w", 6), uniform, mt::random_sets(rng, 3, 6));
    ASSERT_EQ(inclexcl::prob_union_ie(space), inclexcl::prob_union_direct(space));
  }
}

TEST(ProbUnion, RejectsBadWeights) {
  EXPECT_THROW(inclexcl::FiniteProbSpace::from_labels({"a", "b"}, {Rational(1, 2), Rational(1, 3)}, {}),
               mobkit::DomainError);
  EXPECT_THROW(inclexcl::FiniteProbSpace::from_labels({"a", "b"}, {Rational(3, 2), Rational(-1, 2)}, {}),
               mobkit::DomainError);
  EXPECT_THROW(inclexcl::FiniteProbSpace::from_labels({"a"}, {Rational(1), Rational(0)}, {}),
               mobkit::DomainError);
}

TEST(Derangements, SmallValues) {
  EXPECT_EQ(inclexcl::count_derangements(0), 1);
  EXPECT_EQ(inclexcl::count_derangements(1), 0);
  EXPECT_EQ(inclexcl::count_derangements(3), 2);
  EXPECT_EQ(inclexcl::count_derangements(4), 9);
}

TEST(Derangements, MatchEnumeration) {
  for (unsigned n = 0; n <= 9; ++n) {
    EXPECT_EQ(inclexcl::count_derangements(n), BigInt(std::to_string(mt::derangements_brute(n)))) << n;
  }
}

TEST(Derangements, SecondOrderRecurrence) {
  for (unsigned n = 2; n <= 50; ++n) {
    EXPECT_EQ(inclexcl::count_derangements(n),
              (n - 1) * (inclexcl::count_derangements(n - 1) + inclexcl::count_derangements(n - 2)))
        << n;
  }
}

TEST(Derangements, ClosestIntegerToFactorialOverE) {
  for (unsigned n = 1; n <= 50; ++n) {
    EXPECT_TRUE(mt::closest_to_factorial_over_e(n, inclexcl::count_derangements(n))) << n;
  }
  // n = 0 is excluded: 0!/e rounds to 0, not D(0) = 1.
  EXPECT_FALSE(mt::closest_to_factorial_over_e(0, inclexcl::count_derangements(0)));
}

TEST(FixedPointTable, SmallCases) {
  const auto one = inclexcl::fixed_point_table(1);
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one[0].g, 1);
  EXPECT_EQ(one[0].f, 0);
  EXPECT_EQ(one[1].g, 1);
  EXPECT_EQ(one[1].f, 1);
  const auto three = inclexcl::fixed_point_table(3);
  EXPECT_EQ(three[0].f, 2);
  EXPECT_EQ(three[7].f, 1);
  EXPECT_EQ(three[7].g, 1);
}

TEST(FixedPointTable, MatchesEnumerationAndDerangements) {
  for (unsigned n = 0; n <= 8; ++n) {
    const auto rows = inclexcl::fixed_point_table(n);
    ASSERT_EQ(rows.size(), std::size_t{1} << n);
    EXPECT_EQ(rows[0].f, inclexcl::count_derangements(n)) << n;
    for (const auto& row : rows) {
      BigInt fact;
      mpz_fac_ui(fact.get_mpz_t(), n - std::popcount(row.subset));
      EXPECT_EQ(row.g, fact);
      EXPECT_GE(row.f, 0);
      if (n <= 6) {
        EXPECT_EQ(row.f, BigInt(std::to_string(mt::exact_fixed_brute(n, row.subset))));
      }
    }
  }
  EXPECT_THROW(inclexcl::fixed_point_table(9), mobkit::CapError);
}

}  // namespace
