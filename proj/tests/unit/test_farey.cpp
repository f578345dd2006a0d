#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "../oracles.hpp"
#include "zindex/farey.hpp"

using namespace zindex;

namespace {

std::vector<FareyFraction> enumerate_farey(Int k) {
  std::set<Rational> seen;
  for (Int b = 2; b <= k; ++b)
    for (Int a = 1; a < b; ++a)
      if (Rational(a, b) >= Rational(1, k) && Rational(a, b) <= Rational(k - 1, k)) seen.insert(Rational(a, b));
  std::vector<FareyFraction> out;
  for (const auto& q : seen) out.push_back({q.numerator(), q.denominator()});
  return out;
}

std::vector<Int> members(const ZnSequence& s) { return s.values(); }

}  // namespace

TEST(FareySet, Examples) {
  EXPECT_EQ(farey_set(2).fractions, (std::vector<FareyFraction>{{1, 2}}));
  const auto f4 = farey_set(4);
  EXPECT_EQ(f4.f(), 5u);
  EXPECT_EQ(f4.fractions, (std::vector<FareyFraction>{{1, 4}, {1, 3}, {1, 2}, {2, 3}, {3, 4}}));
  const auto f5 = farey_set(5);
  EXPECT_EQ(f5.f(), 9u);
  EXPECT_EQ(f5.fractions, (std::vector<FareyFraction>{
                              {1, 5}, {1, 4}, {1, 3}, {2, 5}, {1, 2}, {3, 5}, {2, 3}, {3, 4}, {4, 5}}));
}

TEST(FareySet, RejectsSmallK) {
  EXPECT_THROW(farey_set(1), Error);
  EXPECT_THROW(farey_set(0), Error);
}

TEST(FareySet, MatchesEnumerationAndAdjacencyHolds) {
  for (Int k = 2; k <= 60; ++k) {
    const auto set = farey_set(k);
    ASSERT_EQ(set.fractions, enumerate_farey(k)) << k;
    const auto checks = check_adjacency(set);
    EXPECT_EQ(checks.size(), 2 * (set.f() - 1));
    for (const auto& c : checks) EXPECT_TRUE(c.holds) << k << " " << c.name;
  }
}

TEST(Adjacency, Examples) {
  EXPECT_TRUE(check_adjacency(farey_set(2)).empty());
  const auto checks = check_adjacency(farey_set(4));
  ASSERT_EQ(checks.size(), 8u);
  // Pair (1/3, 1/2) is the second pair; (1/2, 2/3) the third.
  EXPECT_EQ(checks[2].name, "denominator sum 1/3 < 1/2");
  EXPECT_EQ(checks[2].lhs, Rational(5));
  EXPECT_EQ(checks[2].rhs, Rational(5));
  EXPECT_EQ(checks[3].name, "determinant 1/3 < 1/2");
  EXPECT_EQ(checks[3].lhs, Rational(1));
  EXPECT_TRUE(checks[3].holds);
  EXPECT_EQ(checks[4].lhs, Rational(5));
  EXPECT_EQ(checks[5].lhs, Rational(1));
}

TEST(Adjacency, DetectsBrokenSet) {
  FareySet bad{4, {{1, 4}, {1, 2}}};
  const auto checks = check_adjacency(bad);
  ASSERT_EQ(checks.size(), 2u);
  EXPECT_TRUE(checks[0].holds);
  EXPECT_FALSE(checks[1].holds);
}

TEST(Partition, Example23) {
  // Intervals for p=23, M=5, k=4 worked by hand:
  // S_1=[1,5], S_3=[6,7], S_5=[8,28/3], S_7=[12,14], S_9=[47/3,17].
  const auto r = partition_sequence(ZnSequence(Modulus(23), {3, 7, 12, 17}), 5);
  EXPECT_EQ(r.k, 4);
  ASSERT_EQ(r.parts.size(), 11u);
  EXPECT_EQ(members(r.parts[0].members), (std::vector<Int>{3}));
  EXPECT_EQ(r.parts[2].lo, Rational(6));
  EXPECT_EQ(r.parts[2].hi, Rational(7));
  EXPECT_EQ(members(r.parts[2].members), (std::vector<Int>{7}));
  EXPECT_EQ(members(r.parts[6].members), (std::vector<Int>{12}));
  EXPECT_EQ(members(r.parts[8].members), (std::vector<Int>{17}));
  for (std::size_t j : {1u, 3u, 4u, 5u, 7u, 9u, 10u}) EXPECT_TRUE(r.parts[j].members.empty()) << j;
}

TEST(Partition, GapValueIsRejected) {
  try {
    partition_sequence(ZnSequence(Modulus(23), {6}), 5);
    FAIL();
  } catch (const PartitionGapError& e) {
    EXPECT_EQ(e.value(), 6);
    EXPECT_STREQ(e.what(), "term outside partition: 6");
  }
}

TEST(Partition, SmallValuesLandInFirstPart) {
  const auto r = partition_sequence(ZnSequence(Modulus(11), {1, 2, 3, 4, 5}), 5);
  EXPECT_EQ(r.k, 2);
  EXPECT_EQ(members(r.parts[0].members), (std::vector<Int>{1, 2, 3, 4, 5}));
}

TEST(Partition, Preconditions) {
  EXPECT_THROW(partition_sequence(ZnSequence(Modulus(22), {1}), 5), Error);
  EXPECT_THROW(partition_sequence(ZnSequence(Modulus(23), {1}), 0), Error);
  EXPECT_THROW(partition_sequence(ZnSequence(Modulus(23), {1}), 22), Error);
}

// Every value in [1, p-M-1] other than M+1 lands in exactly one part whose
// closed interval contains it; M+1 always raises. Values >= p-M lie outside
// the setting and either land in one containing part or raise.
TEST(Partition, DisjointCoverOfNonzeroResidues) {
  for (Int p : primes_in(5, 110)) {
    for (Int M = 1; M <= p - 2; ++M) {
      if (p / M < 2) continue;
      for (Int x = 1; x < p; ++x) {
        const ZnSequence s(Modulus(p), {x});
        if (x == M + 1) {
          EXPECT_THROW(partition_sequence(s, M), PartitionGapError);
          continue;
        }
        std::optional<PartitionResult> r;
        try {
          r = partition_sequence(s, M);
        } catch (const PartitionGapError&) {
          EXPECT_GE(x, p - M) << p << " " << M << " " << x;
          continue;
        }
        int hits = 0;
        for (const auto& part : r->parts) {
          if (part.members.empty()) continue;
          ++hits;
          EXPECT_TRUE(part.lo <= Rational(x) && Rational(x) <= part.hi) << p << " " << M << " " << x;
        }
        EXPECT_EQ(hits, 1) << p << " " << M << " " << x;
      }
    }
  }
}

TEST(RSet, Examples) {
  EXPECT_EQ(members(r_set(ZnSequence(Modulus(11), {6, 7, 8}), 2, 3)), (std::vector<Int>{6, 7}));
  EXPECT_EQ(members(r_set(ZnSequence(Modulus(11), {4}), 3, 3)), (std::vector<Int>{4}));
  EXPECT_TRUE(r_set(ZnSequence(Modulus(11), {5}), 2, 3).empty());
}

TEST(SubsetHit, Examples) {
  const std::vector<Int> ones{1, 1};
  EXPECT_EQ(residue_subset_hit(ones, 2, 1), (std::vector<Int>{1}));
  const std::vector<Int> a{1, 3, 3, 1};
  EXPECT_EQ(residue_subset_hit(a, 4, 2), (std::vector<Int>{2, 3}));
  EXPECT_EQ(residue_subset_hit(a, 4, 0), (std::vector<Int>{1, 2}));
}

TEST(SubsetHit, HypothesisViolation) {
  const std::vector<Int> a{1, 2, 3, 1};
  EXPECT_THROW(residue_subset_hit(a, 4, 1), Error);
}

TEST(SubsetHit, MatchesSubsetEnumeration) {
  std::mt19937_64 rng(31);
  for (Int n = 2; n <= 10; ++n) {
    std::vector<Int> units;
    for (Int x = 1; x < n; ++x)
      if (std::gcd(x, n) == 1) units.push_back(x);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Int> a;
      for (Int i = 0; i < n; ++i) a.push_back(units[rng() % units.size()]);
      for (Int m = 0; m < n; ++m) {
        const auto got = residue_subset_hit(a, n, m);
        const auto want = oracle::brute_subset_hit(a, n, m, m == 0 ? n : n - 1);
        ASSERT_FALSE(want.empty());
        EXPECT_EQ(got, want) << "n=" << n << " m=" << m;
        Int sum = 0;
        for (Int i : got) sum += a[static_cast<std::size_t>(i - 1)];
        EXPECT_EQ(((sum - m) % n + n) % n, 0);
      }
    }
  }
}
