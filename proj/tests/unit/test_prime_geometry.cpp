#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "zindex/index_engine.hpp"
#include "zindex/prime_geometry.hpp"

using namespace zindex;

TEST(HalfSet, Examples) {
  EXPECT_EQ(half_set(7, 1).members, (std::vector<Int>{1, 2, 3}));
  EXPECT_EQ(half_set(7, 2).members, (std::vector<Int>{1}));
  EXPECT_EQ(half_set(7, 5).members, (std::vector<Int>{2, 3}));
}

TEST(HalfSet, Preconditions) {
  EXPECT_THROW(half_set(7, 0), Error);
  EXPECT_THROW(half_set(7, 7), Error);
  EXPECT_THROW(half_set(9, 1), Error);
}

TEST(HalfSet, ComplementIdentity) {
  EXPECT_TRUE(check_half_set_complements(3));
  EXPECT_EQ(half_set(3, 1).members.size(), 1u);
  EXPECT_TRUE(half_set(3, 2).members.empty());
  for (Int p : primes_in(3, 400)) EXPECT_TRUE(check_half_set_complements(p)) << p;
}

TEST(HalfSetScan, Examples) {
  const auto r19 = scan_half_set_lower_bound(19);
  EXPECT_EQ(r19.min_size, 3);
  EXPECT_TRUE(r19.violators.empty());
  EXPECT_TRUE(r19.equality_as_expected);
  for (Int j : r19.equality_js) EXPECT_TRUE(j == 16 || j == 6) << j;
  EXPECT_EQ(half_set(19, 16).members.size(), 3u);

  EXPECT_TRUE(scan_half_set_lower_bound(23).violators.empty());
  EXPECT_TRUE(scan_half_set_lower_bound(37).violators.empty());
}

TEST(HalfSetScan, HoldsOverRange) {
  for (Int p : primes_in(19, 1000)) {
    const auto r = scan_half_set_lower_bound(p);
    EXPECT_TRUE(r.violators.empty()) << p;
    EXPECT_TRUE(r.equality_as_expected) << p;
    EXPECT_GE(6 * r.min_size, p - 1);
  }
}

TEST(HalfSetScan, Preconditions) {
  EXPECT_THROW(scan_half_set_lower_bound(17), Error);
  EXPECT_THROW(scan_half_set_lower_bound(21), Error);
}

TEST(FourSum, Examples) {
  const auto p5 = enumerate_min_zero_sum_4(5);
  const auto has = [](const std::vector<ZnSequence>& v, const ZnSequence& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
  };
  EXPECT_TRUE(has(p5, ZnSequence(Modulus(5), {1, 1, 1, 2})));
  EXPECT_FALSE(has(p5, ZnSequence(Modulus(5), {1, 4, 2, 3})));
  EXPECT_TRUE(has(enumerate_min_zero_sum_4(7), ZnSequence(Modulus(7), {1, 1, 2, 3})));
}

// Counts produced by filtering all 4-multisets with the subset oracle.
TEST(FourSum, MatchesEnumerationOracle) {
  const std::pair<Int, Int> counts[] = {{5, 4}, {7, 12}, {11, 50}, {13, 84}, {19, 270}};
  for (auto [p, count] : counts) {
    const auto got = enumerate_min_zero_sum_4(p);
    std::vector<ZnSequence> want;
    for (const auto& s : oracle::all_multisets(Modulus(p), 4, 1))
      if (oracle::brute_minimal_zero_sum(s)) want.push_back(s);
    EXPECT_EQ(static_cast<Int>(got.size()), count) << p;
    EXPECT_EQ(got, want) << p;
  }
}

TEST(FourSum, AllHaveIndexP) {
  for (Int p : {5, 7, 11, 13, 19, 23, 101}) {
    const auto r = verify_foursum(p);
    EXPECT_TRUE(r.all_index_p) << p;
    EXPECT_TRUE(r.failures.empty());
    EXPECT_EQ(r.count, static_cast<Int>(enumerate_min_zero_sum_4(p).size()));
  }
}

TEST(FourSum, ParallelMatchesSerial) {
  const auto a = verify_foursum(53, 1);
  const auto b = verify_foursum(53, 4);
  EXPECT_EQ(a.count, b.count);
  EXPECT_EQ(a.all_index_p, b.all_index_p);
}
