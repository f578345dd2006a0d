#include <gtest/gtest.h>

#include <random>

#include "../oracles.hpp"
#include "zindex/zn_core.hpp"

using namespace zindex;

namespace {

ZnSequence family22() { return parse_sequence("1^8 11 12^10 13^3 mod 22"); }

}  // namespace

TEST(AbsResidue, PositiveRepresentative) { EXPECT_EQ(abs_residue(3, Modulus(7)), 3); }

TEST(AbsResidue, ZeroClassIsN) { EXPECT_EQ(abs_residue(0, Modulus(6)), 6); }

TEST(AbsResidue, ReducesFirst) {
  EXPECT_EQ(abs_residue(43, Modulus(22)), 21);
  EXPECT_EQ(abs_residue(-1, Modulus(22)), 21);
}

TEST(Modulus, RejectsBelowTwo) {
  EXPECT_THROW(Modulus(1), Error);
  EXPECT_THROW(Modulus(0), Error);
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize(ZnSequence(Modulus(5), {1, 4})).values, (std::vector<Int>{1, 4}));
  EXPECT_EQ(normalize(ZnSequence(Modulus(4), {0, 0})).values, (std::vector<Int>{4, 4}));

  const auto norm = normalize(family22()).values;
  EXPECT_EQ(norm.size(), 22u);
  EXPECT_EQ(std::count(norm.begin(), norm.end(), 1), 8);
  EXPECT_EQ(std::count(norm.begin(), norm.end(), 11), 1);
  EXPECT_EQ(std::count(norm.begin(), norm.end(), 12), 10);
  EXPECT_EQ(std::count(norm.begin(), norm.end(), 13), 3);
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma(normalize(ZnSequence(Modulus(5), {1, 4}))), 5);
  EXPECT_EQ(sigma(normalize(ZnSequence(Modulus(9)))), 0);
  EXPECT_EQ(sigma(normalize(ZnSequence(Modulus(6), {2, 2, 2}))), 6);
}

TEST(Scale, Examples) {
  const ZnSequence s(Modulus(5), {1, 4});
  EXPECT_EQ(scale(1, s), s);
  EXPECT_EQ(scale(2, s), ZnSequence(Modulus(5), {2, 3}));
  EXPECT_EQ(scale(3, ZnSequence(Modulus(7), {1, 1, 2})), ZnSequence(Modulus(7), {3, 3, 6}));
}

TEST(Repetition, Examples) {
  EXPECT_EQ(repetition(family22()), 10);
  EXPECT_EQ(repetition(ZnSequence(Modulus(7), {1, 2, 3})), 1);
  EXPECT_EQ(repetition(ZnSequence(Modulus(5))), 0);
}

TEST(CoprimeMultipliers, Examples) {
  EXPECT_EQ(coprime_multipliers(Modulus(6)), (std::vector<Int>{1, 5}));
  EXPECT_EQ(coprime_multipliers(Modulus(7)), (std::vector<Int>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(coprime_multipliers(Modulus(22)), (std::vector<Int>{1, 3, 5, 7, 9, 13, 15, 17, 19, 21}));
}

TEST(CoprimeMultipliers, CountIsEulerPhi) {
  for (Int n = 2; n <= 200; ++n)
    EXPECT_EQ(static_cast<Int>(coprime_multipliers(Modulus(n)).size()), euler_phi(n)) << n;
}

TEST(ZeroSum, Examples) {
  EXPECT_TRUE(is_minimal_zero_sum(ZnSequence(Modulus(5), {1, 4})));
  EXPECT_TRUE(is_minimal_zero_sum(ZnSequence(Modulus(7), {1, 1, 2, 3})));
  const ZnSequence twos(Modulus(6), {2, 2, 2});
  EXPECT_TRUE(is_zero_sum(twos));
  EXPECT_TRUE(is_minimal_zero_sum(twos));
  EXPECT_FALSE(is_minimal_zero_sum(ZnSequence(Modulus(6), {1, 5, 3, 3})));
  EXPECT_FALSE(is_minimal_zero_sum(ZnSequence(Modulus(6), {1, 2})));
}

TEST(ZeroSum, MinimalityOfEmptyIsAnError) {
  EXPECT_THROW(is_minimal_zero_sum(ZnSequence(Modulus(5))), Error);
}

TEST(ZeroSum, MinimalityMatchesEnumeration) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const Int n = 2 + static_cast<Int>(rng() % 11);
    const Int len = 1 + static_cast<Int>(rng() % 6);
    std::vector<Int> v;
    for (Int i = 0; i < len; ++i) v.push_back(static_cast<Int>(rng() % n));
    const ZnSequence s(Modulus(n), v);
    EXPECT_EQ(is_minimal_zero_sum(s), oracle::brute_minimal_zero_sum(s)) << to_literal(s);
  }
}

TEST(Properties, AlgebraicIdentities) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Int n = 2 + static_cast<Int>(rng() % 40);
    const Modulus mod(n);
    std::vector<Int> v;
    for (int i = 0; i < 8; ++i) v.push_back(static_cast<Int>(rng() % 200) - 100);
    const ZnSequence s(mod, v);

    for (Int x : v) {
      const Int a = abs_residue(x, mod);
      EXPECT_GE(a, 1);
      EXPECT_LE(a, n);
      EXPECT_EQ(mod.reduce(a - x), 0);
    }
    EXPECT_EQ(normalize(scale(1, s)).values, normalize(s).values);
    const Int m1 = static_cast<Int>(rng() % 50), m2 = static_cast<Int>(rng() % 50);
    EXPECT_EQ(scale(m1, scale(m2, s)), scale(mod.reduce(m1 * m2), s));

    Int raw = 0;
    for (Int x : v) raw += x;
    EXPECT_EQ(mod.reduce(sigma(normalize(s)) - raw), 0);

    for (Int m : coprime_multipliers(mod)) EXPECT_EQ(repetition(scale(m, s)), repetition(s));
  }
}

TEST(Literal, ParsesAndFormats) {
  const auto s = family22();
  EXPECT_EQ(s.n(), 22);
  EXPECT_EQ(s.length(), 22);
  EXPECT_EQ(to_literal(s), "1^8 11 12^10 13^3 mod 22");
  EXPECT_EQ(parse_sequence("43 -1 mod 22"), ZnSequence(Modulus(22), {21, 21}));
  EXPECT_EQ(to_literal(parse_sequence("43 -1 mod 22")), "21^2 mod 22");
  EXPECT_TRUE(parse_sequence("mod 5").empty());
  EXPECT_EQ(parse_sequence("  0^2\t5 mod 5 "), ZnSequence(Modulus(5), {0, 0, 0}));
}

TEST(Literal, RoundTripsRandomSequences) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Int n = 2 + static_cast<Int>(rng() % 60);
    std::vector<Int> v;
    const auto len = rng() % 12;
    for (std::size_t i = 0; i < len; ++i) v.push_back(static_cast<Int>(rng() % n));
    const ZnSequence s(Modulus(n), v);
    EXPECT_EQ(parse_sequence(to_literal(s)), s);
  }
}

TEST(Literal, ReportsErrorPosition) {
  auto position_of = [](std::string_view text) -> std::size_t {
    try {
      parse_sequence(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string_view::npos;
  };
  EXPECT_EQ(position_of("1 2 x mod 5"), 4u);
  EXPECT_EQ(position_of("1^ mod 5"), 2u);
  EXPECT_EQ(position_of("1^0 mod 5"), 2u);
  EXPECT_EQ(position_of("1 2 mod"), 7u);
  EXPECT_EQ(position_of("1 2 mod 1"), 8u);
  EXPECT_EQ(position_of("1 2 mod 5 6"), 10u);
  EXPECT_EQ(position_of("1 2 3"), 5u);
  EXPECT_EQ(position_of("1,2 mod 5"), 1u);
}

TEST(NumberTheory, Helpers) {
  EXPECT_EQ(euler_phi(1), 1);
  EXPECT_EQ(euler_phi(30), 8);
  EXPECT_EQ(euler_phi(97), 96);
  EXPECT_TRUE(is_prime(24329));
  EXPECT_FALSE(is_prime(24321));
  EXPECT_EQ(next_prime(24318), 24329);
  EXPECT_EQ(primes_in(10, 30), (std::vector<Int>{11, 13, 17, 19, 23, 29}));
}
