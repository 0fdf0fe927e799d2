#include <cactus/dyadic.hpp>

#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include <random>

using cactus::DyadicRational;

namespace {
DyadicRational q(const char* s) { return DyadicRational::parse(s); }
}  // namespace

TEST(Dyadic, HalfPlusHalfIsOne) { EXPECT_EQ(q("1/2") + q("1/2"), DyadicRational(1)); }

TEST(Dyadic, ProductOfDyadics) { EXPECT_EQ(q("3/4") * q("1/2"), q("3/8")); }

TEST(Dyadic, Comparison) {
  EXPECT_LT(DyadicRational(7), q("15/2"));
  EXPECT_GT(q("-1/8"), q("-1/4"));
  EXPECT_EQ(q("2/4"), q("1/2"));
}

TEST(Dyadic, NormalizedRepresentation) {
  const DyadicRational x = q("12/8");
  EXPECT_EQ(x.to_string(), "3/2");
  EXPECT_EQ(x.exponent(), 1u);
  EXPECT_EQ((q("1/4") - q("1/4")).exponent(), 0u);
  EXPECT_EQ((q("1/4") - q("1/4")).to_string(), "0");
  EXPECT_EQ(q("-5/4").to_string(), "-5/4");
}

TEST(Dyadic, ParsesBothDenominatorSpellings) {
  EXPECT_EQ(q("121/2^3"), q("121/8"));
  EXPECT_EQ(q("7"), DyadicRational(7));
  EXPECT_THROW(q("1/3"), std::invalid_argument);
  EXPECT_THROW(q("x/2"), std::invalid_argument);
  EXPECT_THROW(q("1/0"), std::invalid_argument);
}

TEST(Dyadic, DecimalRendering) {
  EXPECT_EQ(q("39/4").to_decimal(), "9.75");
  EXPECT_EQ(q("1/1024").to_decimal(), "0.0009765625");
}

TEST(Dyadic, DeepPowersStayExact) {
  const DyadicRational tiny = DyadicRational::inverse_power_of_two(300);
  EXPECT_GT(tiny, DyadicRational(0));
  EXPECT_EQ(tiny * DyadicRational(cactus::BigInt(1) << 300, 0), DyadicRational(1));
  EXPECT_NE(DyadicRational(1) + tiny, DyadicRational(1));
}

// Agreement with boost rationals on random operands.
TEST(Dyadic, MatchesRationalArithmetic) {
  using R = boost::multiprecision::cpp_rational;
  std::mt19937_64 rng(7);
  auto to_r = [](const DyadicRational& d) { return R(d.numerator(), d.denominator()); };
  for (int i = 0; i < 2000; ++i) {
    const DyadicRational a(static_cast<long long>(rng() % 20001) - 10000, static_cast<std::uint32_t>(rng() % 40));
    const DyadicRational b(static_cast<long long>(rng() % 20001) - 10000, static_cast<std::uint32_t>(rng() % 40));
    EXPECT_EQ(to_r(a + b), to_r(a) + to_r(b));
    EXPECT_EQ(to_r(a - b), to_r(a) - to_r(b));
    EXPECT_EQ(to_r(a * b), to_r(a) * to_r(b));
    EXPECT_EQ(a < b, to_r(a) < to_r(b));
    EXPECT_EQ(a == b, to_r(a) == to_r(b));
  }
}
