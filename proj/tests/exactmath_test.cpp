#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "psu4/exactmath.hpp"

namespace psu4 {
namespace {

TEST(Exactmath, GcdAndPow) {
  EXPECT_EQ(gcd(Integer(1440), Integer(35)), 5);
  EXPECT_EQ(gcd(Integer(0), Integer(7)), 7);
  EXPECT_EQ(pow(Integer(3), 12), 531441);
  EXPECT_EQ(pow(Integer(7), 0), 1);
}

TEST(Exactmath, PrimalityAgreesWithSieve) {
  const auto primes = primes_up_to(20000);
  std::vector<bool> marked(20001, false);
  for (auto p : primes) marked[p] = true;
  for (std::uint64_t n = 0; n <= 20000; ++n) {
    EXPECT_EQ(is_prime(n), marked[n]) << n;
    EXPECT_EQ(is_prime(Integer(n)), marked[n]) << n;
  }
}

TEST(Exactmath, LargePrimes) {
  EXPECT_TRUE(is_prime(std::uint64_t{18446744073709551557ULL}));
  EXPECT_FALSE(is_prime(std::uint64_t{3215031751ULL}));  // strong pseudoprime to 2,3,5,7
  const Integer m127 = pow(Integer(2), 127) - 1;
  EXPECT_TRUE(is_prime(m127));
  EXPECT_FALSE(is_prime(pow(Integer(2), 128) + 1));
}

TEST(Exactmath, FactorizeReconstructs) {
  std::mt19937_64 rng(20261019);
  for (int i = 0; i < 300; ++i) {
    const Integer n = Integer(rng() % 1000000000000ULL) + 1;
    const auto f = factorize(n);
    EXPECT_EQ(f.value(), n);
    Integer prev = 1;
    for (const auto& pf : f.factors()) {
      EXPECT_TRUE(is_prime(pf.prime));
      EXPECT_GT(pf.prime, prev);
      EXPECT_GE(pf.exponent, 1u);
      prev = pf.prime;
    }
  }
  const Integer big = pow(Integer(2), 64) * 3 * pow(Integer(1000003), 2) * Integer(4294967311ULL);
  EXPECT_EQ(factorize(big).value(), big);
}

TEST(Exactmath, FactorizeProductMatchesFactorize) {
  const std::vector<Integer> terms{Integer(4096), Integer(15), Integer(65), Integer(255)};
  EXPECT_EQ(factorize_product(terms), factorize(Integer(4096) * 15 * 65 * 255));
}

TEST(Exactmath, DivisorsOf1440) {
  const auto d = divisors(factorize(Integer(1440)));
  EXPECT_EQ(d.size(), 36u);
  EXPECT_EQ(factorize(Integer(1440)).divisor_count(), 36);
  EXPECT_TRUE(std::is_sorted(d.begin(), d.end()));
}

TEST(Exactmath, DivisorsClosedAndComplete) {
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    const auto d = divisors(factorize(Integer(n)));
    std::vector<Integer> expected;
    for (std::uint64_t k = 1; k <= n; ++k)
      if (n % k == 0) expected.push_back(Integer(k));
    ASSERT_EQ(d, expected) << n;
  }
}

TEST(Exactmath, PerfectSquareAgreesWithFloorSqrt) {
  for (std::uint64_t n = 0; n <= 1000000; ++n)
    ASSERT_EQ(is_perfect_square(Integer(n)), oracle::is_square_u64(n)) << n;
  EXPECT_TRUE(is_perfect_square(Integer(841)));
  EXPECT_TRUE(is_perfect_square(pow(Integer(10), 40)));
  EXPECT_FALSE(is_perfect_square(pow(Integer(10), 40) + 1));
  EXPECT_FALSE(is_perfect_square(Integer(-4)));
}

TEST(Exactmath, PrimePowers) {
  const auto pp = prime_powers(13, 3);
  EXPECT_EQ(pp.size(), 18u);
  EXPECT_TRUE(std::is_sorted(pp.begin(), pp.end()));
  EXPECT_EQ(pp.front().q, 2u);
  EXPECT_EQ(pp.back().q, 2197u);
  const auto upto = prime_powers_up_to(64);
  std::vector<std::uint64_t> qs;
  for (const auto& q : upto) qs.push_back(q.q);
  const std::vector<std::uint64_t> expected{2,  3,  4,  5,  7,  8,  9,  11, 13, 16, 17, 19,
                                            23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49, 53,
                                            59, 61, 64};
  EXPECT_EQ(qs, expected);
  EXPECT_THROW(PrimePower::make(4, 1), std::invalid_argument);
}

}  // namespace
}  // namespace psu4
