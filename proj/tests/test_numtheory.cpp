#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "oracles.hpp"
#include "tpl/numtheory.hpp"

using namespace tpl;

TEST(GcdSet, Examples) {
  EXPECT_EQ(gcd_set({12, 13}), 1);
  EXPECT_EQ(gcd_set({6}), 6);
  EXPECT_EQ(gcd_set({10, 18, 19}), 1);
  EXPECT_EQ(gcd_set({12, 18, 30}), 6);
}

TEST(GcdSet, Errors) {
  std::vector<Label> none;
  try {
    gcd_set(none);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptyInput);
  }
  try {
    gcd_set({4, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidParameter);
  }
}

TEST(GcdSet, SubtractionAndShiftInvariance) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Label> value(1, 1'000'000);
  std::uniform_int_distribution<Label> mult(0, 50);
  for (int i = 0; i < 2000; ++i) {
    Label a = value(rng), b = value(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    EXPECT_EQ(gcd_set({a, b}), gcd_set({a, b - a}));
    const Label t = mult(rng);
    EXPECT_EQ(gcd_set({a, b}), gcd_set({a + t * b, b}));
  }
}

TEST(Primes, NthPrimeMatchesTrialDivision) {
  EXPECT_EQ(nth_prime(1), 2u);
  EXPECT_EQ(nth_prime(3), 5u);
  EXPECT_EQ(nth_prime(9), 23u);
  for (std::size_t i = 1; i <= 600; ++i) EXPECT_EQ(nth_prime(i), oracle::nth_prime(i)) << i;
  EXPECT_THROW(nth_prime(0), Error);
}

TEST(Primes, IsPrimeMatchesTrialDivision) {
  for (std::uint64_t x = 0; x < 20000; ++x) EXPECT_EQ(is_prime(x), oracle::is_prime(x)) << x;
}

TEST(Primes, LargestPrimeLeq) {
  EXPECT_EQ(largest_prime_leq(12), 11u);
  EXPECT_EQ(largest_prime_leq(2), 2u);
  EXPECT_EQ(largest_prime_leq(30), 29u);
  for (std::uint64_t x = 2; x < 3000; ++x) {
    std::uint64_t p = x;
    while (!oracle::is_prime(p)) --p;
    EXPECT_EQ(largest_prime_leq(x), p);
  }
  try {
    largest_prime_leq(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoPrime);
  }
}

TEST(Primes, PrimeCount) {
  EXPECT_EQ(prime_count(10), 4u);
  EXPECT_EQ(prime_count(17), 7u);
  EXPECT_EQ(prime_count(100), 25u);
  EXPECT_GT(25.0, 100.0 / std::log(100.0));
  EXPECT_EQ(prime_count(0), 0u);
  EXPECT_EQ(prime_count(1.9), 0u);
  EXPECT_EQ(prime_count(2.5), 1u);
}

TEST(Primes, PrimeCountAgreesAtEveryPrime) {
  for (std::size_t i = 1; i <= 2000; ++i) {
    const auto p = nth_prime(i);
    EXPECT_EQ(prime_count(static_cast<double>(p)), i);
    EXPECT_EQ(prime_count(static_cast<double>(p) - 0.5), i - 1);
  }
}

TEST(Primes, BertrandInSieveRange) {
  EXPECT_FALSE(first_bertrand_violation(4, 200'000).has_value());
  // x = 3: largest prime 3 > 1.5 holds too, x = 2 -> 2 > 1.
  EXPECT_FALSE(first_bertrand_violation(2, 3).has_value());
}

TEST(Primes, PrimeCountLowerBound) {
  EXPECT_FALSE(first_prime_count_bound_violation(17, 200'000).has_value());
  // Below 17 it fails, e.g. pi(10) = 4 < 10 / ln 10.
  EXPECT_TRUE(first_prime_count_bound_violation(2, 16).has_value());
}

TEST(PrimeTable, GrowsOnDemandAndRespectsCap) {
  PrimeTable table(32, 1000);
  EXPECT_EQ(table.limit(), 32u);
  EXPECT_TRUE(table.is_prime(997));
  EXPECT_GE(table.limit(), 997u);
  EXPECT_LE(table.limit(), 1000u);
  try {
    table.is_prime(1001);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SieveLimitExceeded);
  }
  table.set_cap(5000);
  EXPECT_EQ(table.nth_prime(500), 3571u);
}

TEST(PrimeTable, ConcurrentReaders) {
  PrimeTable table(16);
  std::vector<std::thread> threads;
  std::vector<std::uint64_t> results(8);
  for (std::size_t t = 0; t < 8; ++t)
    threads.emplace_back([&, t] { results[t] = table.nth_prime(1000 + 100 * t); });
  for (auto& th : threads) th.join();
  for (std::size_t t = 0; t < 8; ++t) EXPECT_EQ(results[t], oracle::nth_prime(1000 + 100 * t));
}

TEST(Capacity, SmallCasesAndRange) {
  EXPECT_EQ(nth_prime(3), 5u);  // p_3 = 5 = (16 - 4 - 2) / 2
  EXPECT_LT(nth_prime(7), 20u);
  const auto report = check_label_capacity_bounds(1000);
  EXPECT_TRUE(report.holds);
  EXPECT_EQ(report.checked_up_to, 1000u);
  EXPECT_FALSE(report.counterexample.has_value());
  EXPECT_THROW(check_label_capacity_bounds(3), Error);
}
