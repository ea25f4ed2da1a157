#include <gtest/gtest.h>

#include <numeric>

#include "cayley/numtheory.hpp"

using namespace cayley::nt;

TEST(Numtheory, Phi) {
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(12), 4u);
  EXPECT_EQ(euler_phi(9), 6u);
  // brute force against gcd counting
  for (std::uint64_t n = 1; n <= 300; ++n) {
    std::uint64_t c = 0;
    for (std::uint64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
    EXPECT_EQ(euler_phi(n), c) << n;
  }
}

TEST(Numtheory, Moebius) {
  EXPECT_EQ(moebius_int(1), 1);
  EXPECT_EQ(moebius_int(12), 0);
  EXPECT_EQ(moebius_int(30), -1);
  // sum over divisors is [n == 1]
  for (std::uint64_t n = 1; n <= 300; ++n) {
    int s = 0;
    for (auto d : divisors(n)) s += moebius_int(d);
    EXPECT_EQ(s, n == 1 ? 1 : 0) << n;
  }
}

TEST(Numtheory, Divisors) {
  EXPECT_EQ(divisors(1), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(49), (std::vector<std::uint64_t>{1, 7, 49}));
  for (std::uint64_t n = 1; n <= 200; ++n) {
    std::uint64_t phi_sum = 0;
    for (auto d : divisors(n)) phi_sum += euler_phi(d);
    EXPECT_EQ(phi_sum, n);
  }
}

TEST(Numtheory, GcdLcm) {
  EXPECT_EQ(gcd_lcm(4, 6), (std::pair<std::uint64_t, std::uint64_t>{2, 12}));
  EXPECT_EQ(gcd_lcm(5, 5), (std::pair<std::uint64_t, std::uint64_t>{5, 5}));
  EXPECT_EQ(gcd_lcm(1, 9), (std::pair<std::uint64_t, std::uint64_t>{1, 9}));
}

TEST(Numtheory, Factorize) {
  EXPECT_TRUE(factorize(1).empty());
  EXPECT_EQ(factorize(360), (Factorization{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(factorize(97), (Factorization{{97, 1}}));
  for (std::uint64_t n = 1; n <= 500; ++n) {
    std::uint64_t prod = 1;
    for (auto [p, e] : factorize(n)) {
      EXPECT_TRUE(is_prime(p));
      for (unsigned i = 0; i < e; ++i) prod *= p;
    }
    EXPECT_EQ(prod, n);
  }
}

TEST(Numtheory, Predicates) {
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(91));
  EXPECT_TRUE(is_square_free(30));
  EXPECT_FALSE(is_square_free(18));
  EXPECT_EQ(multiplicative_order(2, 7), 3u);
  EXPECT_EQ(multiplicative_order(3, 7), 6u);
  EXPECT_THROW(multiplicative_order(2, 6), std::invalid_argument);
}

TEST(Numtheory, RejectsZero) {
  EXPECT_THROW(euler_phi(0), std::invalid_argument);
  EXPECT_THROW(divisors(0), std::invalid_argument);
  EXPECT_THROW(moebius_int(0), std::invalid_argument);
  EXPECT_THROW(gcd_lcm(0, 3), std::invalid_argument);
}
