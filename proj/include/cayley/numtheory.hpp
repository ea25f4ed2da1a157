#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cayley::nt {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, primes strictly increasing.
using Factorization = std::vector<PrimePower>;

// All functions reject zero arguments with std::invalid_argument.

Factorization factorize(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
int moebius_int(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::pair<std::uint64_t, std::uint64_t> gcd_lcm(std::uint64_t a, std::uint64_t b);

bool is_prime(std::uint64_t n);
bool is_square_free(std::uint64_t n);

/// Multiplicative order of `a` modulo `n`; requires gcd(a, n) = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

}  // namespace cayley::nt
