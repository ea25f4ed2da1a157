#include "cayley/numtheory.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace cayley::nt {
namespace {

void require_positive(std::uint64_t n, const char* fn) {
  if (n == 0) throw std::invalid_argument(std::string(fn) + ": argument must be positive");
}

}  // namespace

Factorization factorize(std::uint64_t n) {
  require_positive(n, "factorize");
  Factorization out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  require_positive(n, "euler_phi");
  std::uint64_t result = n;
  for (const auto& [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

int moebius_int(std::uint64_t n) {
  require_positive(n, "moebius_int");
  int sign = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  require_positive(n, "divisors");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::pair<std::uint64_t, std::uint64_t> gcd_lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("gcd_lcm: arguments must be positive");
  const std::uint64_t g = std::gcd(a, b);
  return {g, a / g * b};
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  const auto f = factorize(n);
  return f.size() == 1 && f.front().exponent == 1;
}

bool is_square_free(std::uint64_t n) { return moebius_int(n) != 0; }

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
  require_positive(n, "multiplicative_order");
  if (std::gcd(a, n) != 1) throw std::invalid_argument("multiplicative_order: a must be a unit mod n");
  if (n == 1) return 1;
  std::uint64_t x = a % n, k = 1;
  while (x != 1) {
    x = x * a % n;
    ++k;
  }
  return k;
}

}  // namespace cayley::nt
