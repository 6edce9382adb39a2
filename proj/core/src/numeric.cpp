#include "diagzeta/numeric.hpp"

#include <stdexcept>

namespace diagzeta {

bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> factors;
  auto strip = [&](std::uint64_t p) {
    if (n % p != 0) return;
    unsigned mult = 0;
    while (n % p == 0) {
      n /= p;
      ++mult;
    }
    factors.emplace_back(p, mult);
  };
  strip(2);
  strip(3);
  for (std::uint64_t d = 5; d * d <= n && d <= (1ULL << 20); d += 6) {
    strip(d);
    strip(d + 2);
  }
  // Any cofactor surviving trial division up to 2^20 on inputs <= 2^40 is prime.
  if (n > 1) factors.emplace_back(n, 1u);
  return factors;
}

BigInt pow_big(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt acc = base;
  while (exp != 0) {
    if (exp & 1) result *= acc;
    exp >>= 1;
    if (exp != 0) acc *= acc;
  }
  return result;
}

std::uint64_t multiplicative_order_mod(std::uint64_t a, std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("modulus must be >= 2");
  a %= m;
  if (a == 0) throw std::invalid_argument("a and m must be coprime");
  std::uint64_t order = 1;
  std::uint64_t x = a;
  while (x != 1) {
    x = (unsigned __int128)(x) * a % m;
    ++order;
    if (order > m) throw std::invalid_argument("a and m must be coprime");
  }
  return order;
}

std::pair<BigInt, bool> sqrt_exact(const BigInt& n) {
  BigInt root = boost::multiprecision::sqrt(n);
  return {root, root * root == n};
}

}  // namespace diagzeta
