#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace diagzeta {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Deterministic trial-division primality test (desk scale).
bool is_prime_u64(std::uint64_t n) noexcept;

/// Prime factorization by trial division, pairs (prime, multiplicity),
/// ascending. Correct for n up to 2^40 (the desk-scale field-order cap).
std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n);

/// base^exp for unsigned machine exponents, exact.
BigInt pow_big(const BigInt& base, std::uint64_t exp);

/// Multiplicative order of a modulo m (requires gcd(a, m) = 1).
std::uint64_t multiplicative_order_mod(std::uint64_t a, std::uint64_t m);

/// floor(sqrt(n)) together with an exactness flag.
std::pair<BigInt, bool> sqrt_exact(const BigInt& n);

}  // namespace diagzeta
