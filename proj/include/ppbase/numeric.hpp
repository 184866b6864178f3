#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ppbase {

// (prime, exponent) pairs, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

// n = p^k with k >= 1. 1 is not a prime power.
bool is_prime_power(std::uint64_t n);

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

std::uint64_t pow_u64(std::uint64_t base, unsigned exp);

// x^e mod m, m > 1.
std::uint64_t pow_mod(std::uint64_t x, std::uint64_t e, std::uint64_t m);

// Multiplicative order of x modulo m (requires gcd(x,m)=1).
std::uint64_t multiplicative_order(std::uint64_t x, std::uint64_t m);

}  // namespace ppbase
