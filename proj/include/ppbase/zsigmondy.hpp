#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ppbase {

// Value of the n-th cyclotomic polynomial at x, computed by exact division.
mpz_class cyclotomic_value(unsigned n, std::uint64_t x);

// Primes r | x^n - 1 with r not dividing x^i - 1 for i < n, ascending.
// Requires full factorization of the primitive part; intended for desk-sized
// inputs.
std::vector<mpz_class> primitive_prime_divisors(std::uint64_t x, unsigned n);

// Smallest primitive r with r > n+1 or r^2 | x^n - 1.
std::optional<mpz_class> large_ppd(std::uint64_t x, unsigned n);

// Factorization-free decisions: the primitive part of x^n - 1 is the
// cyclotomic value with the primes dividing n removed; primitive prime
// divisors exist iff it exceeds 1, and a large one exists iff it is neither 1
// nor exactly the prime n+1.
bool has_primitive_ppd(std::uint64_t x, unsigned n);
bool has_large_ppd(std::uint64_t x, unsigned n);

// The exception case (1..4) of the large-ppd existence theorem that (x, n)
// falls under, if any.
std::optional<int> feit_case(std::uint64_t x, unsigned n);

struct PpdReport {
    std::uint64_t x = 0;
    unsigned n = 0;
    std::vector<mpz_class> ppds;
    std::optional<mpz_class> large;
    std::optional<std::string> exception_class;  // Zsigmondy-26, Zsigmondy-n2, Feit-1..4
};

PpdReport ppd_report(std::uint64_t x, unsigned n);

// All (x, n) in [2, x_max] x [2, n_max] without a large primitive prime
// divisor, ordered by (x, n).
std::vector<std::pair<std::uint64_t, unsigned>> feit_scan(std::uint64_t x_max, unsigned n_max,
                                                          bool parallel = true);

// Exact factorization of an mpz value: trial division with a Pollard-rho
// fallback. (prime, exponent) pairs, primes ascending.
std::vector<std::pair<mpz_class, unsigned>> factor_mpz(const mpz_class& value);

}  // namespace ppbase
