#pragma once

#include <cstdint>
#include <vector>

namespace dehnhom {

// Non-negative gcd; gcd(0, 0) = 0.
std::int64_t gcd(std::int64_t a, std::int64_t b);
// Least non-negative residue of a modulo m > 0.
std::int64_t mod(std::int64_t a, std::int64_t m);

bool is_prime(std::int64_t n);
// Distinct prime factors of n >= 2 in increasing order, by trial division.
std::vector<std::int64_t> prime_factors(std::int64_t n);
// Product of the distinct prime factors of n >= 2.
std::int64_t radical(std::int64_t n);
std::vector<std::int64_t> primes_up_to(std::int64_t limit);

}  // namespace dehnhom
