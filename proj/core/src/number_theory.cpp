#include "dehnhom/number_theory.hpp"

#include <numeric>

#include "dehnhom/error.hpp"

namespace dehnhom {

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t mod(std::int64_t a, std::int64_t m) {
  if (m <= 0) throw Error("modulus must be positive");
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  if (n < 1) throw Error("prime factorization needs n >= 1");
  std::vector<std::int64_t> factors;
  for (std::int64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    factors.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

std::int64_t radical(std::int64_t n) {
  std::int64_t r = 1;
  for (auto f : prime_factors(n)) r *= f;
  return r;
}

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> primes;
  for (std::int64_t k = 2; k <= limit; ++k) {
    if (is_prime(k)) primes.push_back(k);
  }
  return primes;
}

}  // namespace dehnhom
