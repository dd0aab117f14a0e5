#include <doctest.h>

#include <algorithm>

#include "dehnhom/error.hpp"
#include "dehnhom/number_theory.hpp"
#include "dehnhom/obstruction.hpp"
#include "oracles.hpp"

using namespace dehnhom;

namespace {

std::vector<PhiSolution> from_oracle(const std::vector<oracle::Pair>& pairs) {
  std::vector<PhiSolution> out;
  for (const auto& pr : pairs) out.push_back({pr.alpha, pr.beta});
  return out;
}

}  // namespace

TEST_CASE("radical and primes") {
  CHECK(radical(12) == 6);
  CHECK(radical(7) == 7);
  CHECK(radical(360) == 30);
  CHECK(radical(1) == 1);
  CHECK(prime_factors(360) == std::vector<std::int64_t>{2, 3, 5});
  CHECK(primes_up_to(31) == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31});
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(mod(-7, 5) == 3);
}

TEST_CASE("phi solutions: fixed examples") {
  const std::vector<PhiSolution> zero_five{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  CHECK(phi_solutions(SurgeryParams(5, 1, 1, 0, 5)) == zero_five);
  CHECK(phi_solutions(SurgeryParams(5, 1, 1, Slope(1, 1))).empty());

  std::vector<PhiSolution> meridian;
  for (std::int64_t b = 1; b < 7; ++b) meridian.push_back({0, b});
  CHECK(phi_solutions(SurgeryParams(7, 3, 2, Slope::meridian())) == meridian);

  // Composite p: beta must be a unit.
  const auto m4 = phi_solutions(SurgeryParams(4, 1, 1, Slope::meridian()));
  CHECK(m4 == std::vector<PhiSolution>{{0, 1}, {0, 3}});
}

TEST_CASE("property: phi solutions match exhaustive enumeration") {
  for (std::int64_t p = 2; p <= 12; ++p)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t w = -6; w <= 6; ++w) {
        if (w == 0) continue;
        for (std::int64_t n = -6; n <= 6; ++n)
          for (std::int64_t np = 0; np <= 6; ++np) {
            if (n == 0 && np == 0) continue;
            const SurgeryParams s(p, q, w, n, np);
            REQUIRE(phi_solutions(s) == from_oracle(oracle::phi_pairs(p, q, w, s.n, s.nprime)));
          }
      }
    }
}

TEST_CASE("property: normalized phi solutions are a filtered subset") {
  for (std::int64_t p = 2; p <= 12; ++p)
    for (std::int64_t w = 1; w <= 6; ++w)
      for (std::int64_t n = -6; n <= 6; ++n)
        for (std::int64_t np = 0; np <= 6; ++np) {
          if (n == 0 && np == 0) continue;
          const SurgeryParams s(p, 1, w, n, np);
          const auto all = phi_solutions(s);
          const auto norm = phi_solutions(s, true);
          REQUIRE(std::includes(all.begin(), all.end(), norm.begin(), norm.end()));
          for (const auto& sol : all) {
            bool keep;
            if (sol.alpha != 0 && sol.beta != 0) {
              keep = std::gcd(sol.alpha, sol.beta) == 1;
            } else if (sol.beta == 0) {
              keep = std::gcd(p, sol.alpha) == 1;
            } else {
              keep = std::gcd(p, sol.beta) == 1;
            }
            REQUIRE(keep == std::binary_search(norm.begin(), norm.end(), sol));
          }
        }
}

TEST_CASE("Z/p fillings: fixed examples") {
  CHECK(zp_filling_possible(SurgeryParams(5, 1, 1, 0, 5)));
  CHECK(zp_filling_possible(SurgeryParams(4, 3, 2, Slope::meridian())));
  CHECK_FALSE(zp_filling_possible(SurgeryParams(4, 3, 2, Slope(-2, 1))));
  CHECK_FALSE(zp_filling_possible(SurgeryParams(4, 1, 2, Slope(0, 1))));
  CHECK_FALSE(zp_filling_by_congruences(SurgeryParams(4, 3, 2, Slope(-2, 1))));
}

TEST_CASE("Z/12 fillings of the (12, 5, 1) knot all have 12 | n'") {
  std::vector<std::int64_t> nprimes;
  std::size_t primitive = 0;
  for (std::int64_t n = -60; n <= 60; ++n)
    for (std::int64_t np = 1; np <= 60; ++np) {
      const SurgeryParams s(12, 5, 1, n, np);
      if (!zp_filling_possible(s)) continue;
      nprimes.push_back(np);
      primitive += s.is_primitive();
    }
  CHECK(nprimes.size() == 10);
  CHECK(primitive == 2);
  for (auto np : nprimes) CHECK(np % 12 == 0);
}

TEST_CASE("Z/4 fillings of the (4, 1, 3) knot all have 4 | n'") {
  std::size_t found = 0, primitive = 0;
  for (std::int64_t n = -60; n <= 60; ++n)
    for (std::int64_t np = 1; np <= 60; ++np) {
      const SurgeryParams s(4, 1, 3, n, np);
      if (!zp_filling_possible(s)) continue;
      ++found;
      primitive += s.is_primitive();
      CHECK(np % 4 == 0);
    }
  CHECK(found == 12);
  CHECK(primitive == 6);
}

TEST_CASE("property: both Z/p criteria agree, and the divisibility statements hold") {
  for (std::int64_t p = 2; p <= 16; ++p)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t w = 1; w <= 2 * p; ++w)
        for (std::int64_t n = -12; n <= 12; ++n)
          for (std::int64_t np = 0; np <= 12; ++np) {
            if (n == 0 && np == 0) continue;
            const SurgeryParams s(p, q, w, n, np);
            const bool zp = zp_filling_possible(s);
            REQUIRE(zp == zp_filling_by_congruences(s));
            if (!zp) continue;
            if (is_prime(p) && w % p != 0) REQUIRE(np % p == 0);
            if (std::gcd(w, p) == 1) REQUIRE(np % radical(p) == 0);
          }
    }
}

TEST_CASE("guaranteed delta divisor") {
  CHECK(guaranteed_delta_divisor(11, 1, 1, HomologyClass::generator) == 11);
  CHECK(guaranteed_delta_divisor(11, 1, 3, HomologyClass::not_null_homologous) == 11);
  CHECK(guaranteed_delta_divisor(12, 5, 1, HomologyClass::generator) == 6);
  CHECK(guaranteed_delta_divisor(8, 1, 3, HomologyClass::generator) == 2);
  CHECK_THROWS_AS(guaranteed_delta_divisor(7, 1, 7, HomologyClass::null_homologous), Error);
  CHECK_THROWS_AS(guaranteed_delta_divisor(7, 1, 7, HomologyClass::generator), Error);
  CHECK_THROWS_AS(guaranteed_delta_divisor(12, 5, 2, HomologyClass::not_null_homologous), Error);
  CHECK_THROWS_AS(guaranteed_delta_divisor(12, 5, 1, HomologyClass::unknown), Error);
}

TEST_CASE("property: the guaranteed divisor divides n' of every Z/p filling") {
  for (std::int64_t p = 2; p <= 14; ++p)
    for (std::int64_t w = 1; w <= 14; ++w) {
      const auto cls = classify_homology(w, p);
      if (cls == HomologyClass::null_homologous) continue;
      if (cls == HomologyClass::not_null_homologous && !is_prime(p)) continue;
      const auto d = guaranteed_delta_divisor(p, 1, w, cls);
      for (std::int64_t n = -15; n <= 15; ++n)
        for (std::int64_t np = 1; np <= 15; ++np) {
          if (zp_filling_possible(SurgeryParams(p, 1, w, n, np))) REQUIRE(np % d == 0);
        }
    }
}

TEST_CASE("L(4,q) obstruction: fixed examples") {
  const auto a = l4q_obstruction(1, 2, 0);
  CHECK(a.integral_candidate);
  CHECK(a.n_forced_even);
  CHECK(a.reason == L4qReason::parity_contradiction);
  CHECK(a.obstructed);
  CHECK(a.onto_z4_maps == 0);
  CHECK_FALSE(a.homology.is_cyclic_of_order(4));

  const auto b = l4q_obstruction(1, 1, 5);
  CHECK(b.reason == L4qReason::odd_linking_number);
  CHECK_FALSE(b.integral_candidate);
  CHECK(b.obstructed);

  const auto c = l4q_obstruction(3, 2, -2);
  CHECK(c.homology == AbelianGroup::from_invariant_factors({Integer(2), Integer(2)}));
  CHECK(c.reason == L4qReason::parity_contradiction);

  const auto d = l4q_obstruction(1, 2, 5);
  CHECK(d.reason == L4qReason::not_a_return_slope);

  CHECK_THROWS_AS(l4q_obstruction(2, 1, 0), Error);
  CHECK_THROWS_AS(l4q_obstruction(1, 4, 0), Error);
  CHECK(to_string(L4qReason::parity_contradiction) == "parity_contradiction");
}

TEST_CASE("property: no integral filling in L(4,q) returns Z/4") {
  for (std::int64_t q = -15; q <= 15; q += 2)
    for (std::int64_t w = -20; w <= 20; ++w) {
      if (w % 4 == 0) continue;
      for (std::int64_t n = -120; n <= 120; ++n) {
        const auto r = l4q_obstruction(q, w, n);
        REQUIRE(r.obstructed);
        REQUIRE_FALSE(r.homology.is_cyclic_of_order(4));
        if (r.integral_candidate) {
          REQUIRE(r.w_mod_4 == 2);
          REQUIRE(n % 2 == 0);
          REQUIRE(r.onto_z4_maps == 0);
        }
      }
    }
}
