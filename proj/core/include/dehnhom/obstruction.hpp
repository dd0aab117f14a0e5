#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dehnhom/abelian_group.hpp"
#include "dehnhom/surgery.hpp"

namespace dehnhom {

// A homomorphism H1(M_K(n/n')) -> Z/p = <x>, given by [m] -> alpha x and
// [mu] -> beta x with alpha, beta in [0, p-1].
struct PhiSolution {
  std::int64_t alpha;
  std::int64_t beta;

  friend bool operator==(const PhiSolution&, const PhiSolution&) = default;
  friend auto operator<=>(const PhiSolution&, const PhiSolution&) = default;
};

// Every (alpha, beta) satisfying
//   n alpha + n'w beta = 0 (mod p),   qw alpha = 0 (mod p),
// with gcd(alpha, beta, p) = 1 (the map is onto). With `lemma_normalized`
// the list is further restricted to gcd(alpha, beta) = 1 when both are
// non-zero, gcd(p, alpha) = 1 when beta = 0, gcd(p, beta) = 1 when alpha = 0.
// Sorted lexicographically.
std::vector<PhiSolution> phi_solutions(const SurgeryParams& params, bool lemma_normalized = false);

// True iff H1 of the filling is Z/p, decided by the Smith normal form alone.
bool zp_filling_possible(const SurgeryParams& params);

// The same question answered without Smith form: |det| = p and some onto map
// to Z/p exists.
bool zp_filling_by_congruences(const SurgeryParams& params);

// Largest d for which every Z/p-preserving filling has d | n'.
//   p prime and p does not divide w          -> p
//   homology_class == generator (gcd(w,p)=1) -> radical(p)
// Throws Error naming the missing premise otherwise, and when the asserted
// class contradicts w.
std::int64_t guaranteed_delta_divisor(std::int64_t p, std::int64_t q, std::int64_t w,
                                      HomologyClass homology_class);

enum class L4qReason {
  odd_linking_number,       // w odd: p does not divide w^2 q, no integral return slope
  not_a_return_slope,       // w = 2 (mod 4) but |4n + w^2 q| != 4
  parity_contradiction,     // n is a return slope, hence even, but Z/4 forces n odd
};

std::string_view to_string(L4qReason reason);

// Replay of the parity argument that no integral filling of a knot in L(4,q)
// with 4 not dividing w returns H1 = Z/4.
struct L4qObstruction {
  std::int64_t q;
  std::int64_t w;
  std::int64_t n;
  std::int64_t w_mod_4;
  bool integral_candidate;   // n is one of integral_return_slopes(4, q, w)
  bool n_forced_even;        // w = 2 (mod 4): w^2/4 odd, so each return slope is even
  std::int64_t z4_alpha;     // an onto map to Z/4 would need alpha = 2 ...
  bool z4_requires_n_odd;    // ... and beta odd, so 2n + 2 beta = 0 (mod 4) needs n odd
  L4qReason reason;
  bool obstructed;           // conclusion of the parity argument
  AbelianGroup homology;     // Smith normal form cross-check
  std::size_t onto_z4_maps;  // phi_solutions(4, q, w, n/1).size(), expected 0 when |det| = 4
};

// Throws Error if q is even or 4 divides w.
L4qObstruction l4q_obstruction(std::int64_t q, std::int64_t w, std::int64_t n);

}  // namespace dehnhom
