#include "dehnhom/obstruction.hpp"

#include <numeric>

#include "dehnhom/error.hpp"
#include "dehnhom/number_theory.hpp"

namespace dehnhom {
namespace {

std::int64_t residue(const Integer& value, std::int64_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_si();
}

__extension__ using Wide = __int128;

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<Wide>(a) * b) % p);
}

bool lemma_normal(const PhiSolution& s, std::int64_t p) {
  if (s.alpha != 0 && s.beta != 0) return std::gcd(s.alpha, s.beta) == 1;
  if (s.beta == 0) return std::gcd(p, s.alpha) == 1;
  return std::gcd(p, s.beta) == 1;
}

}  // namespace

std::vector<PhiSolution> phi_solutions(const SurgeryParams& params, bool lemma_normalized) {
  const std::int64_t p = params.p;
  const Integer w(static_cast<long>(params.w));
  const std::int64_t n_res = residue(Integer(static_cast<long>(params.n)), p);
  const std::int64_t nw_res =
      residue(Integer(static_cast<long>(params.nprime)) * w, p);
  const std::int64_t qw_res = residue(Integer(static_cast<long>(params.q)) * w, p);

  std::vector<PhiSolution> out;
  for (std::int64_t alpha = 0; alpha < p; ++alpha) {
    if (mul_mod(qw_res, alpha, p) != 0) continue;
    const std::int64_t first = mul_mod(n_res, alpha, p);
    for (std::int64_t beta = 0; beta < p; ++beta) {
      if ((first + mul_mod(nw_res, beta, p)) % p != 0) continue;
      if (std::gcd(std::gcd(alpha, beta), p) != 1) continue;
      PhiSolution s{alpha, beta};
      if (lemma_normalized && !lemma_normal(s, p)) continue;
      out.push_back(s);
    }
  }
  return out;
}

bool zp_filling_possible(const SurgeryParams& params) {
  return surgered_homology(params).is_cyclic_of_order(params.p);
}

bool zp_filling_by_congruences(const SurgeryParams& params) {
  if (abs(filling_determinant(params)) != params.p) return false;
  return !phi_solutions(params, false).empty();
}

std::int64_t guaranteed_delta_divisor(std::int64_t p, std::int64_t q, std::int64_t w,
                                      HomologyClass homology_class) {
  if (p < 2) throw Error("p must be at least 2");
  if (std::gcd(p, q) != 1) throw Error("premise not met: gcd(p, q) = 1");
  if (w == 0) throw Error("premise not met: w non-zero");
  switch (homology_class) {
    case HomologyClass::generator:
      if (!is_generator(w, p)) {
        throw Error("premise not met: generator class needs gcd(w, p) = 1");
      }
      return radical(p);
    case HomologyClass::not_null_homologous:
      if (!is_not_null_homologous(w, p)) {
        throw Error("premise not met: p divides w, the class is null-homologous");
      }
      if (!is_prime(p)) {
        throw Error("premise not met: p must be prime unless the class is a generator");
      }
      return p;
    case HomologyClass::null_homologous:
      throw Error("premise not met: the knot must not be null-homologous");
    case HomologyClass::unknown:
      break;
  }
  throw Error("premise not met: homology class of the knot is unknown");
}

std::string_view to_string(L4qReason reason) {
  switch (reason) {
    case L4qReason::odd_linking_number: return "odd_linking_number";
    case L4qReason::not_a_return_slope: return "not_a_return_slope";
    case L4qReason::parity_contradiction: return "parity_contradiction";
  }
  return "parity_contradiction";
}

L4qObstruction l4q_obstruction(std::int64_t q, std::int64_t w, std::int64_t n) {
  if (q % 2 == 0) throw Error("L(4,q) needs q odd");
  if (w % 4 == 0) throw Error("4 divides w: the knot is null-homologous");
  SurgeryParams params(4, q, w, Slope(n, 1));

  L4qObstruction r{};
  r.q = q;
  r.w = w;
  r.n = n;
  r.w_mod_4 = mod(w, 4);
  const auto candidates = integral_return_slopes(4, q, w);
  const Integer n_big(static_cast<long>(n));
  r.integral_candidate = false;
  for (const auto& c : candidates) r.integral_candidate = r.integral_candidate || c == n_big;

  // Only w = 2 (mod 4) survives: w odd makes w^2 q / 4 non-integral.
  const bool w_even = r.w_mod_4 == 2;
  r.n_forced_even = false;
  if (w_even) {
    // n = -(w/2)^2 q +- 1 with (w/2)^2 q odd.
    const std::int64_t half = w / 2;
    const bool quarter_odd = (half % 2 != 0) && (q % 2 != 0);
    r.n_forced_even = quarter_odd;
  }
  // qw alpha = 0 (mod 4) with w = 2 (mod 4), q odd: alpha even. alpha = 0
  // would force beta even, and then the map misses a generator.
  r.z4_alpha = 2;
  r.z4_requires_n_odd = true;

  if (!w_even) {
    r.reason = L4qReason::odd_linking_number;
  } else if (!r.integral_candidate) {
    r.reason = L4qReason::not_a_return_slope;
  } else {
    r.reason = L4qReason::parity_contradiction;
  }
  // In the parity case n is even by n_forced_even while Z/4 needs n odd.
  r.obstructed = r.reason != L4qReason::parity_contradiction ||
                 (r.n_forced_even && n % 2 == 0 && r.z4_requires_n_odd);

  r.homology = surgered_homology(params);
  r.onto_z4_maps = phi_solutions(params, false).size();
  return r;
}

}  // namespace dehnhom
