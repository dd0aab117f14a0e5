#include "dehnhom/surgery.hpp"

#include <array>
#include <climits>
#include <numeric>

#include "dehnhom/error.hpp"
#include "dehnhom/smith.hpp"

namespace dehnhom {
namespace {

Integer big(std::int64_t v) { return Integer(static_cast<long>(v)); }

}  // namespace

SurgeryParams::SurgeryParams(std::int64_t p_, std::int64_t q_, std::int64_t w_, Slope filling)
    : SurgeryParams(p_, q_, w_, filling.numerator(), filling.denominator()) {}

SurgeryParams::SurgeryParams(std::int64_t p_, std::int64_t q_, std::int64_t w_, std::int64_t n_,
                             std::int64_t nprime_)
    : p(p_), q(q_), w(w_), n(n_), nprime(nprime_) {
  if (p < 2) throw Error("p must be at least 2");
  if (std::gcd(p, q) != 1) throw Error("p and q must be coprime");
  if (w == 0) throw Error("w must be non-zero");
  if (n == 0 && nprime == 0) throw Error("filling coefficients (0, 0) do not define a filling");
  if (n == INT64_MIN || nprime == INT64_MIN) throw Error("filling coefficient out of range");
  if (nprime < 0 || (nprime == 0 && n < 0)) {
    n = -n;
    nprime = -nprime;
  }
}

bool SurgeryParams::is_primitive() const { return std::gcd(n, nprime) == 1; }

Slope SurgeryParams::slope() const { return Slope(n, nprime); }

std::string_view to_string(HomologyClass c) {
  switch (c) {
    case HomologyClass::generator: return "generator";
    case HomologyClass::not_null_homologous: return "not_null_homologous";
    case HomologyClass::null_homologous: return "null_homologous";
    case HomologyClass::unknown: return "unknown";
  }
  return "unknown";
}

HomologyClass parse_homology_class(std::string_view text) {
  for (auto c : {HomologyClass::generator, HomologyClass::not_null_homologous,
                 HomologyClass::null_homologous, HomologyClass::unknown}) {
    if (to_string(c) == text) return c;
  }
  throw Error("unknown homology class '" + std::string(text) + "'");
}

HomologyClass classify_homology(std::int64_t w, std::int64_t p) {
  if (is_generator(w, p)) return HomologyClass::generator;
  if (is_not_null_homologous(w, p)) return HomologyClass::not_null_homologous;
  return HomologyClass::null_homologous;
}

IntMatrix presentation_matrix(const SurgeryParams& params) {
  std::vector<Integer> entries{
      big(params.n), big(params.nprime) * big(params.w),
      -(big(params.q) * big(params.w)), big(params.p)};
  return IntMatrix(2, 2, std::move(entries));
}

AbelianGroup surgered_homology(const SurgeryParams& params) {
  std::int64_t nw = 0;
  std::int64_t qw = 0;
  if (__builtin_mul_overflow(params.nprime, params.w, &nw) ||
      __builtin_mul_overflow(params.q, params.w, &qw) || qw == INT64_MIN) {
    return cokernel(presentation_matrix(params));
  }
  const std::array<std::int64_t, 4> entries{params.n, nw, -qw, params.p};
  return cokernel(2, 2, entries);
}

Integer filling_determinant(const SurgeryParams& params) {
  return big(params.n) * big(params.p) +
         big(params.nprime) * big(params.w) * big(params.w) * big(params.q);
}

bool is_generator(std::int64_t w, std::int64_t p) { return std::gcd(w, p) == 1; }

bool is_not_null_homologous(std::int64_t w, std::int64_t p) {
  if (p < 2) throw Error("p must be at least 2");
  return w % p != 0;
}

std::vector<Integer> integral_return_slopes(std::int64_t p, std::int64_t q, std::int64_t w) {
  if (p < 2) throw Error("p must be at least 2");
  if (std::gcd(p, q) != 1) throw Error("p and q must be coprime");
  if (w == 0) throw Error("w must be non-zero");
  Integer shift = big(w) * big(w) * big(q);
  if (!mpz_divisible_p(shift.get_mpz_t(), big(p).get_mpz_t())) return {};
  Integer centre = -shift / big(p);
  return {centre - 1, centre + 1};
}

}  // namespace dehnhom
