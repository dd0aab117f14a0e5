#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "dehnhom/abelian_group.hpp"
#include "dehnhom/int_matrix.hpp"
#include "dehnhom/slope.hpp"

namespace dehnhom {

// Numerical data of a filling of a knot K in a homology lens space M with
// H1(M) = Z/p. M is (-p/q)-surgery on a knot K0 in a homology sphere, w is the
// linking number of K with K0, and (n, n') are the filling coefficients: the
// filling adds the relation n[m] + n'w[mu] = 0.
//
// A genuine slope has gcd(n, n') = 1. Non-primitive pairs such as (0, 5) are
// kept because the relation, and therefore every statement about H1, makes
// sense for them; is_primitive() tells the two apart. The pair is stored with
// n' >= 0, and n > 0 when n' = 0.
struct SurgeryParams {
  std::int64_t p;
  std::int64_t q;
  std::int64_t w;
  std::int64_t n;
  std::int64_t nprime;

  // Throws Error unless p >= 2, gcd(p, q) = 1, w != 0 and (n, n') != (0, 0).
  // q is kept as given.
  SurgeryParams(std::int64_t p, std::int64_t q, std::int64_t w, Slope filling);
  SurgeryParams(std::int64_t p, std::int64_t q, std::int64_t w, std::int64_t n,
                std::int64_t nprime);

  [[nodiscard]] bool is_primitive() const;
  // The slope n/n'; throws Error for a non-primitive pair.
  [[nodiscard]] Slope slope() const;
};

enum class HomologyClass { generator, not_null_homologous, null_homologous, unknown };

std::string_view to_string(HomologyClass c);
HomologyClass parse_homology_class(std::string_view text);
// The strongest class determined by w: generator if gcd(w, p) = 1, otherwise
// not_null_homologous if p does not divide w, otherwise null_homologous.
HomologyClass classify_homology(std::int64_t w, std::int64_t p);

// Relation matrix over generators ([m], [mu]):
//   [[ n,   n'w ],
//    [-qw,  p   ]]
IntMatrix presentation_matrix(const SurgeryParams& params);

// H1 of the filled manifold, the cokernel of presentation_matrix.
AbelianGroup surgered_homology(const SurgeryParams& params);

// n*p + n'*w^2*q, the determinant of presentation_matrix.
Integer filling_determinant(const SurgeryParams& params);

bool is_generator(std::int64_t w, std::int64_t p);
bool is_not_null_homologous(std::int64_t w, std::int64_t p);

// All integers n with |n*p + w^2*q| = p, in increasing order. Empty unless p
// divides w^2 (q is a unit mod p); otherwise the two values -w^2 q / p +- 1.
std::vector<Integer> integral_return_slopes(std::int64_t p, std::int64_t q, std::int64_t w);

}  // namespace dehnhom
