#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "dehnhom/abelian_group.hpp"
#include "dehnhom/int_matrix.hpp"

namespace dehnhom {

// U * A * V = D with U, V unimodular and D diagonal, non-negative, each
// diagonal entry dividing the next.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
};

// Pivots on the smallest non-zero absolute value of the trailing submatrix,
// ties broken by lowest row then lowest column, so the output is a pure
// function of the input. Runs on checked 64-bit integers and redoes the
// computation with GMP if any intermediate overflows.
SmithDecomposition smith_normal_form(const IntMatrix& a);

// Cokernel of the row-relator matrix: Z^cols modulo the row space of `a`.
AbelianGroup cokernel(const IntMatrix& a);
// Same, for a row-major matrix with 64-bit entries. Avoids GMP entirely unless
// an intermediate value overflows.
AbelianGroup cokernel(std::size_t rows, std::size_t cols, std::span<const std::int64_t> entries);

// Fraction-free (Bareiss) elimination. Throws Error for non-square input.
Integer determinant(const IntMatrix& a);

// Closed form for a non-singular 2x2 relation matrix: the invariant factors
// are gcd(entries) and |det| / gcd(entries). Independent of the Smith code;
// throws Error when `a` is not 2x2 or is singular.
AbelianGroup cokernel_2x2_oracle(const IntMatrix& a);

}  // namespace dehnhom
