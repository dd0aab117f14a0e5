#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace dehnhom {

using Integer = mpz_class;

// Dense matrix of arbitrary-precision integers, row-major. Both dimensions are
// positive; a relation matrix has one row per relator and one column per
// generator.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  [[nodiscard]] const std::vector<Integer>& entries() const { return entries_; }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> entries_;
};

// Text form used on the command line: rows separated by ';', entries by ','.
// Whitespace is ignored. "0,2;-2,4" is the 2x2 matrix [[0,2],[-2,4]].
IntMatrix parse_matrix(std::string_view text);
std::string format_matrix(const IntMatrix& m);

}  // namespace dehnhom
