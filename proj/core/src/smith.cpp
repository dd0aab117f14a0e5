#include "dehnhom/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include <boost/container/small_vector.hpp>

#include "dehnhom/detail/checked_int.hpp"
#include "dehnhom/error.hpp"

namespace dehnhom {
namespace {

using detail::CheckedInt;

template <typename S>
class Dense {
 public:
  Dense(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, S(0)) {}

  static Dense identity(std::size_t n) {
    Dense m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  S& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
  }
  // row_dst -= factor * row_src
  void sub_row(std::size_t dst, std::size_t src, const S& factor) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(src, j) != S(0)) (*this)(dst, j) = S((*this)(dst, j) - factor * (*this)(src, j));
    }
  }
  // col_dst -= factor * col_src
  void sub_col(std::size_t dst, std::size_t src, const S& factor) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if ((*this)(i, src) != S(0)) (*this)(i, dst) = S((*this)(i, dst) - factor * (*this)(i, src));
    }
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = S(-(*this)(i, j));
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  boost::container::small_vector<S, 9> a_;
};

template <typename S>
S abs_value(const S& x) {
  return x < S(0) ? S(-x) : x;
}

// Reduces `d` in place to Smith form. Row operations are mirrored into `u`
// and column operations into `v` when those are non-null.
template <typename S>
void smith_reduce(Dense<S>& d, Dense<S>* u, Dense<S>* v) {
  const std::size_t m = d.rows();
  const std::size_t n = d.cols();
  const std::size_t steps = std::min(m, n);

  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      std::optional<std::pair<std::size_t, std::size_t>> pivot;
      S best(0);
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == S(0)) continue;
          S mag = abs_value(d(i, j));
          if (!pivot || mag < best) {
            best = mag;
            pivot = {i, j};
          }
        }
      }
      if (!pivot) return;  // trailing block is zero

      d.swap_rows(t, pivot->first);
      if (u) u->swap_rows(t, pivot->first);
      d.swap_cols(t, pivot->second);
      if (v) v->swap_cols(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == S(0)) continue;
        S q = S(d(i, t) / d(t, t));
        d.sub_row(i, t, q);
        if (u) u->sub_row(i, t, q);
        if (d(i, t) != S(0)) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == S(0)) continue;
        S q = S(d(t, j) / d(t, t));
        d.sub_col(j, t, q);
        if (v) v->sub_col(j, t, q);
        if (d(t, j) != S(0)) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block; otherwise pull an
      // offending row into row t and reduce again with a smaller remainder.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < m && !offending; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (S(d(i, j) % d(t, t)) != S(0)) {
            offending = i;
            break;
          }
        }
      }
      if (!offending) break;
      d.sub_row(t, *offending, S(-1));
      if (u) u->sub_row(t, *offending, S(-1));
    }
    if (d(t, t) < S(0)) {
      d.negate_row(t);
      if (u) u->negate_row(t);
    }
  }
}

template <typename S>
Dense<S> to_dense(const IntMatrix& a);

template <>
Dense<Integer> to_dense<Integer>(const IntMatrix& a) {
  Dense<Integer> d(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) d(i, j) = a(i, j);
  return d;
}

template <>
Dense<CheckedInt> to_dense<CheckedInt>(const IntMatrix& a) {
  Dense<CheckedInt> d(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).fits_slong_p()) throw detail::Overflow{};
      d(i, j) = CheckedInt(a(i, j).get_si());
    }
  }
  return d;
}

Integer to_integer(const Integer& x) { return x; }
Integer to_integer(CheckedInt x) { return Integer(static_cast<long>(x.value())); }

template <typename S>
IntMatrix to_int_matrix(const Dense<S>& d) {
  IntMatrix out(d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) out(i, j) = to_integer(d(i, j));
  return out;
}

template <typename S>
SmithDecomposition decompose_with(const IntMatrix& a) {
  auto d = to_dense<S>(a);
  auto u = Dense<S>::identity(a.rows());
  auto v = Dense<S>::identity(a.cols());
  smith_reduce(d, &u, &v);
  return {to_int_matrix(u), to_int_matrix(d), to_int_matrix(v)};
}

template <typename S>
AbelianGroup cokernel_of(Dense<S> d) {
  smith_reduce<S>(d, nullptr, nullptr);
  std::vector<Integer> diagonal;
  const std::size_t steps = std::min(d.rows(), d.cols());
  diagonal.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) diagonal.push_back(to_integer(d(t, t)));
  return AbelianGroup::from_smith_diagonal(std::move(diagonal), d.cols());
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  try {
    return decompose_with<CheckedInt>(a);
  } catch (const detail::Overflow&) {
    return decompose_with<Integer>(a);
  }
}

AbelianGroup cokernel(const IntMatrix& a) {
  try {
    return cokernel_of(to_dense<CheckedInt>(a));
  } catch (const detail::Overflow&) {
    return cokernel_of(to_dense<Integer>(a));
  }
}

AbelianGroup cokernel(std::size_t rows, std::size_t cols, std::span<const std::int64_t> entries) {
  if (rows == 0 || cols == 0) throw Error("matrix dimensions must be positive");
  if (entries.size() != rows * cols) throw Error("entry count does not match matrix dimensions");
  try {
    Dense<CheckedInt> d(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) d(i, j) = CheckedInt(entries[i * cols + j]);
    return cokernel_of(std::move(d));
  } catch (const detail::Overflow&) {
    Dense<Integer> d(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) d(i, j) = Integer(static_cast<long>(entries[i * cols + j]));
    return cokernel_of(std::move(d));
  }
}

Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw Error("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  auto m = to_dense<Integer>(a);
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      m.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

AbelianGroup cokernel_2x2_oracle(const IntMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) throw Error("2x2 oracle needs a 2x2 matrix");
  Integer det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  if (det == 0) throw Error("2x2 oracle is undefined for singular matrices");
  Integer g;
  mpz_gcd(g.get_mpz_t(), a(0, 0).get_mpz_t(), a(0, 1).get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a(1, 0).get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a(1, 1).get_mpz_t());
  Integer second = abs(det) / g;
  std::vector<Integer> factors;
  if (g != 1) factors.push_back(g);
  if (second != 1) factors.push_back(second);
  return AbelianGroup::from_invariant_factors(std::move(factors));
}

}  // namespace dehnhom
