#include "dehnhom/int_matrix.hpp"

#include <sstream>

#include "dehnhom/error.hpp"

namespace dehnhom {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw Error("matrix dimensions must be positive");
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw Error("matrix dimensions must be positive");
  if (entries_.size() != rows * cols) throw Error("entry count does not match matrix dimensions");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  if (rows_ == 0 || cols_ == 0) throw Error("matrix dimensions must be positive");
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error("ragged matrix rows");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix product dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

namespace {

Integer parse_entry(std::string_view token) {
  std::string digits;
  for (char c : token) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    digits.push_back(c);
  }
  std::size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
  if (digits.size() == start) throw Error("empty matrix entry in '" + std::string(token) + "'");
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (digits[i] < '0' || digits[i] > '9') {
      throw Error("invalid matrix entry '" + std::string(token) + "'");
    }
  }
  if (digits[0] == '+') digits.erase(0, 1);
  return Integer(digits, 10);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = text.find(sep, pos);
    parts.push_back(text.substr(pos, next == std::string_view::npos ? next : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

}  // namespace

IntMatrix parse_matrix(std::string_view text) {
  std::vector<Integer> entries;
  std::size_t cols = 0;
  auto rows = split(text, ';');
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto cells = split(rows[r], ',');
    if (r == 0) {
      cols = cells.size();
    } else if (cells.size() != cols) {
      throw Error("matrix rows have different lengths");
    }
    for (auto cell : cells) entries.push_back(parse_entry(cell));
  }
  return IntMatrix(rows.size(), cols, std::move(entries));
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out << ';';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << m(i, j).get_str();
    }
  }
  return out.str();
}

}  // namespace dehnhom
