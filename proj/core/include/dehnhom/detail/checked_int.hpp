#pragma once

#include <cstdint>
#include <limits>

namespace dehnhom::detail {

struct Overflow {};

// 64-bit integer whose arithmetic throws Overflow instead of wrapping. Used as
// the fast scalar for exact algorithms; callers retry with mpz_class when it
// throws.
class CheckedInt {
 public:
  constexpr CheckedInt() = default;
  constexpr CheckedInt(std::int64_t v) : v_(v) {}  // NOLINT(implicit)

  [[nodiscard]] constexpr std::int64_t value() const { return v_; }

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  // Truncating, like the built-in operator and mpz_tdiv_q.
  friend CheckedInt operator/(CheckedInt a, CheckedInt b) {
    if (a.v_ == std::numeric_limits<std::int64_t>::min() && b.v_ == -1) throw Overflow{};
    return a.v_ / b.v_;
  }
  friend CheckedInt operator%(CheckedInt a, CheckedInt b) {
    if (b.v_ == -1) return 0;
    return a.v_ % b.v_;
  }
  CheckedInt operator-() const {
    if (v_ == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
    return -v_;
  }
  CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
  CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }

  friend constexpr bool operator==(CheckedInt a, CheckedInt b) = default;
  friend constexpr auto operator<=>(CheckedInt a, CheckedInt b) = default;

 private:
  std::int64_t v_ = 0;
};

inline CheckedInt abs(CheckedInt a) { return a < CheckedInt{0} ? -a : a; }

}  // namespace dehnhom::detail
