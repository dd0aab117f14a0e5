#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "dehnhom/int_matrix.hpp"

namespace dehnhom {

// A slope n/n' on the boundary torus in meridian-longitude coordinates. Always
// reduced and canonical: denominator > 0, or exactly 1/0 for the meridian.
class Slope {
 public:
  // Canonicalizes the sign (negative denominator flips both entries). Throws
  // Error for 0/0 and for fractions that are not reduced.
  Slope(std::int64_t numerator, std::int64_t denominator);

  static Slope meridian() { return {1, 0}; }

  [[nodiscard]] std::int64_t numerator() const { return numerator_; }
  [[nodiscard]] std::int64_t denominator() const { return denominator_; }
  [[nodiscard]] bool is_meridian() const { return denominator_ == 0; }
  [[nodiscard]] bool is_integral() const { return denominator_ == 1; }

  friend bool operator==(const Slope&, const Slope&) = default;
  friend auto operator<=>(const Slope&, const Slope&) = default;

 private:
  std::int64_t numerator_;
  std::int64_t denominator_;
};

// |a*d - b*c| for slopes a/b and c/d; the meridian 1/0 is at distance |n'|
// from n/n'.
Integer slope_distance(const Slope& s1, const Slope& s2);

// "n/n'" with optional signs on either side.
Slope parse_slope(std::string_view text);
std::string format_slope(const Slope& s);

}  // namespace dehnhom
