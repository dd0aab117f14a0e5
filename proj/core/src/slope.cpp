#include "dehnhom/slope.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "dehnhom/error.hpp"

namespace dehnhom {

Slope::Slope(std::int64_t numerator, std::int64_t denominator)
    : numerator_(numerator), denominator_(denominator) {
  if (numerator == 0 && denominator == 0) throw Error("0/0 is not a slope");
  constexpr auto min = std::numeric_limits<std::int64_t>::min();
  if (numerator == min || denominator == min) throw Error("slope entry out of range");
  if (std::gcd(numerator, denominator) != 1) throw Error("slope not reduced");
  if (denominator_ < 0 || (denominator_ == 0 && numerator_ < 0)) {
    numerator_ = -numerator_;
    denominator_ = -denominator_;
  }
}

Integer slope_distance(const Slope& s1, const Slope& s2) {
  Integer ad = Integer(static_cast<long>(s1.numerator())) * static_cast<long>(s2.denominator());
  Integer bc = Integer(static_cast<long>(s1.denominator())) * static_cast<long>(s2.numerator());
  return abs(ad - bc);
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error("invalid slope '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Slope parse_slope(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) throw Error("invalid slope '" + std::string(text) + "'");
  return Slope(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

std::string format_slope(const Slope& s) {
  return std::to_string(s.numerator()) + "/" + std::to_string(s.denominator());
}

}  // namespace dehnhom
