#pragma once

#include <compare>
#include <string>

namespace povmkit {

/// Half-integer angular momentum value stored as twice itself, so j = 1/2
/// has twice = 1. Magnitudes are non-negative; projections may be negative.
struct HalfInt {
  int twice = 0;

  constexpr HalfInt() = default;
  constexpr HalfInt(int whole) : twice(2 * whole) {}  // NOLINT: implicit by design

  static constexpr HalfInt from_twice(int t) {
    HalfInt h;
    h.twice = t;
    return h;
  }

  constexpr bool is_integer() const { return twice % 2 == 0; }
  constexpr double value() const { return twice / 2.0; }

  friend constexpr auto operator<=>(const HalfInt&, const HalfInt&) = default;
};

constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt::from_twice(a.twice + b.twice); }
constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt::from_twice(a.twice - b.twice); }
constexpr HalfInt operator-(HalfInt a) { return HalfInt::from_twice(-a.twice); }

/// "2", "3/2", "-1/2"
std::string to_string(HalfInt h);

/// Accepts "p" or "p/q" with q in {1,2}; throws std::invalid_argument otherwise.
HalfInt parse_half_int(const std::string& text);

}  // namespace povmkit
