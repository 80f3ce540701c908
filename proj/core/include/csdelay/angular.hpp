#pragma once

#include <compare>

namespace csdelay {

/// Non-negative angular-momentum quantum number j in {0, 1/2, 1, 3/2, ...},
/// stored exactly as the integer 2j.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  /// Throws InvalidArgument when `twice` is negative.
  static HalfInt from_twice(int twice);
  /// Throws InvalidArgument unless `value` is a non-negative multiple of 1/2.
  static HalfInt from_double(double value);

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

namespace literals {
// 7_hj == 7/2, 2_hj == 1.
HalfInt operator""_hj(unsigned long long twice);
}  // namespace literals

/// True when (a, b, c) satisfy the triangle rule and a + b + c is an integer.
bool triangle(HalfInt a, HalfInt b, HalfInt c);

/// Wigner 6-j symbol {j1 j2 j3; j4 j5 j6} from the Racah single-sum formula.
/// The sum and the triangle coefficients are accumulated as exact rationals and
/// only converted to floating point at the end. Returns 0 when any of the four
/// triads violates the triangle rule.
double wigner6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6);

/// Convenience overload; each argument must be a non-negative half-integer.
double wigner6j(double j1, double j2, double j3, double j4, double j5, double j6);

}  // namespace csdelay
