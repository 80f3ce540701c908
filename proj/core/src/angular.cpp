#include "csdelay/angular.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "csdelay/error.hpp"

namespace csdelay {

namespace mp = boost::multiprecision;

HalfInt HalfInt::from_twice(int twice) {
  if (twice < 0) {
    throw InvalidArgument("angular momentum must be non-negative, got 2j = " + std::to_string(twice));
  }
  return HalfInt(twice);
}

HalfInt HalfInt::from_double(double value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw InvalidArgument("angular momentum must be a finite non-negative half-integer");
  }
  const double twice = 2.0 * value;
  const double rounded = std::round(twice);
  if (std::abs(twice - rounded) > 1e-9 || rounded > 1e6) {
    throw InvalidArgument("angular momentum " + std::to_string(value) + " is not a half-integer");
  }
  return HalfInt(static_cast<int>(rounded));
}

namespace literals {
HalfInt operator""_hj(unsigned long long twice) { return HalfInt::from_twice(static_cast<int>(twice)); }
}  // namespace literals

bool triangle(HalfInt a, HalfInt b, HalfInt c) {
  const int ta = a.twice(), tb = b.twice(), tc = c.twice();
  if ((ta + tb + tc) % 2 != 0) return false;
  return tc >= std::abs(ta - tb) && tc <= ta + tb;
}

namespace {

mp::cpp_int factorial(int n) {
  mp::cpp_int f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Delta(abc)^2 = (a+b-c)! (a-b+c)! (-a+b+c)! / (a+b+c+1)!, arguments as 2j.
mp::cpp_rational triangle_coefficient_squared(int ta, int tb, int tc) {
  const mp::cpp_int num =
      factorial((ta + tb - tc) / 2) * factorial((ta - tb + tc) / 2) * factorial((-ta + tb + tc) / 2);
  return mp::cpp_rational(num, factorial((ta + tb + tc) / 2 + 1));
}

}  // namespace

double wigner6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6) {
  if (!triangle(j1, j2, j3) || !triangle(j1, j5, j6) || !triangle(j4, j2, j6) || !triangle(j4, j5, j3)) {
    return 0.0;
  }
  const int a = j1.twice(), b = j2.twice(), c = j3.twice();
  const int d = j4.twice(), e = j5.twice(), f = j6.twice();

  // Triad sums (alpha) and column-pair sums (beta), all integers.
  const int alpha[4] = {(a + b + c) / 2, (a + e + f) / 2, (d + b + f) / 2, (d + e + c) / 2};
  const int beta[3] = {(a + b + d + e) / 2, (b + c + e + f) / 2, (c + a + f + d) / 2};

  const int t_min = *std::max_element(std::begin(alpha), std::end(alpha));
  const int t_max = *std::min_element(std::begin(beta), std::end(beta));

  mp::cpp_rational sum = 0;
  for (int t = t_min; t <= t_max; ++t) {
    mp::cpp_int den = 1;
    for (int al : alpha) den *= factorial(t - al);
    for (int be : beta) den *= factorial(be - t);
    mp::cpp_rational term(factorial(t + 1), den);
    if (t % 2 != 0) term = -term;
    sum += term;
  }

  const mp::cpp_rational delta2 = triangle_coefficient_squared(a, b, c) * triangle_coefficient_squared(a, e, f) *
                                  triangle_coefficient_squared(d, b, f) * triangle_coefficient_squared(d, e, c);

  // sum * sqrt(delta2) == sign(sum) * sqrt(sum^2 * delta2), exact up to the final root.
  const mp::cpp_rational squared = sum * sum * delta2;
  const double magnitude = std::sqrt(squared.convert_to<double>());
  return sum < 0 ? -magnitude : magnitude;
}

double wigner6j(double j1, double j2, double j3, double j4, double j5, double j6) {
  return wigner6j(HalfInt::from_double(j1), HalfInt::from_double(j2), HalfInt::from_double(j3),
                  HalfInt::from_double(j4), HalfInt::from_double(j5), HalfInt::from_double(j6));
}

}  // namespace csdelay
