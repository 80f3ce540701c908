#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace csdelay::fit {

/// Forward-mode dual number carrying N partial derivatives.
template <std::size_t N>
struct Dual {
  double v = 0.0;
  std::array<double, N> d{};

  Dual() = default;
  Dual(double value) : v(value) {}  // NOLINT: constants promote implicitly

  static Dual variable(double value, std::size_t index) {
    Dual x(value);
    x.d[index] = 1.0;
    return x;
  }

  Dual& operator+=(const Dual& o) {
    v += o.v;
    for (std::size_t i = 0; i < N; ++i) d[i] += o.d[i];
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    v -= o.v;
    for (std::size_t i = 0; i < N; ++i) d[i] -= o.d[i];
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    for (std::size_t i = 0; i < N; ++i) d[i] = d[i] * o.v + v * o.d[i];
    v *= o.v;
    return *this;
  }
  Dual& operator/=(const Dual& o) {
    const double inv = 1.0 / o.v;
    for (std::size_t i = 0; i < N; ++i) d[i] = (d[i] - v * inv * o.d[i]) * inv;
    v *= inv;
    return *this;
  }
};

template <std::size_t N> Dual<N> operator+(Dual<N> a, const Dual<N>& b) { return a += b; }
template <std::size_t N> Dual<N> operator-(Dual<N> a, const Dual<N>& b) { return a -= b; }
template <std::size_t N> Dual<N> operator*(Dual<N> a, const Dual<N>& b) { return a *= b; }
template <std::size_t N> Dual<N> operator/(Dual<N> a, const Dual<N>& b) { return a /= b; }
template <std::size_t N> Dual<N> operator+(Dual<N> a, double b) { a.v += b; return a; }
template <std::size_t N> Dual<N> operator+(double b, Dual<N> a) { a.v += b; return a; }
template <std::size_t N> Dual<N> operator-(Dual<N> a, double b) { a.v -= b; return a; }
template <std::size_t N> Dual<N> operator-(double b, const Dual<N>& a) { return Dual<N>(b) - a; }
template <std::size_t N> Dual<N> operator*(Dual<N> a, double b) {
  a.v *= b;
  for (auto& x : a.d) x *= b;
  return a;
}
template <std::size_t N> Dual<N> operator*(double b, Dual<N> a) { return a * b; }
template <std::size_t N> Dual<N> operator/(Dual<N> a, double b) { return a * (1.0 / b); }
template <std::size_t N> Dual<N> operator/(double b, const Dual<N>& a) { return Dual<N>(b) / a; }
template <std::size_t N> Dual<N> operator-(Dual<N> a) { return a * -1.0; }

template <std::size_t N> bool operator<(const Dual<N>& a, double b) { return a.v < b; }
template <std::size_t N> bool operator>(const Dual<N>& a, double b) { return a.v > b; }

/// g(a.v) with derivative dg applied through the chain rule.
template <std::size_t N>
Dual<N> chain(const Dual<N>& a, double g, double dg) {
  Dual<N> r(g);
  for (std::size_t i = 0; i < N; ++i) r.d[i] = dg * a.d[i];
  return r;
}

template <std::size_t N> Dual<N> exp(const Dual<N>& a) {
  const double e = std::exp(a.v);
  return chain(a, e, e);
}
template <std::size_t N> Dual<N> log(const Dual<N>& a) { return chain(a, std::log(a.v), 1.0 / a.v); }
template <std::size_t N> Dual<N> sqrt(const Dual<N>& a) {
  const double s = std::sqrt(a.v);
  return chain(a, s, 0.5 / s);
}
template <std::size_t N> Dual<N> abs(const Dual<N>& a) { return a.v < 0.0 ? -a : a; }

inline double value_of(double x) { return x; }
template <std::size_t N> double value_of(const Dual<N>& x) { return x.v; }

}  // namespace csdelay::fit
