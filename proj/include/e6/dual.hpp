#pragma once

#include "e6/rational.hpp"

namespace e6 {

// First-order jet a + b·ε with ε² = 0. With T = Rational it carries exact
// derivatives at α = 0 through the nested conjugations.
template <class T>
struct Dual {
  T v{};
  T d{};

  Dual() = default;
  Dual(int x) : v(x), d(0) {}
  Dual(T value, T deriv) : v(std::move(value)), d(std::move(deriv)) {}

  Dual& operator+=(const Dual& o) {
    v += o.v;
    d += o.d;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    v -= o.v;
    d -= o.d;
    return *this;
  }
  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator-(const Dual& a) { return Dual(T(-a.v), T(-a.d)); }
  friend Dual operator*(const Dual& a, const Dual& b) {
    return Dual(T(a.v * b.v), T(a.v * b.d + a.d * b.v));
  }
  friend bool operator==(const Dual& a, const Dual& b) { return a.v == b.v && a.d == b.d; }
};

template <class T>
bool is_zero(const Dual<T>& x) {
  return is_zero(x.v) && is_zero(x.d);
}

using DualScalar = Dual<Rational>;

}  // namespace e6
