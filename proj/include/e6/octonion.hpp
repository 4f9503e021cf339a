#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "e6/rational.hpp"

namespace e6 {

// Coordinate order used everywhere: 1, i, j, k, kℓ, jℓ, iℓ, ℓ.
enum class Unit : std::uint8_t { one, i, j, k, kl, jl, il, l };

inline constexpr int kUnitCount = 8;
inline constexpr std::array<Unit, 7> kImaginaryUnits = {Unit::i,  Unit::j,  Unit::k, Unit::kl,
                                                        Unit::jl, Unit::il, Unit::l};

constexpr int index(Unit u) { return static_cast<int>(u); }
constexpr Unit unit_at(int k) { return static_cast<Unit>(k); }

std::string_view unit_name(Unit u);
// Accepts "kl" as well as "kℓ".
std::optional<Unit> parse_unit(std::string_view s);

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

namespace detail {

struct UnitProduct {
  int sign;
  int index;
};

// Directed triples (x, y, z) with xy = z; cyclic rotations are positive and
// reversed products negative.
inline constexpr std::array<std::array<int, 3>, 7> kTriples = {
    {{1, 2, 3}, {1, 7, 6}, {2, 7, 5}, {3, 7, 4}, {4, 5, 1}, {6, 4, 2}, {5, 6, 3}}};

constexpr std::array<std::array<UnitProduct, 8>, 8> make_table() {
  std::array<std::array<UnitProduct, 8>, 8> t{};
  for (int a = 0; a < 8; ++a) {
    t[0][a] = {1, a};
    t[a][0] = {1, a};
  }
  for (int a = 1; a < 8; ++a) t[a][a] = {-1, 0};
  for (const auto& tr : kTriples) {
    for (int r = 0; r < 3; ++r) {
      int x = tr[r], y = tr[(r + 1) % 3], z = tr[(r + 2) % 3];
      t[x][y] = {1, z};
      t[y][x] = {-1, z};
    }
  }
  return t;
}

inline constexpr auto kProducts = make_table();

}  // namespace detail

constexpr detail::UnitProduct unit_product(Unit a, Unit b) {
  return detail::kProducts[index(a)][index(b)];
}

template <class T>
class BasicOctonion {
 public:
  BasicOctonion() = default;
  explicit BasicOctonion(std::array<T, 8> coeffs) : c_(std::move(coeffs)) {}

  static BasicOctonion real(T x) {
    BasicOctonion o;
    o.c_[0] = std::move(x);
    return o;
  }
  static BasicOctonion unit(Unit u, T coeff = T(1)) {
    BasicOctonion o;
    o.c_[index(u)] = std::move(coeff);
    return o;
  }

  T& operator[](int k) { return c_[k]; }
  const T& operator[](int k) const { return c_[k]; }
  T& operator[](Unit u) { return c_[index(u)]; }
  const T& operator[](Unit u) const { return c_[index(u)]; }
  const std::array<T, 8>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!e6::is_zero(x)) return false;
    return true;
  }

  BasicOctonion& operator+=(const BasicOctonion& o) {
    for (int k = 0; k < 8; ++k) c_[k] += o.c_[k];
    return *this;
  }
  BasicOctonion& operator-=(const BasicOctonion& o) {
    for (int k = 0; k < 8; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend BasicOctonion operator+(BasicOctonion a, const BasicOctonion& b) { return a += b; }
  friend BasicOctonion operator-(BasicOctonion a, const BasicOctonion& b) { return a -= b; }
  friend BasicOctonion operator-(const BasicOctonion& a) {
    BasicOctonion z;
    for (int k = 0; k < 8; ++k) z.c_[k] = -a.c_[k];
    return z;
  }
  friend BasicOctonion operator*(const T& s, const BasicOctonion& a) {
    BasicOctonion z;
    for (int k = 0; k < 8; ++k) z.c_[k] = s * a.c_[k];
    return z;
  }
  friend BasicOctonion operator*(const BasicOctonion& a, const T& s) { return s * a; }

  friend BasicOctonion operator*(const BasicOctonion& a, const BasicOctonion& b) {
    BasicOctonion z;
    for (int p = 0; p < 8; ++p) {
      if (e6::is_zero(a.c_[p])) continue;
      for (int q = 0; q < 8; ++q) {
        if (e6::is_zero(b.c_[q])) continue;
        const auto [s, r] = detail::kProducts[p][q];
        T t = a.c_[p] * b.c_[q];
        if (s > 0)
          z.c_[r] += t;
        else
          z.c_[r] -= t;
      }
    }
    return z;
  }

  friend bool operator==(const BasicOctonion& a, const BasicOctonion& b) { return a.c_ == b.c_; }

 private:
  std::array<T, 8> c_{};
};

using Octonion = BasicOctonion<Rational>;

template <class T>
BasicOctonion<T> conj(const BasicOctonion<T>& a) {
  BasicOctonion<T> z = a;
  for (int k = 1; k < 8; ++k) z[k] = -a[k];
  return z;
}

template <class T>
BasicOctonion<T> re(const BasicOctonion<T>& a) {
  return BasicOctonion<T>::real(a[0]);
}

template <class T>
BasicOctonion<T> im(const BasicOctonion<T>& a) {
  BasicOctonion<T> z = a;
  z[0] = T(0);
  return z;
}

// Euclidean inner product Re(ā b).
template <class T>
T inner(const BasicOctonion<T>& a, const BasicOctonion<T>& b) {
  T s(0);
  for (int k = 0; k < 8; ++k) s += a[k] * b[k];
  return s;
}

template <class T>
T norm2(const BasicOctonion<T>& a) {
  return inner(a, a);
}

Octonion inverse(const Octonion& a);

template <class T>
BasicOctonion<T> associator(const BasicOctonion<T>& a, const BasicOctonion<T>& b,
                            const BasicOctonion<T>& c) {
  return (a * b) * c - a * (b * c);
}

struct QuaternionTriple {
  Unit axis;
  std::array<std::pair<Unit, Unit>, 3> pairs;
};

// Ordered pairs multiplying to each imaginary axis; the pair order fixes the
// nesting order of the transverse A/G/S compositions.
const std::array<QuaternionTriple, 7>& quaternionic_triples();
const QuaternionTriple& quaternionic_triple(Unit axis);

std::string to_string(const Octonion& a);

}  // namespace e6
