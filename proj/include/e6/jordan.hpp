#pragma once

#include <array>

#include "e6/octonion.hpp"

namespace e6 {

// Hermitian 3x3 octonionic matrix
//
//   [ p   ā   c ]
//   [ a   m   b̄ ]
//   [ c̄   b   n ]
//
// In the type-1 vector block p = t+z and m = t−z; t and z are derived.
template <class T>
struct BasicJordan {
  T p{}, m{}, n{};
  BasicOctonion<T> a, b, c;

  T t() const { return (p + m) / T(2); }
  T z() const { return (p - m) / T(2); }

  static BasicJordan identity() {
    BasicJordan x;
    x.p = T(1);
    x.m = T(1);
    x.n = T(1);
    return x;
  }
  static BasicJordan diagonal(T p, T m, T n) {
    BasicJordan x;
    x.p = std::move(p);
    x.m = std::move(m);
    x.n = std::move(n);
    return x;
  }

  friend bool operator==(const BasicJordan& x, const BasicJordan& y) {
    return x.p == y.p && x.m == y.m && x.n == y.n && x.a == y.a && x.b == y.b && x.c == y.c;
  }
  friend BasicJordan operator+(BasicJordan x, const BasicJordan& y) {
    x.p += y.p;
    x.m += y.m;
    x.n += y.n;
    x.a += y.a;
    x.b += y.b;
    x.c += y.c;
    return x;
  }
  friend BasicJordan operator-(BasicJordan x, const BasicJordan& y) {
    x.p -= y.p;
    x.m -= y.m;
    x.n -= y.n;
    x.a -= y.a;
    x.b -= y.b;
    x.c -= y.c;
    return x;
  }
  friend BasicJordan operator*(const T& s, const BasicJordan& x) {
    BasicJordan r;
    r.p = s * x.p;
    r.m = s * x.m;
    r.n = s * x.n;
    r.a = s * x.a;
    r.b = s * x.b;
    r.c = s * x.c;
    return r;
  }
};

using JordanElement = BasicJordan<Rational>;

template <class T>
using BasicCoords = std::array<T, 27>;
using Coord27 = BasicCoords<Rational>;

// Coordinate layout: p, m, n, then the 8 coefficients of a, b, c.
inline constexpr int kCoordP = 0, kCoordM = 1, kCoordN = 2, kCoordA = 3, kCoordB = 11, kCoordC = 19;

template <class T>
BasicCoords<T> to_coords(const BasicJordan<T>& x) {
  BasicCoords<T> v;
  v[0] = x.p;
  v[1] = x.m;
  v[2] = x.n;
  for (int k = 0; k < 8; ++k) {
    v[kCoordA + k] = x.a[k];
    v[kCoordB + k] = x.b[k];
    v[kCoordC + k] = x.c[k];
  }
  return v;
}

template <class T>
BasicJordan<T> from_coords(const BasicCoords<T>& v) {
  BasicJordan<T> x;
  x.p = v[0];
  x.m = v[1];
  x.n = v[2];
  for (int k = 0; k < 8; ++k) {
    x.a[k] = v[kCoordA + k];
    x.b[k] = v[kCoordB + k];
    x.c[k] = v[kCoordC + k];
  }
  return x;
}

template <class T, class U>
BasicJordan<U> convert(const BasicJordan<T>& x, U (*f)(const T&)) {
  BasicCoords<T> v = to_coords(x);
  BasicCoords<U> w;
  for (int k = 0; k < 27; ++k) w[k] = f(v[k]);
  return from_coords(w);
}

inline BasicJordan<double> to_float(const JordanElement& x) {
  return convert<Rational, double>(x, [](const Rational& r) { return r.get_d(); });
}

namespace detail {

// Full (non-hermitian) 3x3 octonionic matrix, only used to form products
// before they are symmetrized back into a Jordan element.
template <class T>
using OctMatrix3 = std::array<std::array<BasicOctonion<T>, 3>, 3>;

template <class T>
OctMatrix3<T> to_matrix(const BasicJordan<T>& x) {
  OctMatrix3<T> M;
  M[0][0] = BasicOctonion<T>::real(x.p);
  M[1][1] = BasicOctonion<T>::real(x.m);
  M[2][2] = BasicOctonion<T>::real(x.n);
  M[1][0] = x.a;
  M[0][1] = conj(x.a);
  M[2][1] = x.b;
  M[1][2] = conj(x.b);
  M[0][2] = x.c;
  M[2][0] = conj(x.c);
  return M;
}

// Reads the lower/upper entries that carry a, b, c; assumes M is hermitian.
template <class T>
BasicJordan<T> from_matrix(const OctMatrix3<T>& M) {
  BasicJordan<T> x;
  x.p = M[0][0][0];
  x.m = M[1][1][0];
  x.n = M[2][2][0];
  x.a = M[1][0];
  x.b = M[2][1];
  x.c = M[0][2];
  return x;
}

template <class T>
OctMatrix3<T> multiply(const OctMatrix3<T>& A, const OctMatrix3<T>& B) {
  OctMatrix3<T> C;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) C[i][j] += A[i][k] * B[k][j];
  return C;
}

}  // namespace detail

template <class T>
BasicJordan<T> jordan_product(const BasicJordan<T>& x, const BasicJordan<T>& y) {
  auto X = detail::to_matrix(x);
  auto Y = detail::to_matrix(y);
  auto XY = detail::multiply(X, Y);
  auto YX = detail::multiply(Y, X);
  const T half = T(1) / T(2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) XY[i][j] = half * (XY[i][j] + YX[i][j]);
  return detail::from_matrix(XY);
}

template <class T>
BasicJordan<T> jordan_square(const BasicJordan<T>& x) {
  return jordan_product(x, x);
}

template <class T>
T trace(const BasicJordan<T>& x) {
  return x.p + x.m + x.n;
}

template <class T>
T sigma(const BasicJordan<T>& x) {
  T tr = trace(x);
  return (tr * tr - trace(jordan_square(x))) / T(2);
}

// pmn − (p|b|² + m|c|² + n|a|²) + 2 Re(ā b̄ c̄)
template <class T>
T det(const BasicJordan<T>& x) {
  T r = x.p * x.m * x.n - (x.p * norm2(x.b) + x.m * norm2(x.c) + x.n * norm2(x.a));
  T abc = ((conj(x.a) * conj(x.b)) * conj(x.c))[0];
  return r + T(2) * abc;
}

// (1/3)(tr X³ − (3/2) tr X² tr X + ½ (tr X)³) with Jordan powers.
template <class T>
T det_trace_form(const BasicJordan<T>& x) {
  auto x2 = jordan_square(x);
  auto x3 = jordan_product(x2, x);
  T t1 = trace(x), t2 = trace(x2), t3 = trace(x3);
  return (t3 - T(3) * t2 * t1 / T(2) + t1 * t1 * t1 / T(2)) / T(3);
}

// 2x2 hermitian block [[t+z, q̄], [q, t−z]].
struct Vector2 {
  Rational tz_plus, tz_minus;
  Octonion q;
  friend bool operator==(const Vector2&, const Vector2&) = default;
};

struct Spinor {
  Octonion upper, lower;
};

struct DualSpinor {
  Octonion left, right;
};

inline DualSpinor dagger(const Spinor& s) { return {conj(s.upper), conj(s.lower)}; }

inline Rational det(const Vector2& x) { return x.tz_plus * x.tz_minus - norm2(x.q); }

// tr(A∘B) − tr A tr B
inline Rational lorentz_dot(const Vector2& A, const Vector2& B) {
  Rational r = -(A.tz_plus * B.tz_minus) - A.tz_minus * B.tz_plus;
  return r + 2 * inner(A.q, B.q);
}

// θθ†
inline Vector2 spinor_square(const Spinor& s) {
  return {norm2(s.upper), norm2(s.lower), s.lower * conj(s.upper)};
}

// Type-1 split of χ into the vector block X and the spinor θ = (c, b̄).
inline Vector2 vector_block(const JordanElement& x) { return {x.p, x.m, x.a}; }
inline Spinor spinor_block(const JordanElement& x) { return {x.c, conj(x.b)}; }

}  // namespace e6
