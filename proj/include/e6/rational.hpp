#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace e6 {

using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

// Canonical form: "p" for integers, "p/q" otherwise, always reduced.
std::string to_string(const Rational& x);

// Accepts "p", "p/q" and plain decimals such as "-0.25". Throws std::invalid_argument.
Rational parse_rational(std::string_view s);

inline double to_double(const Rational& x) { return x.get_d(); }

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace e6
