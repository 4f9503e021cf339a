#include "e6/rational.hpp"

#include <stdexcept>

namespace e6 {

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(std::string_view s) {
  std::string str(s);
  if (str.empty()) throw std::invalid_argument("empty rational");
  if (auto dot = str.find('.'); dot != std::string::npos) {
    if (str.find('/') != std::string::npos) throw std::invalid_argument("bad rational: " + str);
    std::string digits = str.substr(0, dot) + str.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+") throw std::invalid_argument("bad rational: " + str);
    if (digits[0] == '+') digits.erase(0, 1);
    mpz_class num;
    if (num.set_str(digits, 10) != 0) throw std::invalid_argument("bad rational: " + str);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, str.size() - dot - 1);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (str[0] == '+') str.erase(0, 1);
  Rational r;
  if (r.set_str(str, 10) != 0) throw std::invalid_argument("bad rational: " + str);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + str);
  r.canonicalize();
  return r;
}

}  // namespace e6
