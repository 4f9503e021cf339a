#include "e6/octonion.hpp"

#include <sstream>

namespace e6 {

namespace {

constexpr std::array<std::string_view, 8> kNames = {"1", "i", "j", "k", "kℓ", "jℓ", "iℓ", "ℓ"};
constexpr std::array<std::string_view, 8> kAsciiNames = {"1", "i", "j", "k", "kl", "jl", "il", "l"};

}  // namespace

std::string_view unit_name(Unit u) { return kNames[index(u)]; }

std::optional<Unit> parse_unit(std::string_view s) {
  for (int k = 0; k < 8; ++k)
    if (s == kNames[k] || s == kAsciiNames[k]) return unit_at(k);
  return std::nullopt;
}

Octonion inverse(const Octonion& a) {
  Rational n = norm2(a);
  if (is_zero(n)) throw DivisionByZero("inverse of the zero octonion");
  Rational s = 1 / n;
  return s * conj(a);
}

const std::array<QuaternionTriple, 7>& quaternionic_triples() {
  using U = Unit;
  static const std::array<QuaternionTriple, 7> table = {{
      {U::i, {{{U::j, U::k}, {U::kl, U::jl}, {U::l, U::il}}}},
      {U::j, {{{U::k, U::i}, {U::il, U::kl}, {U::l, U::jl}}}},
      {U::k, {{{U::i, U::j}, {U::jl, U::il}, {U::l, U::kl}}}},
      {U::kl, {{{U::jl, U::i}, {U::j, U::il}, {U::k, U::l}}}},
      {U::jl, {{{U::i, U::kl}, {U::il, U::k}, {U::j, U::l}}}},
      {U::il, {{{U::kl, U::j}, {U::k, U::jl}, {U::i, U::l}}}},
      {U::l, {{{U::il, U::i}, {U::jl, U::j}, {U::kl, U::k}}}},
  }};
  return table;
}

const QuaternionTriple& quaternionic_triple(Unit axis) {
  if (axis == Unit::one) throw std::invalid_argument("quaternionic triple needs an imaginary axis");
  return quaternionic_triples()[index(axis) - 1];
}

std::string to_string(const Octonion& a) {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 8; ++k) {
    if (is_zero(a[k])) continue;
    Rational c = a[k];
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    if (sgn(c) < 0) c = -c;
    if (k == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str();
      os << kNames[k];
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace e6
