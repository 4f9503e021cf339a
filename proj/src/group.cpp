#include "e6/group.hpp"

#include <cmath>
#include <string>

namespace e6 {

namespace {

constexpr std::string_view kind_prefix(Kind k) {
  switch (k) {
    case Kind::Btz:
    case Kind::Btx:
    case Kind::Btq: return "B";
    case Kind::Rxz:
    case Kind::Rzq:
    case Kind::Rxq: return "R";
    case Kind::A: return "A";
    case Kind::G: return "G";
    case Kind::S: return "S";
  }
  return "?";
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

using Entry2 = std::array<std::array<ParamEntry, 2>, 2>;

ParamEntry term(Unit u, int sign, Fn fn, const Rational& k) { return {{ParamTerm{u, sign, fn, k}}}; }
ParamEntry scalar(int sign, Fn fn, const Rational& k) { return term(Unit::one, sign, fn, k); }
ParamEntry one() { return scalar(1, Fn::constant, 0); }

ParamMatrix embed(const Entry2& m, int type) {
  ParamMatrix out;
  switch (type) {
    case 1:
      out.e[0][0] = m[0][0];
      out.e[0][1] = m[0][1];
      out.e[1][0] = m[1][0];
      out.e[1][1] = m[1][1];
      out.e[2][2] = one();
      break;
    case 2:
      out.e[0][0] = one();
      out.e[1][1] = m[0][0];
      out.e[1][2] = m[0][1];
      out.e[2][1] = m[1][0];
      out.e[2][2] = m[1][1];
      break;
    case 3:
      out.e[0][0] = m[1][1];
      out.e[0][2] = m[1][0];
      out.e[1][1] = one();
      out.e[2][0] = m[0][1];
      out.e[2][2] = m[0][0];
      break;
    default: throw IllegalLabel("type must be 1, 2 or 3");
  }
  return out;
}

// The x–z rotation and the transverse flips are evaluated at −α. With this
// sense 𝒯 = R³_xz(−π)∘R¹_xz(−π) and R²_xq = −½R¹_xq − ½S¹_q at tangent level.
constexpr int kReversedSense = -1;

Entry2 mat(ParamEntry a, ParamEntry b, ParamEntry c, ParamEntry d) {
  Entry2 m;
  m[0][0] = std::move(a);
  m[0][1] = std::move(b);
  m[1][0] = std::move(c);
  m[1][1] = std::move(d);
  return m;
}

// 2x2 core at angle multiplier `mult`; every entry uses half angles.
Entry2 core(Kind kind, Unit q, const Rational& mult) {
  const Rational k = mult / 2;
  switch (kind) {
    case Kind::Btz: return mat(scalar(1, Fn::exp, k), {}, {}, scalar(1, Fn::exp, Rational(-k)));
    case Kind::Btx:
      return mat(scalar(1, Fn::cosh, k), scalar(1, Fn::sinh, k), scalar(1, Fn::sinh, k), scalar(1, Fn::cosh, k));
    case Kind::Btq:
      return mat(scalar(1, Fn::cosh, k), term(q, 1, Fn::sinh, k), term(q, -1, Fn::sinh, k),
                 scalar(1, Fn::cosh, k));
    case Kind::Rxq: {
      ParamEntry up = scalar(1, Fn::cos, k), down = scalar(1, Fn::cos, k);
      up.terms.push_back({q, 1, Fn::sin, k});
      down.terms.push_back({q, -1, Fn::sin, k});
      return mat(up, {}, {}, down);
    }
    case Kind::Rxz: {
      const Rational r = kReversedSense * k;
      return mat(scalar(1, Fn::cos, r), scalar(-1, Fn::sin, r), scalar(1, Fn::sin, r), scalar(1, Fn::cos, r));
    }
    case Kind::Rzq:
      return mat(scalar(1, Fn::cos, k), term(q, 1, Fn::sin, k), term(q, 1, Fn::sin, k), scalar(1, Fn::cos, k));
    default: break;
  }
  throw IllegalLabel("no 2x2 core for transverse class");
}

// Flip pair R_{p,q}: M1 = −p·I, then M2 = (cos p + sin q)·I.
std::array<Entry2, 2> flip_pair(Unit p, Unit q, const Rational& mult) {
  const Rational r = kReversedSense * mult / 2;
  ParamEntry m1 = term(p, -1, Fn::constant, 0);
  ParamEntry m2 = term(p, 1, Fn::cos, r);
  m2.terms.push_back({q, 1, Fn::sin, r});
  return {mat(m1, {}, {}, m1), mat(m2, {}, {}, m2)};
}

std::array<int, 3> class_multipliers(Kind k) {
  switch (k) {
    case Kind::A: return {1, -1, 0};
    case Kind::G: return {1, 1, -2};
    case Kind::S: return {1, 1, 1};
    default: return {0, 0, 0};
  }
}

}  // namespace

Category GeneratorLabel::category() const {
  switch (kind) {
    case Kind::Btz:
    case Kind::Btx:
    case Kind::Btq: return Category::Boost;
    case Kind::Rxz:
    case Kind::Rzq:
    case Kind::Rxq: return Category::Rotation;
    default: return Category::Transverse;
  }
}

bool GeneratorLabel::has_unit() const { return !(kind == Kind::Btz || kind == Kind::Btx || kind == Kind::Rxz); }

void validate(const GeneratorLabel& g) {
  if (g.type < 1 || g.type > 3) throw IllegalLabel("type must be 1, 2 or 3");
  if (g.has_unit() == (g.q == Unit::one)) throw IllegalLabel("plane unit does not match generator kind");
}

std::string to_string(const GeneratorLabel& g) {
  std::string s(kind_prefix(g.kind));
  s += ':';
  switch (g.kind) {
    case Kind::Btz: s += "t,z"; break;
    case Kind::Btx: s += "t,x"; break;
    case Kind::Btq: s += "t,"; s += unit_name(g.q); break;
    case Kind::Rxz: s += "x,z"; break;
    case Kind::Rzq: s += "z,"; s += unit_name(g.q); break;
    case Kind::Rxq: s += "x,"; s += unit_name(g.q); break;
    default: s += unit_name(g.q); break;
  }
  s += ':';
  s += std::to_string(g.type);
  return s;
}

GeneratorLabel parse_label(std::string_view s) {
  auto parts = split(s, ':');
  if (parts.size() < 2 || parts.size() > 3) throw IllegalLabel("malformed label: " + std::string(s));
  GeneratorLabel g;
  if (parts.size() == 3) {
    if (parts[2] != "1" && parts[2] != "2" && parts[2] != "3")
      throw IllegalLabel("bad type in label: " + std::string(s));
    g.type = parts[2][0] - '0';
  }
  const auto head = parts[0];
  const auto plane = split(parts[1], ',');
  auto need_unit = [&](std::string_view u) {
    auto parsed = parse_unit(u);
    if (!parsed || *parsed == Unit::one) throw IllegalLabel("bad unit in label: " + std::string(s));
    return *parsed;
  };
  if (head == "B") {
    if (plane.size() != 2 || plane[0] != "t") throw IllegalLabel("boost plane must be t,_: " + std::string(s));
    if (plane[1] == "z") g.kind = Kind::Btz;
    else if (plane[1] == "x") g.kind = Kind::Btx;
    else {
      g.kind = Kind::Btq;
      g.q = need_unit(plane[1]);
    }
  } else if (head == "R") {
    if (plane.size() != 2) throw IllegalLabel("rotation plane must have two axes: " + std::string(s));
    if (plane[0] == "x" && plane[1] == "z") g.kind = Kind::Rxz;
    else if (plane[0] == "z") {
      g.kind = Kind::Rzq;
      g.q = need_unit(plane[1]);
    } else if (plane[0] == "x") {
      g.kind = Kind::Rxq;
      g.q = need_unit(plane[1]);
    } else {
      throw IllegalLabel("unknown rotation plane: " + std::string(s));
    }
  } else if (head == "A" || head == "G" || head == "S") {
    if (plane.size() != 1) throw IllegalLabel("transverse class takes one axis: " + std::string(s));
    g.kind = head == "A" ? Kind::A : head == "G" ? Kind::G : Kind::S;
    g.q = need_unit(plane[0]);
  } else {
    throw IllegalLabel("unknown generator: " + std::string(s));
  }
  return g;
}

const std::vector<GeneratorLabel>& enumerate_generators() {
  static const std::vector<GeneratorLabel> all = [] {
    std::vector<GeneratorLabel> v;
    for (int t = 1; t <= 3; ++t) {
      v.push_back({Kind::Btz, Unit::one, t});
      v.push_back({Kind::Btx, Unit::one, t});
      for (Unit q : kImaginaryUnits) v.push_back({Kind::Btq, q, t});
      v.push_back({Kind::Rxz, Unit::one, t});
      for (Unit q : kImaginaryUnits) v.push_back({Kind::Rzq, q, t});
      for (Unit q : kImaginaryUnits) v.push_back({Kind::Rxq, q, t});
      for (Kind k : {Kind::A, Kind::G, Kind::S})
        for (Unit q : kImaginaryUnits) v.push_back({k, q, t});
    }
    return v;
  }();
  return all;
}

std::vector<ParamMatrix> build_sequence(const GeneratorLabel& g) {
  validate(g);
  std::vector<Entry2> cores;
  if (g.category() == Category::Transverse) {
    const auto mults = class_multipliers(g.kind);
    const auto& triple = quaternionic_triple(g.q);
    for (int r = 0; r < 3; ++r) {
      if (mults[r] == 0) continue;
      auto pair = flip_pair(triple.pairs[r].first, triple.pairs[r].second, mults[r]);
      cores.insert(cores.end(), pair.begin(), pair.end());
    }
  } else {
    cores.push_back(core(g.kind, g.q, 1));
  }
  std::vector<ParamMatrix> seq;
  seq.reserve(cores.size());
  for (const auto& c : cores) seq.push_back(embed(c, g.type));
  return seq;
}

double FloatEval::operator()(Fn fn, const Rational& k) const {
  const double x = k.get_d() * alpha;
  switch (fn) {
    case Fn::constant: return 1.0;
    case Fn::cos: return std::cos(x);
    case Fn::sin: return std::sin(x);
    case Fn::cosh: return std::cosh(x);
    case Fn::sinh: return std::sinh(x);
    case Fn::exp: return std::exp(x);
  }
  return 0.0;
}

DualScalar DualEval::operator()(Fn fn, const Rational& k) const {
  switch (fn) {
    case Fn::constant: return {1, 0};
    case Fn::cos:
    case Fn::cosh: return {1, 0};
    case Fn::sin:
    case Fn::sinh: return {0, k};
    case Fn::exp: return {1, k};
  }
  return {};
}

BasicJordan<double> apply(const GeneratorLabel& g, double alpha, const BasicJordan<double>& x) {
  return apply_sequence(build_sequence(g), FloatEval{alpha}, x);
}

BasicJordan<DualScalar> apply_derivative(const GeneratorLabel& g, const BasicJordan<DualScalar>& x) {
  return apply_sequence(build_sequence(g), DualEval{}, x);
}

std::array<std::array<int, 3>, 3> type_cycle_matrix() { return {{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}}; }

double max_abs_diff(const BasicJordan<double>& x, const BasicJordan<double>& y) {
  auto u = to_coords(x), v = to_coords(y);
  double m = 0;
  for (int k = 0; k < 27; ++k) m = std::max(m, std::abs(u[k] - v[k]));
  return m;
}

bool one_parameter_check(const GeneratorLabel& g, double alpha, double beta, const BasicJordan<double>& x,
                         double tol) {
  auto lhs = apply(g, alpha, apply(g, beta, x));
  auto rhs = apply(g, alpha + beta, x);
  return max_abs_diff(lhs, rhs) <= tol;
}

JordanElement random_jordan(std::mt19937_64& rng) {
  auto r = [&] { return make_rational(static_cast<long>(rng() % 17) - 8, 4); };
  JordanElement x;
  x.p = r();
  x.m = r();
  x.n = r();
  for (int k = 0; k < 8; ++k) {
    x.a[k] = r();
    x.b[k] = r();
    x.c[k] = r();
  }
  return x;
}

DetPreservation det_preservation(std::uint64_t seed, int count, const std::vector<double>& alphas) {
  std::mt19937_64 rng(seed);
  std::vector<BasicJordan<double>> xs;
  std::vector<double> dets;
  for (int s = 0; s < count; ++s) {
    const JordanElement x = random_jordan(rng);
    xs.push_back(to_float(x));
    dets.push_back(det(x).get_d());
  }
  DetPreservation out;
  for (const auto& g : enumerate_generators())
    for (double alpha : alphas)
      for (std::size_t s = 0; s < xs.size(); ++s) {
        const double err = std::abs(det(apply(g, alpha, xs[s])) - dets[s]);
        ++out.samples;
        if (err > out.worst || out.samples == 1) {
          out.worst = err;
          out.worst_label = g;
          out.worst_alpha = alpha;
        }
      }
  return out;
}

}  // namespace e6
