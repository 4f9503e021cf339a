#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "e6/dual.hpp"
#include "e6/jordan.hpp"
#include "e6/octonion.hpp"

namespace e6 {

// Btz, Btx, Btq: boosts in the (t,z), (t,x), (t,q) planes.
// Rxz, Rzq, Rxq: rotations. A, G, S: transverse rotation classes about an axis.
enum class Kind : std::uint8_t { Btz, Btx, Btq, Rxz, Rzq, Rxq, A, G, S };
enum class Category : std::uint8_t { Boost, Rotation, Transverse };

struct GeneratorLabel {
  Kind kind = Kind::Btz;
  Unit q = Unit::one;  // plane unit for Btq/Rzq/Rxq, axis for A/G/S, unused otherwise
  int type = 1;

  Category category() const;
  bool is_boost() const { return category() == Category::Boost; }
  bool has_unit() const;

  auto operator<=>(const GeneratorLabel&) const = default;
};

struct IllegalLabel : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// "B:t,z:1", "B:t,kℓ:2", "R:x,z:3", "R:z,i:1", "R:x,ℓ:2", "A:i:1", "S:ℓ:3".
// The type suffix may be omitted on input and defaults to 1.
std::string to_string(const GeneratorLabel& g);
GeneratorLabel parse_label(std::string_view s);
void validate(const GeneratorLabel& g);

// All 135 labels: for each type, Btz, Btx, Btq×7, Rxz, Rzq×7, Rxq×7, A×7, G×7, S×7.
const std::vector<GeneratorLabel>& enumerate_generators();

// A matrix entry is Σ sign·fn(kα)·unit; an empty sum is a structural zero.
enum class Fn : std::uint8_t { constant, cos, sin, cosh, sinh, exp };

struct ParamTerm {
  Unit unit;
  int sign;
  Fn fn;
  Rational k;
};

struct ParamEntry {
  std::vector<ParamTerm> terms;
  bool is_zero() const { return terms.empty(); }
};

struct ParamMatrix {
  std::array<std::array<ParamEntry, 3>, 3> e;
};

// Matrices in application order: the first element is innermost.
std::vector<ParamMatrix> build_sequence(const GeneratorLabel& g);

// Scalar providers evaluating fn(kα).
struct FloatEval {
  using Scalar = double;
  double alpha;
  double operator()(Fn fn, const Rational& k) const;
};

// First-order jet at α = 0.
struct DualEval {
  using Scalar = DualScalar;
  DualScalar operator()(Fn fn, const Rational& k) const;
};

template <class Eval>
struct EvaluatedMatrix {
  detail::OctMatrix3<typename Eval::Scalar> M;
  std::array<std::array<bool, 3>, 3> nonzero{};
};

template <class Eval>
EvaluatedMatrix<Eval> evaluate(const ParamMatrix& pm, const Eval& eval) {
  using S = typename Eval::Scalar;
  EvaluatedMatrix<Eval> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const auto& entry = pm.e[i][j];
      out.nonzero[i][j] = !entry.is_zero();
      for (const auto& t : entry.terms) {
        S v = eval(t.fn, t.k);
        if (t.sign < 0) v = -v;
        out.M[i][j][index(t.unit)] += v;
      }
    }
  return out;
}

// χ → (M χ) M†, entrywise Σ_l (Σ_k M_ik χ_kl) conj(M_jl).
template <class Eval>
BasicJordan<typename Eval::Scalar> conjugate(const EvaluatedMatrix<Eval>& em,
                                             const BasicJordan<typename Eval::Scalar>& x) {
  using S = typename Eval::Scalar;
  const auto X = detail::to_matrix(x);
  detail::OctMatrix3<S> MX;
  for (int i = 0; i < 3; ++i)
    for (int l = 0; l < 3; ++l)
      for (int k = 0; k < 3; ++k)
        if (em.nonzero[i][k]) MX[i][l] += em.M[i][k] * X[k][l];
  auto entry = [&](int i, int j) {
    BasicOctonion<S> s;
    for (int l = 0; l < 3; ++l)
      if (em.nonzero[j][l]) s += MX[i][l] * conj(em.M[j][l]);
    return s;
  };
  BasicJordan<S> r;
  r.p = entry(0, 0)[0];
  r.m = entry(1, 1)[0];
  r.n = entry(2, 2)[0];
  r.a = entry(1, 0);
  r.b = entry(2, 1);
  r.c = entry(0, 2);
  return r;
}

template <class Eval>
BasicJordan<typename Eval::Scalar> apply_sequence(const std::vector<ParamMatrix>& seq, const Eval& eval,
                                                  BasicJordan<typename Eval::Scalar> x) {
  for (const auto& pm : seq) x = conjugate(evaluate(pm, eval), x);
  return x;
}

BasicJordan<double> apply(const GeneratorLabel& g, double alpha, const BasicJordan<double>& x);
BasicJordan<DualScalar> apply_derivative(const GeneratorLabel& g, const BasicJordan<DualScalar>& x);

// 𝒯 χ 𝒯† with 𝒯 = [[0,0,1],[1,0,0],[0,1,0]]: (p,m,n,a,b,c) → (n,p,m,c,a,b).
template <class T>
BasicJordan<T> type_cycle(const BasicJordan<T>& x) {
  BasicJordan<T> r;
  r.p = x.n;
  r.m = x.p;
  r.n = x.m;
  r.a = x.c;
  r.b = x.a;
  r.c = x.b;
  return r;
}

std::array<std::array<int, 3>, 3> type_cycle_matrix();

bool one_parameter_check(const GeneratorLabel& g, double alpha, double beta, const BasicJordan<double>& x,
                         double tol);

double max_abs_diff(const BasicJordan<double>& x, const BasicJordan<double>& y);

// χ with entries k/4, k uniform in [−8, 8].
JordanElement random_jordan(std::mt19937_64& rng);

struct DetPreservation {
  double worst = 0;
  GeneratorLabel worst_label;
  double worst_alpha = 0;
  std::size_t samples = 0;
};

// |det(g·χ) − det χ| over all 135 labels, `count` random χ per label and each α.
DetPreservation det_preservation(std::uint64_t seed, int count, const std::vector<double>& alphas);

}  // namespace e6
