#include <doctest.h>

#include <random>

#include "e6/octonion.hpp"

using namespace e6;

namespace {

// Independent oracle: Cayley–Dickson doubling of the quaternions with ℓ as the
// new unit, (a + bℓ)(c + dℓ) = (ac − d̄b) + (da + bc̄)ℓ. The ℓ-half is stored as
// (b₀, b₁, b₂, b₃) ↦ b₀ℓ + b₁ iℓ + b₂ jℓ + b₃ kℓ.
using Quat = std::array<Rational, 4>;

Quat qmul(const Quat& x, const Quat& y) {
  return {x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
          x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
          x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
          x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]};
}
Quat qconj(Quat x) {
  for (int k = 1; k < 4; ++k) x[k] = -x[k];
  return x;
}
Quat qadd(const Quat& x, const Quat& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]}; }
Quat qsub(const Quat& x, const Quat& y) { return {x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]}; }

Octonion cd_product(const Octonion& x, const Octonion& y) {
  auto split = [](const Octonion& o) {
    return std::pair<Quat, Quat>{{o[Unit::one], o[Unit::i], o[Unit::j], o[Unit::k]},
                                 {o[Unit::l], o[Unit::il], o[Unit::jl], o[Unit::kl]}};
  };
  auto [a, b] = split(x);
  auto [c, d] = split(y);
  Quat lo = qsub(qmul(a, c), qmul(qconj(d), b));
  Quat hi = qadd(qmul(d, a), qmul(b, qconj(c)));
  Octonion z;
  z[Unit::one] = lo[0];
  z[Unit::i] = lo[1];
  z[Unit::j] = lo[2];
  z[Unit::k] = lo[3];
  z[Unit::l] = hi[0];
  z[Unit::il] = hi[1];
  z[Unit::jl] = hi[2];
  z[Unit::kl] = hi[3];
  return z;
}

Octonion random_octonion(std::mt19937_64& rng) {
  Octonion x;
  for (int k = 0; k < 8; ++k) x[k] = make_rational(static_cast<long>(rng() % 21) - 10, 1 + rng() % 4);
  return x;
}

}  // namespace

TEST_CASE("unit products agree with the Cayley-Dickson oracle") {
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const auto x = Octonion::unit(unit_at(a)), y = Octonion::unit(unit_at(b));
      CHECK(x * y == cd_product(x, y));
    }
}

TEST_CASE("listed triples multiply as stated") {
  const std::array<std::array<Unit, 3>, 7> triples = {{{Unit::i, Unit::j, Unit::k},
                                                       {Unit::i, Unit::l, Unit::il},
                                                       {Unit::j, Unit::l, Unit::jl},
                                                       {Unit::k, Unit::l, Unit::kl},
                                                       {Unit::kl, Unit::jl, Unit::i},
                                                       {Unit::il, Unit::kl, Unit::j},
                                                       {Unit::jl, Unit::il, Unit::k}}};
  for (const auto& [x, y, z] : triples) {
    CHECK(Octonion::unit(x) * Octonion::unit(y) == Octonion::unit(z));
    CHECK(Octonion::unit(y) * Octonion::unit(x) == -Octonion::unit(z));
    CHECK(Octonion::unit(y) * Octonion::unit(z) == Octonion::unit(x));
  }
  CHECK(unit_product(Unit::i, Unit::i).sign == -1);
  CHECK(unit_product(Unit::i, Unit::i).index == 0);
}

TEST_CASE("random products agree with the oracle and satisfy the division-algebra identities") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 200; ++n) {
    const auto x = random_octonion(rng), y = random_octonion(rng), z = random_octonion(rng);
    CHECK(x * y == cd_product(x, y));
    CHECK(norm2(x * y) == norm2(x) * norm2(y));
    CHECK(conj(x * y) == conj(y) * conj(x));
    // alternativity and Moufang
    CHECK(associator(x, x, y).is_zero());
    CHECK(associator(y, x, x).is_zero());
    CHECK(((x * y) * x) == (x * (y * x)));
    CHECK((x * (y * (x * z))) == (((x * y) * x) * z));
    if (!x.is_zero()) CHECK(x * inverse(x) == Octonion::real(1));
  }
}

TEST_CASE("octonions are not associative") {
  const auto i = Octonion::unit(Unit::i), j = Octonion::unit(Unit::j), l = Octonion::unit(Unit::l);
  CHECK(!associator(i, j, l).is_zero());
  CHECK((i * j) * l == -(i * (j * l)));
}

TEST_CASE("quaternionic triples: three pairs per axis, each multiplying to the axis") {
  const auto& all = quaternionic_triples();
  REQUIRE(all.size() == 7);
  for (const auto& t : all) {
    REQUIRE(t.pairs.size() == 3);
    for (const auto& [p, q] : t.pairs) CHECK(Octonion::unit(p) * Octonion::unit(q) == Octonion::unit(t.axis));
  }
  // ℓ: (iℓ)i = ℓ, (jℓ)j = ℓ, (kℓ)k = ℓ
  const auto& tl = quaternionic_triple(Unit::l);
  CHECK(tl.pairs[0].first == Unit::il);
  CHECK(tl.pairs[0].second == Unit::i);
  CHECK_THROWS_AS(quaternionic_triple(Unit::one), std::invalid_argument);
}

TEST_CASE("names and parsing") {
  for (int k = 0; k < 8; ++k) CHECK(parse_unit(unit_name(unit_at(k))) == unit_at(k));
  CHECK(parse_unit("kl") == Unit::kl);
  CHECK(!parse_unit("m").has_value());
  CHECK_THROWS_AS(inverse(Octonion{}), DivisionByZero);
  Octonion x;
  x[Unit::one] = make_rational(1, 2);
  x[Unit::l] = -3;
  CHECK(to_string(x) == "1/2 - 3ℓ");
}
