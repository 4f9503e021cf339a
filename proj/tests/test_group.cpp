#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "e6/group.hpp"

using namespace e6;

namespace {

BasicJordan<double> sample(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return to_float(random_jordan(rng));
}

}  // namespace

TEST_CASE("135 labels, unique, each round-trips through its string") {
  const auto& all = enumerate_generators();
  CHECK(all.size() == 135);
  std::set<std::string> names;
  for (const auto& g : all) {
    const std::string s = to_string(g);
    names.insert(s);
    CHECK(parse_label(s) == g);
  }
  CHECK(names.size() == 135);
  int boosts = 0;
  for (const auto& g : all) boosts += g.is_boost();
  CHECK(boosts == 3 * 9);
}

TEST_CASE("label syntax") {
  CHECK(to_string(parse_label("B:t,z")) == "B:t,z:1");
  CHECK(parse_label("R:x,ℓ:2").kind == Kind::Rxq);
  CHECK(parse_label("R:x,ℓ:2").q == Unit::l);
  CHECK(parse_label("S:kℓ:3").type == 3);
  CHECK(parse_label("R:z,jℓ:1").kind == Kind::Rzq);
  CHECK_THROWS_AS(parse_label("B:t,z:4"), IllegalLabel);
  CHECK_THROWS_AS(parse_label("Q:i:1"), IllegalLabel);
  CHECK_THROWS_AS(parse_label("A:x:1"), IllegalLabel);
  CHECK_THROWS_AS(parse_label("B:t,1:1"), IllegalLabel);
}

TEST_CASE("every generator is a one-parameter group") {
  const auto x = sample(1);
  for (const auto& g : enumerate_generators()) {
    INFO(to_string(g));
    CHECK(one_parameter_check(g, 0.4, -1.1, x, 1e-10));
    CHECK(max_abs_diff(apply(g, 0.0, x), x) < 1e-14);
  }
}

TEST_CASE("determinant is preserved") {
  const auto r = det_preservation(7, 3, {0.3, -0.9, 2.0});
  CHECK(r.samples == 135 * 3 * 3);
  CHECK(r.worst < 1e-9);
}

TEST_CASE("boosts stretch, rotations are periodic") {
  const auto x = sample(3);
  // Half-angle matrices: a plane rotation by 2π acts as −1 on the spinor block.
  const auto rot = parse_label("R:z,i:2");
  CHECK(max_abs_diff(apply(rot, 2 * std::numbers::pi, x), x) > 1.0);
  CHECK(max_abs_diff(apply(rot, 4 * std::numbers::pi, x), x) < 1e-12);
  CHECK(max_abs_diff(apply(parse_label("A:k:3"), 2 * std::numbers::pi, x), x) < 1e-12);
  const auto boost = parse_label("B:t,z:1");
  CHECK(max_abs_diff(apply(boost, 2 * std::numbers::pi, x), x) > 1.0);
}

TEST_CASE("the type cycle is a product of two half-turns") {
  const auto x = sample(4);
  const double pi = std::numbers::pi;
  const auto y = apply(parse_label("R:x,z:3"), -pi, apply(parse_label("R:x,z:1"), -pi, x));
  CHECK(max_abs_diff(y, type_cycle(x)) < 1e-12);
  CHECK(max_abs_diff(type_cycle(type_cycle(type_cycle(x))), x) == 0.0);
  const auto T = type_cycle_matrix();
  CHECK(T[0][2] == 1);
  CHECK(T[1][0] == 1);
  CHECK(T[2][1] == 1);
}

TEST_CASE("type-2 rotation in the (x,ℓ) plane factors through type 1") {
  const auto x = sample(5);
  for (double a : {0.7, -1.3}) {
    const auto lhs = apply(parse_label("R:x,ℓ:2"), a, x);
    const auto rhs = apply(parse_label("S:ℓ:1"), -a / 2, apply(parse_label("R:x,ℓ:1"), -a / 2, x));
    CHECK(max_abs_diff(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("derivative jet matches a central difference") {
  std::mt19937_64 rng(6);
  const auto xq = random_jordan(rng);
  const auto x = to_float(xq);
  const auto cq = to_coords(xq);
  BasicCoords<DualScalar> dv;
  for (int k = 0; k < 27; ++k) dv[k] = DualScalar(cq[k], Rational(0));
  const auto xd = from_coords(dv);
  const double h = 1e-5;
  for (const char* s : {"B:t,kℓ:2", "R:x,z:3", "G:j:1", "S:i:2"}) {
    const auto g = parse_label(s);
    const auto jet = to_coords(apply_derivative(g, xd));
    const auto plus = to_coords(apply(g, h, x)), minus = to_coords(apply(g, -h, x));
    for (int k = 0; k < 27; ++k) {
      CHECK(jet[k].v == cq[k]);
      CHECK(jet[k].d.get_d() == doctest::Approx((plus[k] - minus[k]) / (2 * h)).epsilon(1e-6));
    }
  }
}
