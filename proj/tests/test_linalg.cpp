#include <doctest.h>

#include <random>

#include "e6/linalg.hpp"

using namespace e6;

namespace {

DenseMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  DenseMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  return m;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      for (int k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

}  // namespace

TEST_CASE("sparse vector helpers") {
  SparseVec x = {{0, 1}, {3, make_rational(1, 2)}};
  SparseVec y = {{3, -1}, {5, 2}};
  const SparseVec z = axpy(x, make_rational(1, 2), y);
  CHECK(z == SparseVec{{0, 1}, {5, 1}});
  CHECK(coefficient(z, 3) == 0);
  CHECK(scaled(x, 0).empty());
  CHECK(to_dense(from_dense({0, 2, 0, -1}), 4) == std::vector<Rational>{0, 2, 0, -1});
  CHECK(unit_vector(2, 7) == SparseVec{{2, 7}});
}

TEST_CASE("rank, nullspace, determinant, inverse on hand examples") {
  const auto a = from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  CHECK(rank(a) == 2);
  CHECK(determinant(a) == 0);
  CHECK_FALSE(inverse(a).has_value());
  const auto ns = nullspace(a);
  REQUIRE(ns.size() == 1);
  // (1, −2, 1) up to scale
  CHECK(ns[0][0] * -2 == ns[0][1]);
  CHECK(ns[0][0] == ns[0][2]);

  const auto b = from_rows({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  CHECK(determinant(b) == 18);
  const auto inv = inverse(b);
  REQUIRE(inv.has_value());
  CHECK((*inv)(0, 0) == make_rational(11, 18));
  CHECK((*inv)(1, 2) == make_rational(-2, 18));
  DenseMatrix id(3, 3);
  for (int i = 0; i < 3; ++i) id(i, i) = 1;
  CHECK(multiply(b, *inv) == id);
}

TEST_CASE("signature of small forms") {
  CHECK(signature(from_rows({{0, 1}, {1, 0}})) == Signature{1, 1, 0});
  CHECK(signature(from_rows({{1, 0, 0}, {0, 0, 0}, {0, 0, -3}})) == Signature{1, 1, 1});
  CHECK(signature(from_rows({{2, 1}, {1, 2}})) == Signature{0, 2, 0});
}

TEST_CASE("signature is invariant under congruence") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> k(-3, 3);
  const auto d = from_rows({{1, 0, 0, 0, 0}, {0, -1, 0, 0, 0}, {0, 0, -2, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 5}});
  for (int n = 0; n < 20; ++n) {
    DenseMatrix p(5, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) p(i, j) = k(rng);
    if (determinant(p) == 0) continue;
    const auto c = multiply(multiply(transpose(p), d), p);
    CHECK(c.is_symmetric());
    CHECK(signature(c) == Signature{2, 2, 1});
  }
}

TEST_CASE("restrict_form") {
  const auto form = from_rows({{1, 0, 0}, {0, -1, 0}, {0, 0, 1}});
  const auto r = restrict_form(form, {{{0, 1}, {1, 1}}, {{2, 1}}});
  CHECK(r(0, 0) == 0);
  CHECK(r(1, 1) == 1);
  CHECK(r(0, 1) == 0);
}

TEST_CASE("reducer certificates reconstruct the inserted vector") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> k(-4, 4);
  std::vector<SparseVec> gens;
  Reducer red;
  for (int n = 0; n < 4; ++n) {
    std::vector<Rational> v(6);
    for (auto& q : v) q = k(rng);
    gens.push_back(from_dense(v));
    CHECK_FALSE(red.insert(gens.back()).has_value());
  }
  CHECK(red.rank() == 4);
  // 2g₀ − g₂ + ½ g₃ is dependent.
  const SparseVec dep = axpy(axpy(scaled(gens[0], 2), -1, gens[2]), make_rational(1, 2), gens[3]);
  const auto cert = red.insert(dep);
  REQUIRE(cert.has_value());
  SparseVec rebuilt;
  for (const auto& [g, c] : *cert) rebuilt = axpy(rebuilt, c, gens[g]);
  CHECK(rebuilt == dep);
  CHECK(red.rank() == 4);
  CHECK(red.generators() == 5);
  CHECK(red.contains(gens[1]));
  int outside = 0;
  for (int i = 0; i < 6; ++i) outside += !red.express(unit_vector(i)).has_value();
  CHECK(outside >= 2);
}
