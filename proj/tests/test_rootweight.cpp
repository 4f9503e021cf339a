#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "e6/rootweight.hpp"

using namespace e6;

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Highest root: the root of greatest height. Its mark is A·c.
std::vector<int> highest_root_mark(const DynkinDiagram& d) {
  const auto roots = positive_roots(d);
  std::vector<int> best;
  int height = -1;
  for (const auto& r : roots) {
    int h = 0;
    for (int c : r) h += c;
    if (h > height) height = h, best = r;
  }
  const auto A = cartan_matrix(d);
  std::vector<int> mark(d.rank, 0);
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j) mark[i] += A[i][j] * best[j];
  return mark;
}

// Simple reflection s_i on Cartesian coordinates.
std::vector<double> reflect(const std::vector<double>& v, const std::vector<double>& r) {
  const double c = 2 * dot(v, r) / dot(r, r);
  auto out = v;
  for (std::size_t k = 0; k < v.size(); ++k) out[k] -= c * r[k];
  return out;
}

// Equal as finite point sets up to float noise.
bool same_points(const std::vector<std::vector<double>>& a, const std::vector<std::vector<double>>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& p : a) {
    const bool found = std::any_of(b.begin(), b.end(), [&](const std::vector<double>& q) {
      double d = 0;
      for (std::size_t k = 0; k < p.size(); ++k) d = std::max(d, std::abs(p[k] - q[k]));
      return d < 1e-9;
    });
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("B3 Cartan data") {
  const auto d = dynkin("B3");
  CHECK(cartan_matrix(d) == IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
  const auto inv = inverse_cartan(d);
  const std::vector<std::vector<Rational>> expect = {
      {1, 1, make_rational(1, 2)}, {1, 2, 1}, {1, 2, make_rational(3, 2)}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(inv(i, j) == expect[i][j]);
  CHECK(fundamental_weight(d, 2) == std::vector<Rational>{make_rational(1, 2), 1, make_rational(3, 2)});
  // Same Gram matrix as ⟨√2,0,0⟩, ⟨−√½,−√(3/2),0⟩, ⟨0,√(2/3),√(1/3)⟩: the y axis is flipped.
  const auto r = simple_roots(d);
  const std::vector<std::vector<double>> listed = {
      {std::sqrt(2.0), 0, 0}, {-std::sqrt(0.5), -std::sqrt(1.5), 0}, {0, std::sqrt(2.0 / 3), std::sqrt(1.0 / 3)}};
  for (int i = 0; i < 3; ++i) {
    CHECK(r[i][0] == doctest::Approx(listed[i][0]));
    CHECK(r[i][1] == doctest::Approx(-listed[i][1]));
    CHECK(r[i][2] == doctest::Approx(listed[i][2]));
  }
}

TEST_CASE("Cartan matrices of the other diagrams") {
  CHECK(cartan_matrix(dynkin("G2")) == IntMatrix{{2, -1}, {-3, 2}});
  CHECK(cartan_matrix(dynkin("C3")) == IntMatrix{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}});
  CHECK(cartan_matrix(dynkin("F4")) == IntMatrix{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}});
  const auto e6 = cartan_matrix(dynkin("E6"));
  int bonds = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) bonds += e6[i][j] != 0;
  CHECK(bonds == 5);
  CHECK(determinant([&] {
          DenseMatrix m(6, 6);
          for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) m(i, j) = e6[i][j];
          return m;
        }()) == 3);
  CHECK(dynkin("A2+A1").rank == 3);
}

TEST_CASE("malformed diagrams") {
  CHECK_THROWS_AS(dynkin("Q3"), std::invalid_argument);
  DynkinDiagram bad{"bad", 2, {{0, 1, 2, -1}}};
  CHECK_THROWS_AS(cartan_matrix(bad), SingularCartan);
  DynkinDiagram loop{"loop", 3, {{0, 1, 1, -1}, {1, 2, 1, -1}, {2, 0, 1, -1}}};
  // Affine A2: singular.
  CHECK_THROWS_AS(inverse_cartan(loop), SingularCartan);
}

TEST_CASE("B3 vector representation") {
  const auto w = weights_from_highest(dynkin("B3"), {1, 0, 0});
  const std::vector<std::vector<int>> marks = {{1, 0, 0}, {-1, 1, 0}, {0, -1, 2}, {0, 0, 0},
                                               {0, 1, -2}, {1, -1, 0}, {-1, 0, 0}};
  REQUIRE(w.weights.size() == marks.size());
  for (std::size_t k = 0; k < marks.size(); ++k) CHECK(w.weights[k].mark == marks[k]);
  CHECK(w.weights[0].root == RootCoords{1, 1, 1});
  CHECK(w.weights[6].root == RootCoords{-1, -1, -1});
  CHECK(w.edges.size() == 18);
  CHECK(w.find({0, 0, 1}) == 2);
  CHECK(w.find({5, 0, 0}) == -1);
}

TEST_CASE("root counts") {
  const std::map<std::string, std::size_t> count = {{"A2", 6},  {"B2", 8},  {"G2", 12}, {"A3", 12}, {"B3", 18},
                                                    {"C3", 18}, {"D4", 24}, {"F4", 48}, {"E6", 72}, {"E7", 126},
                                                    {"E8", 240}};
  for (const auto& [name, n] : count) {
    INFO(name);
    CHECK(root_system(dynkin(name)).size() == n);
  }
}

TEST_CASE("adjoint from the highest root reproduces the root diagram") {
  for (const char* name : {"A2", "B3", "C3", "G2", "D4", "F4", "E6"}) {
    INFO(name);
    const auto d = dynkin(name);
    const auto adj = weights_from_highest(d, highest_root_mark(d));
    const auto roots = root_diagram(d);
    CHECK(adj.weights.size() == root_system(d).size() + 1);
    std::set<RootCoords> a, b;
    for (const auto& x : adj.weights) a.insert(x.root);
    for (const auto& x : roots.weights) b.insert(x.root);
    CHECK(a == b);
  }
}

TEST_CASE("weight sets are Weyl invariant") {
  for (auto [name, mark] : std::vector<std::pair<const char*, std::vector<int>>>{
           {"B3", {1, 0, 0}}, {"C3", {0, 1, 0}}, {"G2", {1, 0}}, {"F4", {0, 0, 0, 1}}, {"A3", {1, 0, 1}}}) {
    INFO(name);
    const auto d = dynkin(name);
    const auto w = weights_from_highest(d, mark);
    const auto pts = distinct_vertices(points(w));
    const auto simple = simple_roots(d);
    for (const auto& r : simple) {
      PointDiagram refl{d.rank, {}};
      for (const auto& v : pts) refl.vertices.push_back(reflect(v, r));
      CHECK(same_points(distinct_vertices(refl), pts));
    }
  }
}

TEST_CASE("F4 sliced orthogonal to roots 2, 3, 4") {
  const auto d = dynkin("F4");
  const auto w = root_diagram(d);
  const auto s = slice(w, normal_orthogonal_to(d, {1, 2, 3}));
  std::vector<std::size_t> sizes;
  for (const auto& sl : s.slices) sizes.push_back(sl.vertices.size());
  CHECK(sizes == std::vector<std::size_t>{1, 14, 19, 14, 1});
  // Nodes 2..4 are long-short-short: the middle slice is the C3 root diagram plus the origin.
  const auto middle = points(w, s.slices[2]);
  CHECK(embed_check(points(root_diagram(dynkin("C3"))), middle));
  CHECK(embed_check(middle, points(root_diagram(dynkin("C3")))));
  CHECK_FALSE(embed_check(points(root_diagram(dynkin("B3"))), middle));
  std::size_t in_slices = 0;
  for (const auto& sl : s.slices) in_slices += sl.edges.size();
  CHECK(in_slices + s.struts.size() == w.edges.size());
}

TEST_CASE("B3 slices") {
  const auto d = dynkin("B3");
  const auto w = root_diagram(d);
  const auto by_w1 = slice(w, fundamental_weight(d, 0));
  CHECK(by_w1.slices.size() == 3);
  CHECK(by_w1.slices[1].vertices.size() == 9);
  const auto by_w3 = slice(w, fundamental_weight(d, 2));
  CHECK(by_w3.slices[by_w3.slices.size() / 2].vertices.size() == 7);
  CHECK(embed_check(points(root_diagram(dynkin("A2"))), points(w, by_w3.slices[by_w3.slices.size() / 2])));
}

TEST_CASE("collapse agrees with projection along the normal") {
  const auto d = dynkin("B3");
  const auto w = root_diagram(d);
  const auto s = slice(w, fundamental_weight(d, 2));
  const auto flat = collapse(w, s);
  const auto proj = project(points(w), to_cartesian(d, s.normal), {false});
  CHECK(same_points(distinct_vertices(flat), distinct_vertices(proj)));
  CHECK(flat.vertices.size() == proj.vertices.size());
}

TEST_CASE("projections") {
  const auto b3 = dynkin("B3");
  const auto g2 = points(root_diagram(dynkin("G2")));
  const auto proj = project(points(root_diagram(b3)), to_cartesian(b3, fundamental_weight(b3, 2)), {false});
  CHECK(distinct_vertices(proj).size() == 13);
  PointDiagram flat{proj.dim, distinct_vertices(proj)};
  CHECK(embed_check(g2, flat));
  CHECK(embed_check(flat, g2));

  const auto c4 = dynkin("C4");
  const auto c3 = points(root_diagram(dynkin("C3")));
  const auto r1 = to_cartesian(c4, {1, 0, 0, 0});
  const auto along_r1 = project(points(root_diagram(c4)), r1, {false});
  CHECK_FALSE(embed_check(c3, along_r1));
  CHECK(embed_check(c3, along_r1, {1'000'000, true, 1e-7, false}));
  const auto along_w1 = project(points(root_diagram(c4)), to_cartesian(c4, fundamental_weight(c4, 0)), {false});
  CHECK(embed_check(c3, along_w1));

  CHECK(distinct_vertices(project(points(root_diagram(c4)), r1)).size() == 33);
  CHECK_THROWS_AS(project(g2, {0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("embedding checks") {
  const auto a3 = points(root_diagram(dynkin("A3")));
  const auto c3 = points(root_diagram(dynkin("C3")));
  CHECK_FALSE(embed_check(a3, c3));
  CHECK(embed_check(a3, c3, {1'000'000, false, 1e-7, true}));
  for (const char* name : {"F4", "E6"}) {
    const auto p = points(root_diagram(dynkin(name)));
    CHECK(embed_check(p, p));
  }
  // Trivial cases: a lone origin embeds anywhere; a diagram does not fit in a lower-rank one.
  CHECK(embed_check(PointDiagram{3, {{0, 0, 0}}}, c3));
  CHECK_FALSE(embed_check(c3, points(root_diagram(dynkin("A2")))));
  CHECK_THROWS_AS(embed_check(points(root_diagram(dynkin("E6"))), points(root_diagram(dynkin("E6"))), {10}),
                  SearchBudgetExceeded);
}
