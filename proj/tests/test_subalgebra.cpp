#include <doctest.h>

#include <algorithm>

#include "e6/subalgebra.hpp"

using namespace e6;

namespace {

const StructureTable& table() {
  static const StructureTable t = structure_constants(preferred_basis());
  return t;
}

const SubalgebraContext& ctx() {
  static const SubalgebraContext c(table());
  return c;
}

int count(const std::vector<bool>& v) { return static_cast<int>(std::count(v.begin(), v.end(), true)); }

bool contains(const std::vector<std::string>& names, const std::string& n) {
  return std::find(names.begin(), names.end(), n) != names.end();
}

}  // namespace

TEST_CASE("basis flags split the algebra") {
  const auto& f = ctx().flags;
  CHECK(count(f.is_boost) == 26);
  CHECK(count(f.is_type1) == 46);
  CHECK(count(f.is_H) == 38);
}

TEST_CASE("involution kinds parse") {
  CHECK(parse_involution_kind("23") == InvolutionKind::two_three);
  CHECK(parse_involution_kind("H⊥") == InvolutionKind::h_perp);
  CHECK(parse_involution_kind("hp") == InvolutionKind::h_perp);
  CHECK(to_string(InvolutionKind::t) == "t");
  CHECK_THROWS_AS(parse_involution_kind("x"), std::invalid_argument);
  CHECK(Involution{}.name() == "id");
}

TEST_CASE("compositions multiply signs and stay automorphisms") {
  using K = InvolutionKind;
  const auto a = make_involution(table(), ctx().flags, {K::two_three});
  const auto b = make_involution(table(), ctx().flags, {K::h_perp});
  const auto ab = make_involution(table(), ctx().flags, {K::two_three, K::h_perp});
  for (int i = 0; i < 78; ++i) {
    CHECK(ab.sign[i] == a.sign[i] * b.sign[i]);
    CHECK(std::abs(ab.sign[i]) == 1);
  }
  CHECK(is_bracket_compatible(table(), ab.sign));
  CHECK(preserves_form(ctx().killing, ab.sign));
  const auto t = make_involution(table(), ctx().flags, {K::t});
  for (int i = 0; i < 78; ++i) CHECK((t.sign[i] < 0) == bool(ctx().flags.is_boost[i]));
}

TEST_CASE("flipping a single rotation is not an automorphism") {
  std::vector<int> sign(78, 1);
  sign[preferred_basis().at("R:x,z:1")] = -1;
  int i = -1, j = -1;
  CHECK_FALSE(is_bracket_compatible(table(), sign, &i, &j));
  CHECK(i >= 0);
  CHECK(j >= 0);
}

TEST_CASE("known involutions") {
  std::vector<int> all(78);
  for (int i = 0; i < 78; ++i) all[i] = i;
  for (const auto& row : known_involutions()) {
    const auto phi = make_involution(table(), ctx().flags, row.factors);
    INFO(phi.name());
    CHECK(image_signature(ctx().flags, phi.sign, all) == row.image);
    const auto fixed = fixed_subalgebra(ctx(), phi);
    CHECK(fixed.dim == row.fixed_dim);
    CHECK(fixed.signature == row.fixed);
    CHECK_FALSE(fixed.names.empty());
    CHECK(compact_preimage(ctx(), phi).signature == row.preimage);
  }
}

TEST_CASE("fixed subalgebras have the expected ranks") {
  using K = InvolutionKind;
  const auto rank_of = [](std::vector<K> f) {
    return fixed_subalgebra(ctx(), make_involution(table(), ctx().flags, f)).rank;
  };
  CHECK(rank_of({}) == 6);
  CHECK(rank_of({K::t}) == 4);
  CHECK(rank_of({K::two_three}) == 6);
  CHECK(rank_of({K::h_perp}) == 6);
  CHECK(rank_of({K::h_perp, K::t}) == 4);
}

TEST_CASE("refinement grid and assemblies") {
  using K = InvolutionKind;
  const auto first = make_involution(table(), ctx().flags, {K::two_three});
  const auto second = make_involution(table(), ctx().flags, {K::h_perp});
  const auto grid = refine_subspaces(ctx(), first, second);
  const std::vector<std::pair<std::string, int>> sizes = {{"R1H", 16}, {"B1H", 6},   {"R23Hp", 8}, {"B23Hp", 8},
                                                          {"R23H", 8}, {"B23H", 8},  {"R1Hp", 20}, {"B1Hp", 4}};
  REQUIRE(grid.cells.size() == sizes.size());
  int total = 0;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    CHECK(grid.cells[k].name == sizes[k].first);
    CHECK(grid.cells[k].indices.size() == std::size_t(sizes[k].second));
    total += sizes[k].second;
  }
  CHECK(total == 78);
  CHECK_THROWS_AS(grid.cell("R9"), std::out_of_range);

  for (const auto& row : known_assemblies()) {
    const auto r = assemble(ctx(), grid, row.cells);
    INFO(r.description);
    CHECK(r.signature == row.signature);
    CHECK(r.twisted == row.twisted);
  }
  CHECK_THROWS_AS(assemble(ctx(), grid, {"R1H", "B1Hp", "B23H"}), NotClosed);
}

TEST_CASE("identification table") {
  CHECK(identify(78, 6, {52, 26, 0}) == std::vector<std::string>{"sl(3,O)", "e6(−26)"});
  CHECK(identify(52, 4, {52, 0, 0}) == std::vector<std::string>{"su(3,O)", "f4"});
  CHECK(identify(46, 6, {36, 10, 0}).size() == 2);
  CHECK(identify(38, 6, {24, 14, 0}).size() == 2);
  // sl(2,O) ≅ so(9,1)
  CHECK(identify(45, 5, {36, 9, 0}) == std::vector<std::string>{"sl(2,O)", "so(9,1)"});
  CHECK(identify(7, 1, {7, 0, 0}).empty());
}

TEST_CASE("report for a named span") {
  std::vector<int> t1;
  for (int i = 0; i < 78; ++i)
    if (ctx().flags.is_type1[i] && preferred_basis().labels[i] != GeneratorLabel{Kind::Btz, Unit::one, 2})
      t1.push_back(i);
  const auto r = report_for(ctx(), t1, "so(9,1)");
  CHECK(r.dim == 45);
  CHECK(r.boosts == 9);
  CHECK(r.signature == Signature{36, 9, 0});
  CHECK(r.rank == 5);
  CHECK(contains(r.names, "so(9,1)"));
}
