// One PASS/FAIL line per acceptance criterion.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "e6/algebra.hpp"
#include "e6/rootweight.hpp"
#include "e6/subalgebra.hpp"

using namespace e6;

namespace {

int failures = 0;

void report(int n, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " [" << n << "] " << name << ": " << detail << std::endl;
  failures += !ok;
}

std::string sig(const Signature& s) {
  return "(" + std::to_string(s.minus) + "," + std::to_string(s.plus) + "," + std::to_string(s.zero) + ")";
}

template <class F>
void criterion(int n, const std::string& name, F&& f) {
  try {
    std::string detail;
    const bool ok = f(detail);
    report(n, name, ok, detail);
  } catch (const std::exception& e) {
    report(n, name, false, std::string("exception: ") + e.what());
  }
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const StructureTable t = structure_constants(preferred_basis());
  const SubalgebraContext ctx(t);

  criterion(1, "basis reduction", [&](std::string& d) {
    const auto red = reduce_basis();
    const auto rep = check_dependencies();
    int sums = 0, rels = 0;
    for (const auto& id : rep.sums) sums += id.holds;
    for (const auto& id : rep.relations) rels += id.holds;
    d = "rank " + std::to_string(red.rank) + ", sums " + std::to_string(sums) + "/15, relations " +
        std::to_string(rels) + "/14";
    return red.rank == 78 && rep.rank.holds && sums == 15 && rels == 14;
  });

  criterion(2, "type independence", [&](std::string& d) {
    bool ok = true;
    for (Kind k : {Kind::A, Kind::G})
      for (int q = 1; q < 8; ++q) {
        const auto& m1 = tangent({k, unit_at(q), 1}).mat;
        ok = ok && tangent({k, unit_at(q), 2}).mat == m1 && tangent({k, unit_at(q), 3}).mat == m1;
      }
    d = "A_q and G_q over 7 units";
    return ok && check_dependencies().type_independence.holds;
  });

  criterion(3, "antisymmetry and Jacobi", [&](std::string& d) {
    const auto a = check_antisymmetry(t);
    const auto j = check_jacobi(t);
    d = std::to_string(a.checked) + " pairs, " + std::to_string(j.checked) + " triples";
    return a.ok && j.ok && j.checked == 76076;
  });

  criterion(4, "Killing signatures", [&](std::string& d) {
    std::vector<SparseVec> rot, t1;
    for (int i = 0; i < 78; ++i) {
      if (!ctx.flags.is_boost[i]) rot.push_back(unit_vector(i));
      if (ctx.flags.is_type1[i]) t1.push_back(unit_vector(i));
    }
    const auto full = signature(ctx.killing);
    const auto r = signature(restrict_form(ctx.killing, rot));
    const auto s1 = signature(restrict_form(ctx.killing, t1));
    d = "full " + sig(full) + ", rotations " + sig(r) + ", T1 " + sig(s1);
    return full == Signature{52, 26, 0} && r == Signature{52, 0, 0} && s1 == Signature{36, 10, 0};
  });

  criterion(5, "Casimirs and rank", [&](std::string& d) {
    const auto idx = casimir_indices(t.basis);
    bool commute = true;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) commute = commute && t.bracket(idx[a], idx[b]).empty();
    std::vector<SparseVec> all;
    for (int i = 0; i < 78; ++i) all.push_back(unit_vector(i));
    const int r = rank_estimate(t, all);
    d = std::string(commute ? "sextet commutes" : "sextet does not commute") + ", rank " + std::to_string(r);
    return commute && r == 6;
  });

  criterion(6, "determinant preservation", [&](std::string& d) {
    const auto r = det_preservation(2024, 20, {0.3, -0.3, 0.9, -0.9});
    std::ostringstream os;
    os << "worst " << r.worst << " over " << r.samples << " samples";
    d = os.str();
    return r.samples == 135 * 20 * 4 && r.worst < 1e-9;
  });

  criterion(7, "automorphisms", [&](std::string& d) {
    std::vector<int> all(78);
    for (int i = 0; i < 78; ++i) all[i] = i;
    int matched = 0;
    for (const auto& row : known_involutions()) {
      const auto phi = make_involution(t, ctx.flags, row.factors);
      const auto fixed = fixed_subalgebra(ctx, phi);
      const auto pre = compact_preimage(ctx, phi);
      matched += image_signature(ctx.flags, phi.sign, all) == row.image && fixed.dim == row.fixed_dim &&
                 fixed.signature == row.fixed && pre.signature == row.preimage && preserves_form(ctx.killing, phi.sign);
    }
    d = std::to_string(matched) + "/" + std::to_string(known_involutions().size()) + " rows";
    return matched == static_cast<int>(known_involutions().size());
  });

  criterion(8, "refinement grid", [&](std::string& d) {
    using K = InvolutionKind;
    const auto grid = refine_subspaces(ctx, make_involution(t, ctx.flags, {K::two_three}),
                                       make_involution(t, ctx.flags, {K::h_perp}));
    const std::vector<int> expect = {16, 6, 8, 8, 8, 8, 20, 4};
    bool cells = grid.cells.size() == expect.size();
    for (std::size_t k = 0; cells && k < expect.size(); ++k)
      cells = static_cast<int>(grid.cells[k].indices.size()) == expect[k];
    int matched = 0;
    for (const auto& row : known_assemblies()) {
      const auto r = assemble(ctx, grid, row.cells);
      matched += r.signature == row.signature && r.twisted == row.twisted;
    }
    d = std::string(cells ? "cell counts match" : "cell counts differ") + ", " + std::to_string(matched) + "/" +
        std::to_string(known_assemblies().size()) + " assemblies";
    return cells && matched == 15 && known_assemblies().size() == 15;
  });

  criterion(9, "stabilizer of the null direction", [&](std::string& d) {
    const auto r = stabilizer_of_l(t);
    const bool null = std::all_of(r.b2_null.begin(), r.b2_null.end(), [](bool b) { return b; });
    d = "dim " + std::to_string(r.kernel.size()) + ", b " + std::to_string(r.b2.size()) + "+" +
        std::to_string(r.b3.size()) + "+" + std::to_string(r.bl.size());
    return r.kernel.size() == 52 && r.b2.size() == 6 && r.b3.size() == 6 && r.bl.size() == 4 && r.spans &&
           r.abelian && r.ideal && null;
  });

  criterion(10, "Gell-Mann", [&](std::string& d) {
    const auto r = gellmann_check(t);
    d = std::to_string(r.mismatches.size()) + " mismatches";
    return r.ok();
  });

  criterion(11, "root and weight engine", [&](std::string& d) {
    const auto b3 = dynkin("B3");
    const auto inv = inverse_cartan(b3);
    const bool cartan = cartan_matrix(b3) == IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}} &&
                        inv(0, 2) == make_rational(1, 2) && inv(2, 2) == make_rational(3, 2) && inv(1, 1) == 2;
    const auto w = weights_from_highest(b3, {1, 0, 0});
    const std::vector<std::vector<int>> marks = {{1, 0, 0}, {-1, 1, 0}, {0, -1, 2}, {0, 0, 0},
                                                 {0, 1, -2}, {1, -1, 0}, {-1, 0, 0}};
    bool weights = w.weights.size() == marks.size();
    for (std::size_t k = 0; weights && k < marks.size(); ++k) weights = w.weights[k].mark == marks[k];
    bool counts = true;
    for (const auto& [name, n] : std::vector<std::pair<std::string, std::size_t>>{
             {"A2", 6}, {"B2", 8}, {"C2", 8}, {"G2", 12}, {"A3", 12}, {"D3", 12}, {"B3", 18}, {"C3", 18}, {"F4", 48},
             {"E6", 72}})
      counts = counts && root_system(dynkin(name)).size() == n;
    const auto f4 = dynkin("F4");
    const auto rf4 = root_diagram(f4);
    const auto s = slice(rf4, normal_orthogonal_to(f4, {1, 2, 3}));
    std::size_t middle = 0;
    for (const auto& sl : s.slices)
      if (sl.level == 0)
        for (int v : sl.vertices) middle += !rf4.weights[v].root.empty() && rf4.weights[v].mark != std::vector<int>(4, 0);
    const bool rejects = !embed_check(points(root_diagram(dynkin("A3"))), points(root_diagram(dynkin("C3"))));
    d = "F4 middle slice " + std::to_string(middle) + " nonzero, A3 in C3 " + (rejects ? "rejected" : "accepted");
    return cartan && weights && counts && middle == 18 && rejects;
  });

  criterion(12, "curve commutator cross-check", [&](std::string& d) {
    const double kappa = calibrate_curve_commutator();
    std::mt19937_64 rng(77);
    const auto& gens = enumerate_generators();
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    double worst = 0;
    for (int n = 0; n < 30; ++n) {
      const auto& g1 = gens[pick(rng)];
      const auto& g2 = gens[pick(rng)];
      const auto x = to_float(random_jordan(rng));
      worst = std::max(worst, curve_commutator_check(g1, g2, 1e-3, x, 1e-4));
    }
    std::ostringstream os;
    os << "calibration " << kappa << ", worst " << worst;
    d = os.str();
    return std::abs(kappa - kCurveCalibration) < 1e-4 && worst < 1e-4;
  });

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (12 - failures) << "/12 criteria met in " << secs << " s" << std::endl;
  return failures == 0 ? 0 : 1;
}
