#include "e6/subalgebra.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace e6 {

BasisFlags basis_flags(const PreferredBasis& basis) {
  BasisFlags f;
  const GeneratorLabel btz2{Kind::Btz, Unit::one, 2};
  for (const auto& g : basis.labels) {
    f.is_boost.push_back(g.is_boost());
    f.is_type1.push_back(g.type == 1 || g == btz2);
    const bool off_h = g.has_unit() && (g.q == Unit::i || g.q == Unit::j || g.q == Unit::jl || g.q == Unit::il);
    f.is_H.push_back(!off_h);
  }
  return f;
}

InvolutionKind parse_involution_kind(std::string_view s) {
  if (s == "t") return InvolutionKind::t;
  if (s == "23") return InvolutionKind::two_three;
  if (s == "hperp" || s == "hp" || s == "H⊥") return InvolutionKind::h_perp;
  throw std::invalid_argument("unknown involution: " + std::string(s));
}

std::string to_string(InvolutionKind k) {
  switch (k) {
    case InvolutionKind::t: return "t";
    case InvolutionKind::two_three: return "23";
    case InvolutionKind::h_perp: return "hperp";
  }
  return "?";
}

std::string Involution::name() const {
  if (factors.empty()) return "id";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "∘" : "") + to_string(factors[i]);
  return s;
}

NotAutomorphism::NotAutomorphism(int i, int j)
    : std::runtime_error("sign assignment does not respect [b_" + std::to_string(i) + ", b_" + std::to_string(j) +
                         "]"),
      i(i),
      j(j) {}

bool is_bracket_compatible(const StructureTable& t, const std::vector<int>& sign, int* bad_i, int* bad_j) {
  const int n = t.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (const auto& [k, v] : t.upper[StructureTable::pair_index(i, j, n)])
        if (sign[i] * sign[j] != sign[k]) {
          if (bad_i) *bad_i = i;
          if (bad_j) *bad_j = j;
          return false;
        }
  return true;
}

bool preserves_form(const DenseMatrix& form, const std::vector<int>& sign) {
  for (int i = 0; i < form.rows(); ++i)
    for (int j = 0; j < form.cols(); ++j)
      if (sign[i] != sign[j] && !is_zero(form(i, j))) return false;
  return true;
}

Involution make_involution(const StructureTable& t, const BasisFlags& flags,
                           const std::vector<InvolutionKind>& factors) {
  Involution phi{factors, std::vector<int>(t.dim(), 1)};
  for (int i = 0; i < t.dim(); ++i)
    for (auto k : factors) {
      bool flip = false;
      switch (k) {
        case InvolutionKind::t: flip = flags.is_boost[i]; break;
        case InvolutionKind::two_three: flip = !flags.is_type1[i]; break;
        case InvolutionKind::h_perp: flip = !flags.is_H[i]; break;
      }
      if (flip) phi.sign[i] = -phi.sign[i];
    }
  int bi = -1, bj = -1;
  if (!is_bracket_compatible(t, phi.sign, &bi, &bj)) throw NotAutomorphism(bi, bj);
  return phi;
}

SubalgebraContext::SubalgebraContext(const StructureTable& t, std::uint64_t seed)
    : table(t), killing(e6::killing(t)), flags(basis_flags(t.basis)), seed(seed) {}

Signature image_signature(const BasisFlags& flags, const std::vector<int>& sign, const std::vector<int>& indices) {
  Signature s;
  for (int i : indices) {
    if ((sign[i] > 0) != flags.is_boost[i]) ++s.minus;
    else ++s.plus;
  }
  return s;
}

SubalgebraReport report_for(const SubalgebraContext& ctx, std::vector<int> indices, std::string description,
                            const std::vector<int>* twist) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  SubalgebraReport rep;
  rep.description = std::move(description);
  rep.indices = indices;
  rep.dim = static_cast<int>(indices.size());
  std::vector<SparseVec> rows;
  for (int i : indices) {
    rows.push_back(unit_vector(i));
    rep.labels.push_back(to_string(ctx.table.basis.labels[i]));
    if (ctx.flags.is_boost[i]) ++rep.boosts;
  }
  require_closed(ctx.table, rows);
  DenseMatrix K(rep.dim, rep.dim);
  for (int a = 0; a < rep.dim; ++a)
    for (int b = 0; b < rep.dim; ++b) K(a, b) = ctx.killing(indices[a], indices[b]);
  rep.signature = signature(std::move(K));
  rep.rank = rep.dim ? rank_estimate(ctx.table, rows, ctx.seed) : 0;
  rep.twisted = twist ? image_signature(ctx.flags, *twist, indices) : rep.signature;
  rep.names = identify(rep.dim, rep.rank, rep.signature);
  if (rep.signature.zero) rep.notes.push_back("Killing form degenerate on this span");
  if (rep.boosts != rep.signature.plus) rep.notes.push_back("boost count differs from the positive index");
  return rep;
}

SubalgebraReport fixed_subalgebra(const SubalgebraContext& ctx, const Involution& phi) {
  std::vector<int> idx;
  for (int i = 0; i < ctx.table.dim(); ++i)
    if (phi.sign[i] > 0) idx.push_back(i);
  return report_for(ctx, std::move(idx), "fixed(" + phi.name() + ")", &phi.sign);
}

SubalgebraReport compact_preimage(const SubalgebraContext& ctx, const Involution& phi) {
  std::vector<int> idx;
  for (int i = 0; i < ctx.table.dim(); ++i)
    if ((phi.sign[i] > 0) != ctx.flags.is_boost[i]) idx.push_back(i);
  return report_for(ctx, std::move(idx), "preimage(" + phi.name() + ")", &phi.sign);
}

namespace {

std::string tag(const Involution& phi, int s) {
  if (phi.factors.size() == 1) {
    switch (phi.factors[0]) {
      case InvolutionKind::two_three: return s > 0 ? "1" : "23";
      case InvolutionKind::h_perp: return s > 0 ? "H" : "Hp";
      case InvolutionKind::t: return s > 0 ? "1" : "t";
    }
  }
  return s > 0 ? "+" : "-";
}

}  // namespace

const GridCell& Grid::cell(std::string_view name) const {
  for (const auto& c : cells)
    if (c.name == name) return c;
  throw std::out_of_range("no grid cell " + std::string(name));
}

Grid refine_subspaces(const SubalgebraContext& ctx, const Involution& first, const Involution& second) {
  Grid g{first, second, {}};
  const std::array<std::pair<int, int>, 4> order{{{1, 1}, {-1, -1}, {-1, 1}, {1, -1}}};
  for (auto [s1, s2] : order)
    for (bool boost : {false, true}) {
      GridCell c;
      c.name = (boost ? "B" : "R") + tag(first, s1) + tag(second, s2);
      for (int i = 0; i < ctx.table.dim(); ++i)
        if (first.sign[i] == s1 && second.sign[i] == s2 && ctx.flags.is_boost[i] == boost) c.indices.push_back(i);
      (boost ? c.boosts : c.rotations) = static_cast<int>(c.indices.size());
      g.cells.push_back(std::move(c));
    }
  return g;
}

SubalgebraReport assemble(const SubalgebraContext& ctx, const Grid& grid, const std::vector<std::string>& cells) {
  std::vector<int> idx;
  std::string desc;
  for (const auto& name : cells) {
    const auto& c = grid.cell(name);
    idx.insert(idx.end(), c.indices.begin(), c.indices.end());
    desc += (desc.empty() ? "" : "+") + name;
  }
  std::vector<int> twist(ctx.table.dim());
  for (int i = 0; i < ctx.table.dim(); ++i) twist[i] = grid.first.sign[i] * grid.second.sign[i];
  return report_for(ctx, std::move(idx), desc, &twist);
}

namespace {

struct Entry {
  int dim, rank;
  Signature sig;
  std::string name;
};

// dim(su(n,F)) = (|F|−1)(n−1) + |F|n(n−1)/2 + dim so(Im F); the octonionic n = 3 case is 52.
int su_dim(int f, int n) {
  const int so_im = f == 4 ? 3 : f == 8 ? 21 : 0;
  int d = (f - 1) * (n - 1) + f * n * (n - 1) / 2 + so_im;
  if (f == 8 && n == 3) d = 52;
  return d;
}

const std::vector<Entry>& table() {
  static const std::vector<Entry> t = [] {
    std::vector<Entry> v;
    const std::array<std::pair<int, char>, 4> fields{{{1, 'R'}, {2, 'C'}, {4, 'H'}, {8, 'O'}}};
    // Ranks indexed [field][su2, su3, sl2, sl3].
    const std::array<std::array<int, 4>, 4> ranks{{{1, 1, 1, 2}, {1, 2, 2, 4}, {2, 3, 3, 5}, {4, 4, 5, 6}}};
    for (int fi = 0; fi < 4; ++fi) {
      const auto [f, c] = fields[fi];
      for (int n : {2, 3}) {
        const int su = su_dim(f, n);
        const int sl = su + (n - 1) + f * n * (n - 1) / 2;
        const std::string F(1, c), N = std::to_string(n);
        const int r_su = ranks[fi][n == 2 ? 0 : 1], r_sl = ranks[fi][n == 2 ? 2 : 3];
        v.push_back({su, r_su, {su, 0, 0}, "su(" + N + "," + F + ")"});
        v.push_back({sl, r_sl, {su, sl - su, 0}, "sl(" + N + "," + F + ")"});
        const int boosts = f * (n - 1);
        v.push_back({su, r_su, {su - boosts, boosts, 0}, "su(" + std::to_string(n - 1) + ",1," + F + ")"});
      }
    }
    auto add = [&](int d, int r, int minus, int plus, const char* name) { v.push_back({d, r, {minus, plus, 0}, name}); };
    add(1, 1, 1, 0, "u(1)");
    add(78, 6, 52, 26, "e6(−26)");
    add(52, 4, 52, 0, "f4");
    add(52, 4, 36, 16, "f4(−20)");
    add(46, 6, 36, 10, "sl(2,O)⊕u(1)");
    add(46, 6, 36, 10, "so(9,1)⊕u(1)");
    add(45, 5, 36, 9, "so(9,1)");
    add(36, 4, 36, 0, "so(9)");
    add(36, 4, 28, 8, "so(8,1)");
    add(36, 4, 24, 12, "su(3,1,H)");
    add(38, 6, 24, 14, "sl(3,H)⊕su(2,C)^C");
    add(38, 6, 24, 14, "sl(2,1,H)⊕su(2,C)");
    add(24, 4, 24, 0, "su(3,H)⊕su(2,C)^C");
    add(24, 4, 16, 8, "su(2,1,H)⊕su(2,C)^C");
    add(22, 6, 16, 6, "sl(2,H)⊕su(2,C)^C⊕su(2)⊕u(1)");
    add(16, 4, 16, 0, "su(2,H)⊕su(2,C)^C⊕su(2)");
    add(20, 4, 16, 4, "so(5)⊕so(4,1)");
    add(21, 3, 21, 0, "so(7)");
    add(15, 3, 10, 5, "so(5,1)");
    add(10, 2, 6, 4, "so(4,1)");
    add(14, 2, 14, 0, "g2");
    add(28, 4, 28, 0, "so(8)");
    return v;
  }();
  return t;
}

}  // namespace

std::vector<std::string> identify(int dim, int rank, Signature sig) {
  std::vector<std::string> out;
  for (const auto& e : table())
    if (e.dim == dim && e.rank == rank && e.sig == sig &&
        std::find(out.begin(), out.end(), e.name) == out.end())
      out.push_back(e.name);
  return out;
}

const std::vector<KnownAssembly>& known_assemblies() {
  static const std::vector<KnownAssembly> rows = [] {
    using V = std::vector<std::string>;
    std::vector<KnownAssembly> r;
    auto add = [&](V cells, const char* name, int m, int p, int tm, int tp) {
      r.push_back({std::move(cells), name, {m, p, 0}, {tm, tp, 0}});
    };
    add({"R1H"}, "su(2,H)⊕su(2,C)^C⊕su(2)", 16, 0, 16, 0);
    add({"R1H", "R23Hp"}, "su(3,H)₂⊕su(2,C)^C", 24, 0, 24, 0);
    add({"R1H", "B1H"}, "sl(2,H)⊕su(2,C)^C⊕su(2)⊕u(1)", 16, 6, 16, 6);
    add({"R1H", "B23Hp"}, "su(2,1,H)₁⊕su(2,C)^C", 16, 8, 16, 8);
    add({"R1H", "B23H"}, "su(2,1,H)₂⊕su(2,C)^C", 16, 8, 24, 0);
    add({"R1H", "R23H"}, "su(3,H)⊕su(2,C)^C", 24, 0, 16, 8);
    add({"R1H", "B1Hp"}, "so(5)⊕so(4,1)", 16, 4, 20, 0);
    add({"R1H", "R1Hp"}, "so(9)", 36, 0, 16, 20);
    add({"R1H", "B1H", "B23H", "R23H"}, "sl(3,H)⊕su(2,C)^C", 24, 14, 24, 14);
    add({"R1H", "B1H", "R23Hp", "B23Hp"}, "sl(2,1,H)₁⊕su(2,C)₂", 24, 14, 24, 14);
    add({"R1H", "B1H", "B1Hp", "R1Hp"}, "sl(2,O)⊕u(1)", 36, 10, 20, 26);
    add({"R1H", "B23Hp", "R23H", "B1Hp"}, "su(3,1,H)₁", 24, 12, 20, 16);
    add({"R1H", "R23Hp", "B23H", "B1Hp"}, "su(3,1,H)₂", 24, 12, 36, 0);
    add({"R1H", "R23Hp", "R23H", "R1Hp"}, "su(3,O)", 52, 0, 24, 28);
    add({"R1H", "B23Hp", "B23H", "R1Hp"}, "su(2,1,O)", 36, 16, 24, 28);
    return r;
  }();
  return rows;
}

const std::vector<KnownInvolution>& known_involutions() {
  using K = InvolutionKind;
  static const std::vector<KnownInvolution> rows = {
      {{}, {52, 26, 0}, 78, {52, 26, 0}, "sl(3,O)", {52, 0, 0}, "su(3,O)"},
      {{K::t}, {78, 0, 0}, 52, {52, 0, 0}, "su(3,O)", {52, 26, 0}, "sl(3,O)"},
      {{K::two_three}, {52, 26, 0}, 46, {36, 10, 0}, "sl(2,O)⊕u(1)", {36, 16, 0}, "su(2,1,O)"},
      {{K::h_perp}, {36, 42, 0}, 38, {24, 14, 0}, "sl(3,H)⊕su(2,C)^C", {24, 12, 0}, "su(3,1,H)₁"},
      {{K::two_three, K::t}, {46, 32, 0}, 52, {36, 16, 0}, "su(2,1,O)", {36, 10, 0}, "so(9,1)⊕u(1)"},
      {{K::h_perp, K::t}, {38, 40, 0}, 36, {24, 12, 0}, "su(3,1,H)₁", {24, 14, 0}, "sl(3,H)⊕su(2,C)^C"},
      {{K::two_three, K::h_perp}, {36, 42, 0}, 38, {24, 14, 0}, "sl(2,1,H)⊕su(2,C)₂", {24, 12, 0}, "su(3,1,H)₂"},
      {{K::two_three, K::h_perp, K::t},
       {38, 40, 0},
       36,
       {24, 12, 0},
       "su(3,1,H)₂",
       {24, 14, 0},
       "sl(2,1,H)⊕su(2,C)₂"},
  };
  return rows;
}

}  // namespace e6
