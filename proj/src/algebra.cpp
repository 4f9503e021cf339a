#include "e6/algebra.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace e6 {

bool Mat27::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const SparseVec& r) { return r.empty(); });
}

std::size_t Mat27::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

SparseVec Mat27::flatten() const {
  SparseVec out;
  out.reserve(nonzeros());
  for (int r = 0; r < 27; ++r)
    for (const auto& [c, v] : rows_[r]) out.emplace_back(27 * r + c, v);
  return out;
}

std::array<double, 27> Mat27::apply(const std::array<double, 27>& x) const {
  std::array<double, 27> y{};
  for (int r = 0; r < 27; ++r)
    for (const auto& [c, v] : rows_[r]) y[r] += v.get_d() * x[c];
  return y;
}

Mat27 operator*(const Mat27& a, const Mat27& b) {
  Mat27 out;
  for (int r = 0; r < 27; ++r) {
    SparseVec acc;
    for (const auto& [k, v] : a.rows_[r]) acc = axpy(acc, v, b.rows_[k]);
    out.rows_[r] = std::move(acc);
  }
  return out;
}

Mat27 operator+(const Mat27& a, const Mat27& b) {
  Mat27 out;
  for (int r = 0; r < 27; ++r) out.rows_[r] = axpy(a.rows_[r], 1, b.rows_[r]);
  return out;
}

Mat27 operator-(const Mat27& a, const Mat27& b) {
  Mat27 out;
  for (int r = 0; r < 27; ++r) out.rows_[r] = axpy(a.rows_[r], -1, b.rows_[r]);
  return out;
}

Mat27 operator*(const Rational& s, const Mat27& a) {
  Mat27 out;
  for (int r = 0; r < 27; ++r) out.rows_[r] = scaled(a.rows_[r], s);
  return out;
}

AlgebraElement tangent(const GeneratorLabel& g) {
  const auto seq = build_sequence(g);
  std::array<SparseVec, 27> rows;
  for (int col = 0; col < 27; ++col) {
    BasicCoords<DualScalar> v;
    v[col] = DualScalar(1, 0);
    const auto out = to_coords(apply_sequence(seq, DualEval{}, from_coords(v)));
    for (int r = 0; r < 27; ++r)
      if (!is_zero(out[r].d)) rows[r].emplace_back(col, out[r].d);
  }
  AlgebraElement e;
  for (int r = 0; r < 27; ++r) e.mat.set_row(r, std::move(rows[r]));
  e.provenance = g;
  return e;
}

const std::vector<AlgebraElement>& all_tangents() {
  static const std::vector<AlgebraElement> cache = [] {
    const auto& gens = enumerate_generators();
    std::vector<AlgebraElement> out(gens.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < gens.size(); ++k) out[k] = tangent(gens[k]);
    return out;
  }();
  return cache;
}

const AlgebraElement& cached_tangent(const GeneratorLabel& g) {
  const auto& gens = enumerate_generators();
  auto it = std::find(gens.begin(), gens.end(), g);
  if (it == gens.end()) throw IllegalLabel("unknown generator " + to_string(g));
  return all_tangents()[it - gens.begin()];
}

Mat27 commutator(const Mat27& x, const Mat27& y) { return x * y - y * x; }

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) {
  return {commutator(x.mat, y.mat), std::nullopt};
}

std::optional<int> PreferredBasis::index_of(const GeneratorLabel& g) const {
  GeneratorLabel key = g;
  if (key.kind == Kind::A || key.kind == Kind::G) key.type = 1;
  auto it = std::find(labels.begin(), labels.end(), key);
  if (it == labels.end()) return std::nullopt;
  return static_cast<int>(it - labels.begin());
}

int PreferredBasis::at(const GeneratorLabel& g) const {
  auto k = index_of(g);
  if (!k) throw std::out_of_range("not a preferred basis element: " + to_string(g));
  return *k;
}

int PreferredBasis::at(std::string_view label) const { return at(parse_label(label)); }

const PreferredBasis& preferred_basis() {
  static const PreferredBasis basis = [] {
    PreferredBasis b;
    auto& v = b.labels;
    v.push_back({Kind::Btz, Unit::one, 1});
    v.push_back({Kind::Btz, Unit::one, 2});
    for (int t = 1; t <= 3; ++t) v.push_back({Kind::Btx, Unit::one, t});
    for (int t = 1; t <= 3; ++t)
      for (Unit q : kImaginaryUnits) v.push_back({Kind::Btq, q, t});
    for (Unit q : kImaginaryUnits) v.push_back({Kind::Rxq, q, 1});
    for (int t = 1; t <= 3; ++t) v.push_back({Kind::Rxz, Unit::one, t});
    for (int t = 1; t <= 3; ++t)
      for (Unit q : kImaginaryUnits) v.push_back({Kind::Rzq, q, t});
    for (Kind k : {Kind::A, Kind::G, Kind::S})
      for (Unit q : kImaginaryUnits) v.push_back({k, q, 1});
    return b;
  }();
  return basis;
}

namespace {

// Basis tangents with an echelon form over their flattened entries.
struct TangentSpan {
  std::vector<const Mat27*> mats;
  Reducer reducer;

  explicit TangentSpan(const PreferredBasis& basis) {
    for (const auto& g : basis.labels) {
      mats.push_back(&cached_tangent(g).mat);
      if (reducer.insert(mats.back()->flatten()))
        throw RankMismatch("basis element " + to_string(g) + " depends on earlier ones");
    }
  }

  SparseVec express(const Mat27& m, int i, int j) const {
    auto e = reducer.express(m.flatten());
    if (!e) throw NotInSpan("commutator of basis elements " + std::to_string(i) + ", " + std::to_string(j) +
                            " leaves the span");
    return *e;
  }
};

int thread_count(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

std::vector<std::pair<int, int>> upper_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

StructureTable build_table(const PreferredBasis& basis, bool parallel, int jobs) {
  TangentSpan span(basis);
  const auto pairs = upper_pairs(basis.size());
  StructureTable t;
  t.basis = basis;
  t.upper.resize(pairs.size());
  const long npairs = static_cast<long>(pairs.size());
  long failed = npairs;
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count(jobs)) if (parallel) reduction(min : failed)
  for (long p = 0; p < npairs; ++p) {
    const auto [i, j] = pairs[p];
    auto e = span.reducer.express(commutator(*span.mats[i], *span.mats[j]).flatten());
    if (e)
      t.upper[p] = std::move(*e);
    else
      failed = std::min(failed, p);
  }
  if (failed < npairs)
    throw NotInSpan("commutator of basis elements " + std::to_string(pairs[failed].first) + ", " +
                    std::to_string(pairs[failed].second) + " leaves the span");
  return t;
}

}  // namespace

Reduction reduce_basis() {
  Reduction r;
  r.basis = preferred_basis();
  TangentSpan span(r.basis);
  Reducer all;
  for (const auto& e : all_tangents()) all.insert(e.mat.flatten());
  r.rank = all.rank();
  if (r.rank != 78 || span.reducer.rank() != 78)
    throw RankMismatch("rank of the 135 tangents is " + std::to_string(r.rank) + ", expected 78");
  for (const auto& g : enumerate_generators()) {
    if (std::find(r.basis.labels.begin(), r.basis.labels.end(), g) != r.basis.labels.end()) continue;
    auto e = span.reducer.express(cached_tangent(g).mat.flatten());
    if (!e) throw RankMismatch(to_string(g) + " is outside the preferred span");
    r.certificates.push_back({g, std::move(*e)});
  }
  return r;
}

bool DependencyReport::ok() const { return confirmed() == static_cast<int>(sums.size() + relations.size()) + 2; }

int DependencyReport::confirmed() const {
  int n = type_independence.holds + rank.holds;
  for (const auto* part : {&sums, &relations})
    for (const auto& id : *part) n += id.holds;
  return n;
}

DependencyReport check_dependencies() {
  DependencyReport rep;
  auto T = [](Kind k, Unit q, int type) -> const Mat27& { return cached_tangent({k, q, type}).mat; };
  auto type_sum = [&](Kind k, Unit q) { return T(k, q, 1) + T(k, q, 2) + T(k, q, 3); };
  const Rational half = make_rational(1, 2), three_halves = make_rational(3, 2);
  for (Kind k : {Kind::S, Kind::Rxq})
    for (Unit q : kImaginaryUnits) {
      GeneratorLabel g{k, q, 1};
      std::string base = to_string(g);
      base = base.substr(0, base.rfind(':'));
      rep.sums.push_back({"Σ_types " + base + " = 0", type_sum(k, q).is_zero()});
    }
  rep.sums.push_back({"Σ_types B:t,z = 0", type_sum(Kind::Btz, Unit::one).is_zero()});
  for (Unit q : kImaginaryUnits) {
    const std::string u(unit_name(q));
    const Mat27& r1 = T(Kind::Rxq, q, 1);
    const Mat27& s1 = T(Kind::S, q, 1);
    const Mat27 r2 = (-half) * r1 - half * s1;
    const Mat27 s2 = three_halves * r1 - half * s1;
    rep.relations.push_back({"R:x," + u + ":2 = -1/2 R:x," + u + ":1 - 1/2 S:" + u + ":1", T(Kind::Rxq, q, 2) == r2});
    rep.relations.push_back({"S:" + u + ":2 = 3/2 R:x," + u + ":1 - 1/2 S:" + u + ":1", T(Kind::S, q, 2) == s2});
  }
  bool same = true;
  for (Kind k : {Kind::A, Kind::G})
    for (Unit q : kImaginaryUnits)
      same = same && T(k, q, 1) == T(k, q, 2) && T(k, q, 1) == T(k, q, 3);
  rep.type_independence = {"A_q, G_q type independent", same};
  Reducer all;
  for (const auto& e : all_tangents()) all.insert(e.mat.flatten());
  rep.rank = {"rank of 135 tangents = 78", all.rank() == 78};
  return rep;
}

SparseVec btz_difference_combination() {
  // B²_tz − B³_tz = 2B²_tz + B¹_tz using Ḃ¹ + Ḃ² + Ḃ³ = 0.
  const auto& b = preferred_basis();
  SparseVec v = unit_vector(b.at("B:t,z:1"));
  return axpy(v, 2, unit_vector(b.at("B:t,z:2")));
}

std::size_t StructureTable::pair_index(int i, int j, int n) {
  return static_cast<std::size_t>(i) * n - static_cast<std::size_t>(i) * (i + 1) / 2 + (j - i - 1);
}

SparseVec StructureTable::bracket(int i, int j) const {
  if (i == j) return {};
  if (i < j) return upper[pair_index(i, j, dim())];
  return scaled(upper[pair_index(j, i, dim())], -1);
}

Rational StructureTable::constant(int i, int j, int k) const { return coefficient(bracket(i, j), k); }

std::size_t StructureTable::nonzero_pairs() const {
  return static_cast<std::size_t>(std::count_if(upper.begin(), upper.end(), [](const SparseVec& v) { return !v.empty(); }));
}

StructureTable structure_constants(const PreferredBasis& basis, int jobs) {
  return build_table(basis, jobs != 1, jobs);
}

StructureTable structure_constants_serial(const PreferredBasis& basis) { return build_table(basis, false, 1); }

SparseVec bracket(const StructureTable& t, const SparseVec& x, const SparseVec& y) {
  std::vector<Rational> acc(t.dim());
  std::vector<bool> touched(t.dim(), false);
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) {
      if (i == j) continue;
      Rational ab = a * b;
      for (const auto& [k, c] : t.bracket(i, j)) {
        acc[k] += ab * c;
        touched[k] = true;
      }
    }
  SparseVec out;
  for (int k = 0; k < t.dim(); ++k)
    if (touched[k] && !is_zero(acc[k])) out.emplace_back(k, acc[k]);
  return out;
}

namespace {

// Σ_m x_m [b_m, b_k]
SparseVec bracket_with(const StructureTable& t, const SparseVec& x, int k) {
  SparseVec out;
  for (const auto& [m, v] : x) out = axpy(out, v, t.bracket(m, k));
  return out;
}

bool lex_less(const std::array<int, 3>& a, const std::array<int, 3>& b) {
  if (a[0] < 0) return false;
  if (b[0] < 0) return true;
  return a < b;
}

IdentityCheck jacobi_impl(const StructureTable& t, bool parallel, int jobs) {
  const int n = t.dim();
  IdentityCheck result;
  long checked = 0;
#pragma omp parallel num_threads(thread_count(jobs)) if (parallel)
  {
    IdentityCheck local;
    long count = 0;
#pragma omp for schedule(dynamic)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const SparseVec ij = t.bracket(i, j);
        for (int k = j + 1; k < n; ++k) {
          SparseVec s = bracket_with(t, ij, k);
          s = axpy(s, 1, bracket_with(t, t.bracket(j, k), i));
          s = axpy(s, 1, bracket_with(t, t.bracket(k, i), j));
          ++count;
          if (!s.empty() && local.ok) {
            local.ok = false;
            local.first_failure = {i, j, k};
          }
        }
      }
#pragma omp critical
    {
      checked += count;
      if (!local.ok) {
        if (result.ok || lex_less(local.first_failure, result.first_failure))
          result.first_failure = local.first_failure;
        result.ok = false;
      }
    }
  }
  result.checked = static_cast<std::size_t>(checked);
  return result;
}

}  // namespace

IdentityCheck check_jacobi(const StructureTable& t, int jobs) { return jacobi_impl(t, jobs != 1, jobs); }
IdentityCheck check_jacobi_serial(const StructureTable& t) { return jacobi_impl(t, false, 1); }

IdentityCheck check_antisymmetry(const StructureTable& t, int jobs) {
  TangentSpan span(t.basis);
  const auto pairs = upper_pairs(t.dim());
  const long npairs = static_cast<long>(pairs.size());
  long failed = npairs;
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count(jobs)) reduction(min : failed)
  for (long p = 0; p < npairs; ++p) {
    const auto [i, j] = pairs[p];
    auto e = span.reducer.express(commutator(*span.mats[j], *span.mats[i]).flatten());
    if (!e || *e != scaled(t.upper[p], -1)) failed = std::min(failed, p);
  }
  IdentityCheck r;
  r.checked = pairs.size();
  if (failed < npairs) {
    r.ok = false;
    r.first_failure = {pairs[failed].first, pairs[failed].second, -1};
  }
  return r;
}

std::vector<SparseMatrix> adjoint(const StructureTable& t) {
  const int n = t.dim();
  std::vector<SparseMatrix> ad(n, SparseMatrix(n));
  for (int i = 0; i < n; ++i)
    for (int m = 0; m < n; ++m)
      for (const auto& [k, v] : t.bracket(i, m)) ad[i][k].emplace_back(m, v);
  return ad;
}

DenseMatrix killing(const StructureTable& t) { return killing(t, adjoint(t)); }

DenseMatrix killing(const StructureTable& t, const std::vector<SparseMatrix>& ad) {
  const int n = t.dim();
  DenseMatrix B(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rational s = 0;
      for (int k = 0; k < n; ++k)
        for (const auto& [m, v] : ad[i][k]) {
          Rational w = coefficient(ad[j][m], k);
          if (!is_zero(w)) s += v * w;
        }
      B(i, j) = s;
      B(j, i) = s;
    }
  return B;
}

namespace {

Reducer span_of(const std::vector<SparseVec>& rows) {
  Reducer r;
  for (std::size_t k = 0; k < rows.size(); ++k)
    if (r.insert(rows[k])) throw std::invalid_argument("spanning vectors are linearly dependent");
  return r;
}

}  // namespace

bool is_closed(const StructureTable& t, const std::vector<SparseVec>& rows) {
  try {
    require_closed(t, rows);
    return true;
  } catch (const NotClosed&) {
    return false;
  }
}

void require_closed(const StructureTable& t, const std::vector<SparseVec>& rows) {
  const Reducer r = span_of(rows);
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = a + 1; b < rows.size(); ++b)
      if (!r.contains(bracket(t, rows[a], rows[b])))
        throw NotClosed("bracket of spanning vectors " + std::to_string(a) + " and " + std::to_string(b) +
                        " leaves the subspace");
}

int rank_estimate(const StructureTable& t, const std::vector<SparseVec>& rows, std::uint64_t seed, int draws) {
  require_closed(t, rows);
  const Reducer r = span_of(rows);
  const int d = static_cast<int>(rows.size());
  std::mt19937_64 rng(seed);
  int best = d;
  for (int draw = 0; draw < draws; ++draw) {
    SparseVec x;
    for (const auto& v : rows) x = axpy(x, Rational(static_cast<long>(rng() % 19) - 9), v);
    DenseMatrix ad(d, d);
    for (int j = 0; j < d; ++j) {
      auto coords = r.express(bracket(t, x, rows[j]));
      for (const auto& [g, v] : *coords) ad(g, j) = v;
    }
    best = std::min(best, d - rank(std::move(ad)));
  }
  return best;
}

std::array<int, 6> casimir_indices(const PreferredBasis& b) {
  return {b.at("B:t,z:1"), b.at("B:t,z:2"), b.at("R:x,ℓ:1"), b.at("A:ℓ"), b.at("G:ℓ"), b.at("S:ℓ:1")};
}

namespace {

struct Gauss {
  Rational re, im;
};

Gauss operator*(const Gauss& a, const Gauss& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

using CMat = std::array<std::array<Gauss, 3>, 3>;

CMat mul(const CMat& a, const CMat& b) {
  CMat c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Gauss p = a[i][k] * b[k][j];
        c[i][j].re += p.re;
        c[i][j].im += p.im;
      }
  return c;
}

SparseVec flatten(const CMat& m) {
  SparseVec v;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (!is_zero(m[i][j].re)) v.emplace_back(6 * i + 2 * j, m[i][j].re);
      if (!is_zero(m[i][j].im)) v.emplace_back(6 * i + 2 * j + 1, m[i][j].im);
    }
  return v;
}

// λ_a = s_a·ι·Q_a with Q_a over Z[i]; ι is realized as −i.
std::array<CMat, 8> gellmann_matrices() {
  struct Spec {
    int sign;
    std::array<std::array<std::pair<int, int>, 3>, 3> q;  // (re, im)
  };
  const std::array<Spec, 8> specs = {{
      {-1, {{{{{0, 0}, {1, 0}, {0, 0}}}, {{{1, 0}, {0, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}}}},
      {-1, {{{{{0, 0}, {0, -1}, {0, 0}}}, {{{0, 1}, {0, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}}}},
      {1, {{{{{1, 0}, {0, 0}, {0, 0}}}, {{{0, 0}, {-1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}}}},
      {-1, {{{{{0, 0}, {0, 0}, {1, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}, {{{1, 0}, {0, 0}, {0, 0}}}}}},
      {1, {{{{{0, 0}, {0, 0}, {0, -1}}}, {{{0, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 0}, {0, 0}}}}}},
      {-1, {{{{{0, 0}, {0, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {1, 0}}}, {{{0, 0}, {1, 0}, {0, 0}}}}}},
      {-1, {{{{{0, 0}, {0, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, -1}}}, {{{0, 0}, {0, 1}, {0, 0}}}}}},
      {-1, {{{{{1, 0}, {0, 0}, {0, 0}}}, {{{0, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {-2, 0}}}}}},
  }};
  const Gauss iota{0, -1};
  std::array<CMat, 8> out;
  for (int a = 0; a < 8; ++a)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Gauss q{specs[a].q[i][j].first * specs[a].sign, specs[a].q[i][j].second * specs[a].sign};
        out[a][i][j] = iota * q;
      }
  return out;
}

}  // namespace

GellMannReport gellmann_check(const StructureTable& t) {
  GellMannReport rep;
  const std::array<const char*, 8> names = {"A:k", "A:kℓ", "A:ℓ", "A:i", "A:iℓ", "A:jℓ", "A:j", "G:ℓ"};
  std::array<int, 8> idx;
  for (int a = 0; a < 8; ++a) {
    rep.labels[a] = parse_label(names[a]);
    idx[a] = t.basis.at(rep.labels[a]);
  }
  const auto lam = gellmann_matrices();
  Reducer span;
  for (const auto& m : lam) span.insert(flatten(m));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      CMat ab = mul(lam[a], lam[b]), ba = mul(lam[b], lam[a]);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          ab[i][j].re -= ba[i][j].re;
          ab[i][j].im -= ba[i][j].im;
        }
      auto f = span.express(flatten(ab));
      rep.oracle[a][b] = f.value_or(SparseVec{});
      // Our bracket rewritten over λ indices; anything outside the eight is kept
      // with index 8 + (basis index) so that it cannot match.
      SparseVec ours;
      for (const auto& [k, v] : t.bracket(idx[a], idx[b])) {
        auto pos = std::find(idx.begin(), idx.end(), k);
        int key = pos == idx.end() ? 8 + k : static_cast<int>(pos - idx.begin());
        ours.emplace_back(key, v);
      }
      std::sort(ours.begin(), ours.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      if (!f || ours != *f) rep.mismatches.push_back({a, b, ours, rep.oracle[a][b]});
    }
  return rep;
}

StabilizerReport stabilizer_of_l(const StructureTable& t) {
  StabilizerReport rep;
  const auto& basis = t.basis;
  const int n = t.dim();
  const int col = kCoordA + index(Unit::l);
  DenseMatrix F(27, n);
  for (int i = 0; i < n; ++i) {
    const auto& M = cached_tangent(basis.labels[i]).mat;
    for (int r = 0; r < 27; ++r) F(r, i) = M.at(r, col);
  }
  for (auto& v : nullspace(F)) rep.kernel.push_back(from_dense(v));

  auto in_stab = [&](const SparseVec& x) {
    for (int r = 0; r < 27; ++r) {
      Rational s = 0;
      for (const auto& [i, v] : x) s += v * F(r, i);
      if (!is_zero(s)) return false;
    }
    return true;
  };
  auto e = [&](std::string_view label) { return unit_vector(basis.at(label)); };
  auto name = [&](std::string_view label) { return to_string(parse_label(label)); };
  auto add = [&](std::vector<SparseVec>& vs, std::vector<std::string>& ns, SparseVec v, std::string nm) {
    vs.push_back(std::move(v));
    ns.push_back(std::move(nm));
  };

  for (Unit q : kImaginaryUnits) {
    std::string a = "A:" + std::string(unit_name(q));
    add(rep.so81, rep.so81_names, e(a), name(a));
  }
  add(rep.so81, rep.so81_names, e("G:ℓ"), name("G:ℓ"));
  for (Unit q : kImaginaryUnits) {
    if (q == Unit::l) continue;
    std::string u(unit_name(q));
    add(rep.so81, rep.so81_names, axpy(e("G:" + u), 2, e("S:" + u + ":1")),
        name("G:" + u) + " + 2 " + name("S:" + u + ":1"));
  }
  add(rep.so81, rep.so81_names, e("S:ℓ:1"), name("S:ℓ:1"));
  for (const char* l : {"R:x,z:1", "B:t,x:1", "B:t,z:1"}) add(rep.so81, rep.so81_names, e(l), name(l));
  for (const char* kind : {"B:t,", "R:x,", "R:z,"})
    for (Unit q : kImaginaryUnits) {
      if (q == Unit::l) continue;
      std::string l = kind + std::string(unit_name(q)) + ":1";
      add(rep.so81, rep.so81_names, e(l), name(l));
    }

  // Boost/rotation pairs B + s·R with the sign fixed by membership in Stab(ℓ).
  auto paired = [&](const std::string& boost, const std::string& rot) -> std::pair<SparseVec, std::string> {
    for (int s : {1, -1}) {
      SparseVec v = axpy(e(boost), s, e(rot));
      if (in_stab(v)) return {v, name(boost) + (s > 0 ? " + " : " - ") + name(rot)};
    }
    throw std::logic_error("no combination of " + boost + " and " + rot + " fixes ℓ");
  };
  for (int type : {2, 3}) {
    const std::string ts = ":" + std::to_string(type);
    for (Unit q : kImaginaryUnits) {
      if (q == Unit::l) continue;
      std::string u(unit_name(q));
      auto [v, nm] = paired("B:t," + u + ts, "R:z," + u + ts);
      if (type == 2) add(rep.b2, rep.b2_names, v, nm);
      else add(rep.b3, rep.b3_names, v, nm);
    }
  }
  for (int type : {2, 3}) {
    const std::string ts = ":" + std::to_string(type);
    auto [v, nm] = paired("B:t,x" + ts, "R:x,z" + ts);
    add(rep.bl, rep.bl_names, v, nm);
  }
  for (int type : {2, 3}) {
    const std::string ts = ":" + std::to_string(type);
    auto [v, nm] = paired("B:t,ℓ" + ts, "R:z,ℓ" + ts);
    add(rep.bl, rep.bl_names, v, nm);
  }

  std::vector<SparseVec> b;
  for (const auto* part : {&rep.b2, &rep.b3, &rep.bl}) b.insert(b.end(), part->begin(), part->end());

  Reducer all;
  bool independent = true, inside = true;
  for (const auto* part : {&rep.so81, &b})
    for (const auto& v : *part) {
      inside = inside && in_stab(v);
      if (all.insert(v)) independent = false;
    }
  rep.spans = independent && inside && all.rank() == static_cast<int>(rep.kernel.size());

  rep.abelian = true;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!bracket(t, b[i], b[j]).empty()) rep.abelian = false;

  Reducer bspan;
  for (const auto& v : b) bspan.insert(v);
  rep.ideal = true;
  for (const auto& x : rep.so81)
    for (const auto& y : b)
      if (!bspan.contains(bracket(t, x, y))) rep.ideal = false;

  rep.so81_closed = is_closed(t, rep.so81);
  const DenseMatrix K = killing(t);
  rep.so81_signature = signature(restrict_form(K, rep.so81));
  auto nulls = [&](const std::vector<SparseVec>& vs) {
    std::vector<bool> out;
    DenseMatrix R = restrict_form(K, vs);
    for (int i = 0; i < R.rows(); ++i) out.push_back(is_zero(R(i, i)));
    return out;
  };
  rep.b2_null = nulls(rep.b2);
  rep.b3_null = nulls(rep.b3);
  rep.bl_null = nulls(rep.bl);
  return rep;
}

namespace {

std::array<double, 27> coords_of(const BasicJordan<double>& x) { return to_coords(x); }

}  // namespace

std::array<double, 27> curve_commutator(const GeneratorLabel& r1, const GeneratorLabel& r2, double h,
                                        const BasicJordan<double>& x) {
  auto curve = [&](double a) {
    auto y = apply(r1, a / 2, x);
    y = apply(r2, a / 2, y);
    y = apply(r1, -a / 2, y);
    return coords_of(apply(r2, -a / 2, y));
  };
  const auto plus = curve(h), minus = curve(-h), mid = coords_of(x);
  std::array<double, 27> out;
  for (int k = 0; k < 27; ++k) out[k] = (plus[k] - 2 * mid[k] + minus[k]) / (h * h);
  return out;
}

std::array<double, 27> matrix_commutator_action(const GeneratorLabel& r1, const GeneratorLabel& r2,
                                                const BasicJordan<double>& x) {
  const auto& T1 = cached_tangent(r1).mat;
  const auto& T2 = cached_tangent(r2).mat;
  const auto v = coords_of(x);
  const auto a = T2.apply(T1.apply(v)), b = T1.apply(T2.apply(v));
  std::array<double, 27> out;
  for (int k = 0; k < 27; ++k) out[k] = a[k] - b[k];
  return out;
}

double calibrate_curve_commutator(double h) {
  std::array<double, 27> v;
  for (int k = 0; k < 27; ++k) v[k] = ((7 * k) % 11 - 5) / 4.0;
  const auto x = from_coords(v);
  const auto ai = parse_label("A:i"), aj = parse_label("A:j");
  const auto fd = curve_commutator(ai, aj, h, x);
  const auto mc = matrix_commutator_action(ai, aj, x);
  double num = 0, den = 0;
  for (int k = 0; k < 27; ++k) {
    num += fd[k] * mc[k];
    den += mc[k] * mc[k];
  }
  return num / den;
}

double curve_commutator_check(const GeneratorLabel& r1, const GeneratorLabel& r2, double h,
                              const BasicJordan<double>& x, double tol) {
  const auto fd = curve_commutator(r1, r2, h, x);
  const auto mc = matrix_commutator_action(r1, r2, x);
  double worst = 0;
  for (int k = 0; k < 27; ++k) worst = std::max(worst, std::abs(fd[k] - kCurveCalibration * mc[k]));
  if (worst > tol)
    throw StepTooLarge("curve commutator of " + to_string(r1) + ", " + to_string(r2) + " off by " +
                       std::to_string(worst));
  return worst;
}

}  // namespace e6
