#include "e6/rootweight.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace e6 {

namespace {

void add_chain(DynkinDiagram& d, int from, int to) {
  for (int k = from; k < to; ++k) d.edges.push_back({k, k + 1, 1, -1});
}

DynkinDiagram simple_dynkin(std::string_view name) {
  if (name.size() < 2) throw SingularCartan("bad diagram name: " + std::string(name));
  const char family = name[0];
  int n = 0;
  for (char c : name.substr(1)) {
    if (c < '0' || c > '9') throw SingularCartan("bad diagram name: " + std::string(name));
    n = 10 * n + (c - '0');
  }
  DynkinDiagram d{std::string(name), n, {}};
  auto need = [&](bool ok) {
    if (!ok) throw SingularCartan("no diagram " + std::string(name));
  };
  switch (family) {
    case 'A':
      need(n >= 1);
      add_chain(d, 0, n - 1);
      break;
    case 'B':
      need(n >= 2);
      add_chain(d, 0, n - 2);
      d.edges.push_back({n - 2, n - 1, 2, n - 1});
      break;
    case 'C':
      need(n >= 2);
      add_chain(d, 0, n - 2);
      d.edges.push_back({n - 2, n - 1, 2, n - 2});
      break;
    case 'D':
      need(n >= 3);
      add_chain(d, 0, n - 2);
      d.edges.push_back({n - 3, n - 1, 1, -1});
      break;
    case 'G':
      need(n == 2);
      d.edges.push_back({0, 1, 3, 1});
      break;
    case 'F':
      need(n == 4);
      d.edges = {{0, 1, 1, -1}, {1, 2, 2, 2}, {2, 3, 1, -1}};
      break;
    case 'E':
      need(n >= 6 && n <= 8);
      d.edges.push_back({0, 2, 1, -1});
      d.edges.push_back({1, 3, 1, -1});
      add_chain(d, 2, n - 1);
      break;
    default:
      need(false);
  }
  return d;
}

void validate(const DynkinDiagram& d) {
  std::set<std::pair<int, int>> seen;
  for (const auto& e : d.edges) {
    const bool nodes_ok = e.i >= 0 && e.j >= 0 && e.i < d.rank && e.j < d.rank && e.i != e.j;
    const bool bond_ok = e.multiplicity >= 1 && e.multiplicity <= 3;
    const bool arrow_ok = e.multiplicity == 1 ? e.shorter == -1 : (e.shorter == e.i || e.shorter == e.j);
    if (!nodes_ok || !bond_ok || !arrow_ok || !seen.insert(std::minmax(e.i, e.j)).second)
      throw SingularCartan("malformed edge in " + d.name);
  }
}

}  // namespace

DynkinDiagram dynkin(std::string_view name) {
  DynkinDiagram out{std::string(name), 0, {}};
  std::size_t start = 0;
  while (start <= name.size()) {
    const std::size_t plus = std::min(name.find('+', start), name.size());
    DynkinDiagram part = simple_dynkin(name.substr(start, plus - start));
    for (auto e : part.edges) {
      e.i += out.rank;
      e.j += out.rank;
      if (e.shorter >= 0) e.shorter += out.rank;
      out.edges.push_back(e);
    }
    out.rank += part.rank;
    start = plus + 1;
  }
  return out;
}

IntMatrix cartan_matrix(const DynkinDiagram& d) {
  validate(d);
  IntMatrix a(d.rank, std::vector<int>(d.rank, 0));
  for (int i = 0; i < d.rank; ++i) a[i][i] = 2;
  for (const auto& e : d.edges) {
    a[e.i][e.j] = e.shorter == e.i ? -e.multiplicity : -1;
    a[e.j][e.i] = e.shorter == e.j ? -e.multiplicity : -1;
  }
  return a;
}

namespace {

DenseMatrix to_dense(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = a[i][j];
  return m;
}

}  // namespace

DenseMatrix inverse_cartan(const DynkinDiagram& d) {
  auto inv = inverse(to_dense(cartan_matrix(d)));
  if (!inv) throw SingularCartan("Cartan matrix of " + d.name + " is singular");
  return *inv;
}

DenseMatrix gram_matrix(const DynkinDiagram& d) {
  const auto a = cartan_matrix(d);
  const int n = d.rank;
  // Squared lengths from a_ij / a_ji = |r^j|² / |r^i|², one component at a time.
  std::vector<Rational> len(n, 0);
  std::vector<int> component(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (component[s] >= 0) continue;
    std::queue<int> q;
    q.push(s);
    component[s] = ncomp;
    len[s] = 1;
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (int j = 0; j < n; ++j)
        if (a[i][j] != 0 && i != j && component[j] < 0) {
          component[j] = ncomp;
          len[j] = len[i] * a[i][j] / a[j][i];
          q.push(j);
        }
    }
    ++ncomp;
  }
  for (int c = 0; c < ncomp; ++c) {
    Rational longest = 0;
    for (int i = 0; i < n; ++i)
      if (component[i] == c) longest = std::max(longest, len[i]);
    for (int i = 0; i < n; ++i)
      if (component[i] == c) len[i] = 2 * len[i] / longest;
  }
  DenseMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = a[i][j] * len[i] / 2;
  return g;
}

std::vector<std::vector<double>> simple_roots(const DynkinDiagram& d) {
  const DenseMatrix g = gram_matrix(d);
  const int n = d.rank;
  std::vector<std::vector<double>> L(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      double s = g(i, j).get_d();
      for (int k = 0; k < j; ++k) s -= L[i][k] * L[j][k];
      L[i][j] = i == j ? std::sqrt(s) : s / L[j][j];
    }
  return L;
}

std::vector<Rational> fundamental_weight(const DynkinDiagram& d, int i) {
  const DenseMatrix inv = inverse_cartan(d);
  std::vector<Rational> w(d.rank);
  for (int k = 0; k < d.rank; ++k) w[k] = inv(k, i);
  return w;
}

std::vector<std::vector<int>> root_system(const DynkinDiagram& d) {
  const auto a = cartan_matrix(d);
  const int n = d.rank;
  std::set<std::vector<int>> seen;
  std::queue<std::vector<int>> work;
  for (int i = 0; i < n; ++i) {
    std::vector<int> r(n, 0);
    r[i] = 1;
    if (seen.insert(r).second) work.push(r);
  }
  while (!work.empty()) {
    auto v = work.front();
    work.pop();
    for (int i = 0; i < n; ++i) {
      // s_i(v) = v − ⟨v, r^i∨⟩ r^i
      int pairing = 0;
      for (int k = 0; k < n; ++k) pairing += a[i][k] * v[k];
      if (pairing == 0) continue;
      auto w = v;
      w[i] -= pairing;
      if (seen.insert(w).second) work.push(std::move(w));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> positive_roots(const DynkinDiagram& d) {
  std::vector<std::vector<int>> out;
  for (auto& r : root_system(d))
    if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) out.push_back(std::move(r));
  return out;
}

int WeightDiagram::find(const RootCoords& r) const {
  for (std::size_t k = 0; k < weights.size(); ++k)
    if (weights[k].root == r) return static_cast<int>(k);
  return -1;
}

std::vector<double> to_cartesian(const DynkinDiagram& d, const RootCoords& r) {
  const auto roots = simple_roots(d);
  std::vector<double> x(d.rank, 0.0);
  for (int k = 0; k < d.rank; ++k)
    for (int c = 0; c < d.rank; ++c) x[c] += r[k].get_d() * roots[k][c];
  return x;
}

namespace {

void finish_diagram(WeightDiagram& w) {
  const auto& d = w.dynkin;
  const DenseMatrix inv = inverse_cartan(d);
  const auto roots = simple_roots(d);
  for (auto& wt : w.weights) {
    wt.root.assign(d.rank, 0);
    for (int k = 0; k < d.rank; ++k)
      for (int i = 0; i < d.rank; ++i) wt.root[k] += wt.mark[i] * inv(k, i);
    wt.coords.assign(d.rank, 0.0);
    for (int k = 0; k < d.rank; ++k)
      for (int c = 0; c < d.rank; ++c) wt.coords[c] += wt.root[k].get_d() * roots[k][c];
  }
  w.positive_roots = positive_roots(d);
  std::map<std::vector<Rational>, int> root_index;
  for (std::size_t r = 0; r < w.positive_roots.size(); ++r)
    root_index[{w.positive_roots[r].begin(), w.positive_roots[r].end()}] = static_cast<int>(r);
  const int nw = static_cast<int>(w.weights.size());
  for (int a = 0; a < nw; ++a)
    for (int b = 0; b < nw; ++b) {
      std::vector<Rational> diff(d.rank);
      for (int k = 0; k < d.rank; ++k) diff[k] = w.weights[b].root[k] - w.weights[a].root[k];
      auto it = root_index.find(diff);
      if (it != root_index.end()) w.edges.push_back({a, b, it->second});
    }
}

}  // namespace

WeightDiagram weights_from_highest(const DynkinDiagram& d, const std::vector<int>& highest) {
  const auto a = cartan_matrix(d);
  const int n = d.rank;
  if (static_cast<int>(highest.size()) != n) throw std::invalid_argument("mark length differs from rank");
  for (int m : highest)
    if (m < 0) throw std::invalid_argument("highest mark must be dominant");

  // Weights bucketed by depth (number of simple roots subtracted); a string
  // through w only reaches upward into shallower buckets, which are complete.
  std::map<std::vector<int>, int> depth_of;
  std::vector<std::vector<std::vector<int>>> buckets(1, {highest});
  depth_of[highest] = 0;
  auto shifted = [&](std::vector<int> m, int j, int k) {
    for (int i = 0; i < n; ++i) m[i] -= k * a[i][j];
    return m;
  };
  for (std::size_t level = 0; level < buckets.size(); ++level) {
    for (std::size_t idx = 0; idx < buckets[level].size(); ++idx) {
      const auto m = buckets[level][idx];
      for (int j = 0; j < n; ++j) {
        int up = 0;
        while (depth_of.count(shifted(m, j, -(up + 1)))) ++up;
        const int down = m[j] + up;
        for (int k = 1; k <= down; ++k) {
          auto w = shifted(m, j, k);
          if (depth_of.count(w)) continue;
          const std::size_t lv = level + k;
          if (buckets.size() <= lv) buckets.resize(lv + 1);
          depth_of[w] = static_cast<int>(lv);
          buckets[lv].push_back(std::move(w));
        }
      }
    }
  }
  WeightDiagram w{d, highest, {}, {}, {}};
  for (const auto& b : buckets)
    for (const auto& m : b) w.weights.push_back({m, {}, {}});
  finish_diagram(w);
  return w;
}

WeightDiagram root_diagram(const DynkinDiagram& d) {
  const auto a = cartan_matrix(d);
  const int n = d.rank;
  auto mark_of = [&](const std::vector<int>& c) {
    std::vector<int> m(n, 0);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) m[k] += a[k][j] * c[j];
    return m;
  };
  WeightDiagram w{d, {}, {}, {}, {}};
  auto roots = root_system(d);
  int best_height = -1;
  for (const auto& r : roots) {
    const int h = std::accumulate(r.begin(), r.end(), 0);
    if (h > best_height) {
      best_height = h;
      w.highest = mark_of(r);
    }
  }
  // Descending height, origin in the middle.
  std::stable_sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
    return std::accumulate(x.begin(), x.end(), 0) > std::accumulate(y.begin(), y.end(), 0);
  });
  bool origin = false;
  for (const auto& r : roots) {
    if (!origin && std::accumulate(r.begin(), r.end(), 0) < 0) {
      w.weights.push_back({std::vector<int>(n, 0), {}, {}});
      origin = true;
    }
    w.weights.push_back({mark_of(r), {}, {}});
  }
  if (!origin) w.weights.push_back({std::vector<int>(n, 0), {}, {}});
  finish_diagram(w);
  return w;
}

SliceResult slice(const WeightDiagram& w, const RootCoords& normal) {
  const DenseMatrix g = gram_matrix(w.dynkin);
  const int n = w.dynkin.rank;
  SliceResult out{normal, {}, {}};
  std::map<Rational, int> slot;
  std::vector<Rational> level(w.weights.size());
  for (std::size_t v = 0; v < w.weights.size(); ++v) {
    Rational s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += normal[i] * g(i, j) * w.weights[v].root[j];
    level[v] = s;
    slot.emplace(s, 0);
  }
  int k = 0;
  for (auto& [lv, idx] : slot) {
    idx = k++;
    out.slices.push_back({lv, {}, {}});
  }
  for (std::size_t v = 0; v < w.weights.size(); ++v) out.slices[slot[level[v]]].vertices.push_back(static_cast<int>(v));
  for (std::size_t e = 0; e < w.edges.size(); ++e) {
    const auto& edge = w.edges[e];
    if (level[edge.from] == level[edge.to])
      out.slices[slot[level[edge.from]]].edges.push_back(static_cast<int>(e));
    else
      out.struts.push_back(static_cast<int>(e));
  }
  return out;
}

RootCoords normal_orthogonal_to(const DynkinDiagram& d, const std::vector<int>& simple) {
  RootCoords n(d.rank, 0);
  for (int i = 0; i < d.rank; ++i) {
    if (std::find(simple.begin(), simple.end(), i) != simple.end()) continue;
    const auto w = fundamental_weight(d, i);
    for (int k = 0; k < d.rank; ++k) n[k] += w[k];
  }
  return n;
}

PointDiagram points(const WeightDiagram& w) {
  PointDiagram p{w.dynkin.rank, {}};
  for (const auto& wt : w.weights) p.vertices.push_back(wt.coords);
  return p;
}

PointDiagram points(const WeightDiagram& w, const Slice& s) {
  PointDiagram p{w.dynkin.rank, {}};
  for (int v : s.vertices) p.vertices.push_back(w.weights[v].coords);
  return p;
}

namespace {

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

// Orthonormal basis from (p, e¹, …, eⁿ) in order, skipping dependent vectors.
std::vector<std::vector<double>> projection_basis(const std::vector<double>& p) {
  const int n = static_cast<int>(p.size());
  std::vector<std::vector<double>> basis;
  auto push = [&](std::vector<double> v) {
    for (const auto& b : basis) {
      const double c = dot(v, b);
      for (int i = 0; i < n; ++i) v[i] -= c * b[i];
    }
    const double len = std::sqrt(dot(v, v));
    if (len < 1e-9) return;
    for (double& x : v) x /= len;
    basis.push_back(std::move(v));
  };
  push(p);
  for (int i = 0; i < n && static_cast<int>(basis.size()) < n; ++i) {
    std::vector<double> e(n, 0.0);
    e[i] = 1.0;
    push(std::move(e));
  }
  return basis;
}

}  // namespace

PointDiagram project(const PointDiagram& d, std::vector<double> p, ProjectOptions opt) {
  if (std::sqrt(dot(p, p)) < 1e-12) throw std::invalid_argument("projection direction is zero");
  if (opt.perturb && std::any_of(p.begin(), p.end(), [](double x) { return std::abs(x) < 1e-12; }))
    for (double& x : p) x += 0.015;
  const auto basis = projection_basis(p);
  PointDiagram out{d.dim - 1, {}};
  for (const auto& v : d.vertices) {
    std::vector<double> c;
    for (std::size_t b = 1; b < basis.size(); ++b) c.push_back(dot(v, basis[b]));
    out.vertices.push_back(std::move(c));
  }
  return out;
}

PointDiagram collapse(const WeightDiagram& w, const SliceResult& s) {
  const auto basis = projection_basis(to_cartesian(w.dynkin, s.normal));
  PointDiagram out{w.dynkin.rank - 1, {}};
  for (const auto& sl : s.slices)
    for (int v : sl.vertices) {
      std::vector<double> c;
      for (std::size_t b = 1; b < basis.size(); ++b) c.push_back(dot(w.weights[v].coords, basis[b]));
      out.vertices.push_back(std::move(c));
    }
  return out;
}

std::vector<std::vector<double>> distinct_vertices(const PointDiagram& d, double tol) {
  std::set<std::vector<long long>> keys;
  std::vector<std::vector<double>> out;
  for (const auto& v : d.vertices) {
    std::vector<long long> key;
    for (double x : v) key.push_back(std::llround(x / tol));
    if (keys.insert(key).second) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int numeric_rank(const std::vector<std::vector<double>>& vs, std::vector<int>* picked = nullptr);
int rank_of(const std::vector<std::vector<double>>& vs) { return numeric_rank(vs); }

struct EmbedSearch {
  const std::vector<std::vector<double>>& basis;   // from D1
  const std::vector<std::vector<double>>& coeffs;  // every D1 vertex over the basis
  const std::vector<bool>& outer1;                 // D1 vertex on its outer shell
  const std::vector<std::vector<double>>& targets; // D2 nonzero vertices
  const std::vector<std::vector<double>>& all2;    // D2 vertices including origin
  double outer2;                                   // max |v|² in D2
  bool shell_rule;
  EmbedOptions opt;
  std::size_t visited = 0;
  std::vector<int> chosen;
  double scale = 0;

  bool near(double x, double y) const { return std::abs(x - y) <= opt.tol * std::max(1.0, std::abs(y)); }

  bool in_d2(const std::vector<double>& v) const {
    for (const auto& w : all2) {
      double s = 0;
      for (std::size_t i = 0; i < v.size(); ++i) s += (v[i] - w[i]) * (v[i] - w[i]);
      if (s <= opt.tol * opt.tol * 100) return true;
    }
    return false;
  }

  bool complete() const {
    const std::size_t dim = targets.front().size();
    if (!opt.similarity) {
      std::vector<std::vector<double>> imgs;
      for (int c : chosen) imgs.push_back(targets[c]);
      if (rank_of(imgs) != static_cast<int>(chosen.size())) return false;
    }
    for (std::size_t v = 0; v < coeffs.size(); ++v) {
      std::vector<double> img(dim, 0.0);
      for (std::size_t b = 0; b < chosen.size(); ++b)
        for (std::size_t c = 0; c < dim; ++c) img[c] += coeffs[v][b] * targets[chosen[b]][c];
      if (!in_d2(img)) return false;
      if (shell_rule && outer1[v] && !near(dot(img, img), outer2)) return false;
    }
    return true;
  }

  bool run(std::size_t k) {
    if (k == basis.size()) return complete();
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (++visited > opt.budget) throw SearchBudgetExceeded("embedding search exceeded its budget");
      const auto& v = targets[t];
      if (!opt.similarity) {
        // no metric pruning
      } else if (k == 0) {
        scale = dot(v, v) / dot(basis[0], basis[0]);
      } else {
        if (!near(dot(v, v), scale * dot(basis[k], basis[k]))) continue;
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i)
          ok = near(dot(v, targets[chosen[i]]), scale * dot(basis[k], basis[i]));
        if (!ok) continue;
      }
      chosen.push_back(static_cast<int>(t));
      if (run(k + 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

int numeric_rank(const std::vector<std::vector<double>>& vs, std::vector<int>* picked) {
  std::vector<std::vector<double>> ortho;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    auto v = vs[k];
    for (const auto& b : ortho) {
      const double c = dot(v, b);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * b[i];
    }
    const double len = std::sqrt(dot(v, v));
    if (len < 1e-7) continue;
    for (double& x : v) x /= len;
    ortho.push_back(std::move(v));
    if (picked) picked->push_back(static_cast<int>(k));
  }
  return static_cast<int>(ortho.size());
}

bool is_origin(const std::vector<double>& v, double tol) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return std::abs(x) <= tol; });
}

}  // namespace

bool embed_check(const PointDiagram& d1, const PointDiagram& d2, EmbedOptions opt) {
  std::vector<std::vector<double>> v1, v2;
  const auto all1 = distinct_vertices(d1, opt.tol), all2 = distinct_vertices(d2, opt.tol);
  for (const auto& v : all1)
    if (!is_origin(v, opt.tol)) v1.push_back(v);
  for (const auto& v : all2)
    if (!is_origin(v, opt.tol)) v2.push_back(v);
  if (v1.empty()) return std::any_of(all2.begin(), all2.end(), [&](const auto& v) { return is_origin(v, opt.tol); });
  if (v2.empty()) return false;

  std::vector<int> picked;
  const int r1 = numeric_rank(v1, &picked);
  const int r2 = numeric_rank(v2);
  if (r1 > r2) return false;
  std::vector<std::vector<double>> basis;
  for (int k : picked) basis.push_back(v1[k]);

  // Coefficients of every D1 vertex over the basis via the inverse Gram matrix.
  const int m = r1;
  std::vector<std::vector<double>> gram(m, std::vector<double>(m)), ginv(m, std::vector<double>(m, 0.0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) gram[i][j] = dot(basis[i], basis[j]);
  for (int i = 0; i < m; ++i) ginv[i][i] = 1.0;
  for (int c = 0; c < m; ++c) {
    int piv = c;
    for (int r = c + 1; r < m; ++r)
      if (std::abs(gram[r][c]) > std::abs(gram[piv][c])) piv = r;
    std::swap(gram[c], gram[piv]);
    std::swap(ginv[c], ginv[piv]);
    const double inv = 1.0 / gram[c][c];
    for (int j = 0; j < m; ++j) {
      gram[c][j] *= inv;
      ginv[c][j] *= inv;
    }
    for (int r = 0; r < m; ++r) {
      if (r == c) continue;
      const double f = gram[r][c];
      for (int j = 0; j < m; ++j) {
        gram[r][j] -= f * gram[c][j];
        ginv[r][j] -= f * ginv[c][j];
      }
    }
  }
  std::vector<std::vector<double>> coeffs;
  double outer1 = 0, outer2 = 0;
  for (const auto& v : v1) {
    std::vector<double> rhs(m), c(m, 0.0);
    for (int i = 0; i < m; ++i) rhs[i] = dot(basis[i], v);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) c[i] += ginv[i][j] * rhs[j];
    coeffs.push_back(std::move(c));
    outer1 = std::max(outer1, dot(v, v));
  }
  for (const auto& v : v2) outer2 = std::max(outer2, dot(v, v));
  std::vector<bool> on_shell;
  for (const auto& v : v1) on_shell.push_back(std::abs(dot(v, v) - outer1) <= opt.tol * std::max(1.0, outer1));

  EmbedSearch s{basis, coeffs, on_shell, v2, all2, outer2, opt.similarity && opt.highest_weight_rule && r1 == r2,
                opt, 0, {}, 0};
  return s.run(0);
}

}  // namespace e6
