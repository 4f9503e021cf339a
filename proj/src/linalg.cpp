#include "e6/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace e6 {

SparseVec axpy(const SparseVec& x, const Rational& a, const SparseVec& y) {
  if (is_zero(a)) return x;
  SparseVec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, a * y[j].second);
      ++j;
    } else {
      Rational v = x[i].second + a * y[j].second;
      if (!is_zero(v)) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec scaled(const SparseVec& x, const Rational& a) {
  if (is_zero(a)) return {};
  SparseVec out = x;
  for (auto& [k, v] : out) v *= a;
  return out;
}

SparseVec unit_vector(int i, const Rational& v) {
  if (is_zero(v)) return {};
  return {{i, v}};
}

Rational coefficient(const SparseVec& x, int i) {
  auto it = std::lower_bound(x.begin(), x.end(), i, [](const auto& e, int k) { return e.first < k; });
  if (it != x.end() && it->first == i) return it->second;
  return 0;
}

SparseVec from_dense(const std::vector<Rational>& v) {
  SparseVec out;
  for (int k = 0; k < static_cast<int>(v.size()); ++k)
    if (!is_zero(v[k])) out.emplace_back(k, v[k]);
  return out;
}

std::vector<Rational> to_dense(const SparseVec& x, int n) {
  std::vector<Rational> out(n);
  for (const auto& [k, v] : x) out.at(k) = v;
  return out;
}

const Reducer::Row* Reducer::pivot(int col) const {
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), std::make_pair(col, -1));
  if (it != pivots_.end() && it->first == col) return &rows_[it->second];
  return nullptr;
}

// Eliminates leading terms until v is zero or leads with a column that has no pivot.
// `expr` accumulates the combination subtracted from v.
std::pair<SparseVec, SparseVec> Reducer::reduce(SparseVec v, SparseVec expr) const {
  while (!v.empty()) {
    const Row* row = pivot(v.front().first);
    if (!row) break;
    Rational c = v.front().second;
    v = axpy(v, -c, row->vec);
    expr = axpy(expr, c, row->expr);
  }
  return {std::move(v), std::move(expr)};
}

std::optional<SparseVec> Reducer::insert(const SparseVec& v) {
  const int g = count_++;
  auto [rest, used] = reduce(v, {});
  if (rest.empty()) return used;
  // rest = v − Σ used = generator g − Σ used
  SparseVec expr = scaled(used, -1);
  expr = axpy(expr, 1, unit_vector(g));
  Rational lead = rest.front().second;
  Rational inv = 1 / lead;
  Row row{scaled(rest, inv), scaled(expr, inv)};
  int col = row.vec.front().first;
  rows_.push_back(std::move(row));
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), std::make_pair(col, -1));
  pivots_.insert(it, {col, static_cast<int>(rows_.size()) - 1});
  return std::nullopt;
}

std::optional<SparseVec> Reducer::express(const SparseVec& v) const {
  auto [rest, used] = reduce(v, {});
  if (!rest.empty()) return std::nullopt;
  return used;
}

bool Reducer::contains(const SparseVec& v) const { return express(v).has_value(); }

bool DenseMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

namespace {

// In-place row echelon form; returns pivot columns.
std::vector<int> echelon(DenseMatrix& m, Rational* det_sign = nullptr) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int best = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!is_zero(m(i, c))) {
        best = i;
        break;
      }
    if (best < 0) continue;
    if (best != r) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(best, j));
      if (det_sign) *det_sign = -*det_sign;
    }
    Rational inv = 1 / m(r, c);
    for (int i = r + 1; i < m.rows(); ++i) {
      if (is_zero(m(i, c))) continue;
      Rational f = m(i, c) * inv;
      for (int j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(DenseMatrix m) { return static_cast<int>(echelon(m).size()); }

Rational determinant(DenseMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  Rational sign = 1;
  auto piv = echelon(m, &sign);
  if (static_cast<int>(piv.size()) < m.rows()) return 0;
  Rational d = sign;
  for (int i = 0; i < m.rows(); ++i) d *= m(i, i);
  return d;
}

std::vector<std::vector<Rational>> nullspace(DenseMatrix m) {
  auto piv = echelon(m);
  const int r = static_cast<int>(piv.size());
  // back-substitute to reduced form
  for (int i = r - 1; i >= 0; --i) {
    Rational inv = 1 / m(i, piv[i]);
    for (int j = 0; j < m.cols(); ++j) m(i, j) *= inv;
    for (int k = 0; k < i; ++k) {
      if (is_zero(m(k, piv[i]))) continue;
      Rational f = m(k, piv[i]);
      for (int j = 0; j < m.cols(); ++j)
        if (!is_zero(m(i, j))) m(k, j) -= f * m(i, j);
    }
  }
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<std::vector<Rational>> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(m.cols());
    x[f] = 1;
    for (int i = 0; i < r; ++i) x[piv[i]] = -m(i, f);
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<DenseMatrix> inverse(const DenseMatrix& m) {
  const int n = m.rows();
  if (n != m.cols()) return std::nullopt;
  DenseMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = echelon(aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] >= n) return std::nullopt;
  for (int i = n - 1; i >= 0; --i) {
    Rational inv = 1 / aug(i, i);
    for (int j = 0; j < 2 * n; ++j) aug(i, j) *= inv;
    for (int k = 0; k < i; ++k) {
      Rational f = aug(k, i);
      if (is_zero(f)) continue;
      for (int j = 0; j < 2 * n; ++j) aug(k, j) -= f * aug(i, j);
    }
  }
  DenseMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

Signature signature(DenseMatrix a) {
  if (!a.is_symmetric()) throw std::invalid_argument("signature of a non-symmetric form");
  const int n = a.rows();
  Signature s;
  // Symmetric elimination on the trailing block [k, n).
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (!is_zero(a(i, i))) {
        p = i;
        break;
      }
    if (p < 0) {
      // Zero diagonal: find a nonzero off-diagonal entry and add row/column j into i.
      int pi = -1, pj = -1;
      for (int i = k; i < n && pi < 0; ++i)
        for (int j = i + 1; j < n; ++j)
          if (!is_zero(a(i, j))) {
            pi = i;
            pj = j;
            break;
          }
      if (pi < 0) {
        s.zero += n - k;
        break;
      }
      for (int j = 0; j < n; ++j) a(pi, j) += a(pj, j);
      for (int j = 0; j < n; ++j) a(j, pi) += a(j, pj);
      p = pi;
    }
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      for (int j = 0; j < n; ++j) std::swap(a(j, p), a(j, k));
    }
    const Rational d = a(k, k);
    if (sgn(d) > 0) ++s.plus;
    else ++s.minus;
    Rational inv = 1 / d;
    for (int i = k + 1; i < n; ++i) {
      if (is_zero(a(i, k))) continue;
      Rational f = a(i, k) * inv;
      for (int j = k; j < n; ++j)
        if (!is_zero(a(k, j))) a(i, j) -= f * a(k, j);
    }
    for (int i = k + 1; i < n; ++i) a(k, i) = 0;
    for (int i = k + 1; i < n; ++i) a(i, k) = 0;
  }
  return s;
}

DenseMatrix restrict_form(const DenseMatrix& form, const std::vector<SparseVec>& rows) {
  const int m = static_cast<int>(rows.size());
  DenseMatrix out(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      Rational s = 0;
      for (const auto& [a, x] : rows[i])
        for (const auto& [b, y] : rows[j]) s += x * form(a, b) * y;
      out(i, j) = s;
      out(j, i) = s;
    }
  return out;
}

}  // namespace e6
