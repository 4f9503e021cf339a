#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "e6/rational.hpp"

namespace e6 {

// Sparse vector over Q, entries sorted by index with no stored zeros.
using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec axpy(const SparseVec& x, const Rational& a, const SparseVec& y);  // x + a·y
SparseVec scaled(const SparseVec& x, const Rational& a);
SparseVec unit_vector(int i, const Rational& v = 1);
Rational coefficient(const SparseVec& x, int i);
SparseVec from_dense(const std::vector<Rational>& v);
std::vector<Rational> to_dense(const SparseVec& x, int n);

// Incremental echelon form that remembers how each row was built from the
// inserted generators, so that membership queries return exact certificates.
class Reducer {
 public:
  // Returns nullopt if v is independent of everything inserted so far;
  // otherwise coefficients c_g over earlier generators with v = Σ c_g·(generator g).
  std::optional<SparseVec> insert(const SparseVec& v);

  // Coefficients c_g with v = Σ c_g·(generator g), or nullopt if v is not in the span.
  std::optional<SparseVec> express(const SparseVec& v) const;

  bool contains(const SparseVec& v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int generators() const { return count_; }

 private:
  struct Row {
    SparseVec vec;   // leading coefficient 1
    SparseVec expr;  // vec = Σ expr_g·(generator g)
  };
  std::pair<SparseVec, SparseVec> reduce(SparseVec v, SparseVec expr) const;
  const Row* pivot(int col) const;

  std::vector<Row> rows_;
  std::vector<std::pair<int, int>> pivots_;  // sorted (column, row index)
  int count_ = 0;
};

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool is_symmetric() const;
  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

int rank(DenseMatrix m);
// Basis of {x : m x = 0}.
std::vector<std::vector<Rational>> nullspace(DenseMatrix m);
Rational determinant(DenseMatrix m);
std::optional<DenseMatrix> inverse(const DenseMatrix& m);

struct Signature {
  int minus = 0;
  int plus = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Exact congruence diagonalization of a symmetric form.
Signature signature(DenseMatrix sym);

// Restriction V B Vᵀ of a bilinear form to the row span of V.
DenseMatrix restrict_form(const DenseMatrix& form, const std::vector<SparseVec>& rows);

}  // namespace e6
