#ifndef QC2_MATRIX_HPP
#define QC2_MATRIX_HPP

#include <span>
#include <vector>

#include "qc2/gf.hpp"

namespace qc2 {

/// Dense matrix over a Field, row-major packed values. Exact arithmetic.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, int rows, int cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), a_(1LL * rows * cols, 0) {}

  static Matrix identity(FieldPtr field, int n);
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<int>>& rows);
  static Matrix vstack(const Matrix& top, const Matrix& bottom);

  const FieldPtr& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, int v) { a_[static_cast<size_t>(r) * cols_ + c] = v; }
  std::span<const int> row(int r) const {
    return {a_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)};
  }
  std::vector<int> row_vec(int r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
  }
  void append_row(std::span<const int> r);
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix transpose() const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_->same(*b.field_) &&
           a.a_ == b.a_;
  }

 private:
  FieldPtr field_;
  int rows_ = 0, cols_ = 0;
  std::vector<int> a_;
};

struct RrefResult {
  Matrix mat;
  int rank;
  std::vector<int> pivots;  // pivot column per pivot row
};

/// Reduced row-echelon form by exact Gauss-Jordan elimination with a fixed
/// pivot policy (leftmost column, topmost row), so output is deterministic.
RrefResult rref(const Matrix& m);

/// The nonzero rows of rref(m): the canonical basis of the row space.
Matrix rref_basis(const Matrix& m);

/// Basis of the right kernel {v : m v^T = 0}; rank(result) = cols - rank(m).
Matrix nullspace(const Matrix& m);

/// Membership of a row vector in the row space described by an rref basis.
bool rref_contains(const Matrix& basis, std::span<const int> row);

bool same_row_space(const Matrix& a, const Matrix& b);

}  // namespace qc2

#endif
