#include "qc2/matrix.hpp"

namespace qc2 {

Matrix Matrix::identity(FieldPtr field, int n) {
  Matrix m(std::move(field), n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<int>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(std::move(field), r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      fail(ErrorKind::Parse, "ragged row lengths");
    for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols_ != bottom.cols_ || !top.field_->same(*bottom.field_))
    fail(ErrorKind::SpecMismatch, "vstack shape or field mismatch");
  Matrix m(top.field_, top.rows_ + bottom.rows_, top.cols_);
  m.a_ = top.a_;
  m.a_.insert(m.a_.end(), bottom.a_.begin(), bottom.a_.end());
  return m;
}

void Matrix::append_row(std::span<const int> r) {
  if (static_cast<int>(r.size()) != cols_)
    fail(ErrorKind::SpecMismatch, "append_row length mismatch");
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

bool Matrix::is_zero() const {
  for (int v : a_)
    if (v != 0) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_ || !a.field_->same(*b.field_))
    fail(ErrorKind::SpecMismatch, "matrix product shape or field mismatch");
  const Field& f = *a.field_;
  Matrix c(a.field_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      int v = a.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < b.cols_; ++j)
        c.set(i, j, f.add(c.at(i, j), f.mul(v, b.at(k, j))));
    }
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

RrefResult rref(const Matrix& m) {
  Matrix r = m;
  const Field& f = *m.field();
  int rank = 0;
  std::vector<int> pivots;
  for (int col = 0; col < r.cols() && rank < r.rows(); ++col) {
    int pivot = -1;
    for (int i = rank; i < r.rows(); ++i)
      if (r.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < r.cols(); ++j) {
        int t = r.at(rank, j);
        r.set(rank, j, r.at(pivot, j));
        r.set(pivot, j, t);
      }
    int s = f.inv(r.at(rank, col));
    if (s != 1)
      for (int j = col; j < r.cols(); ++j) r.set(rank, j, f.mul(s, r.at(rank, j)));
    for (int i = 0; i < r.rows(); ++i) {
      if (i == rank) continue;
      int v = r.at(i, col);
      if (v == 0) continue;
      for (int j = col; j < r.cols(); ++j)
        r.set(i, j, f.sub(r.at(i, j), f.mul(v, r.at(rank, j))));
    }
    pivots.push_back(col);
    ++rank;
  }
  return {std::move(r), rank, std::move(pivots)};
}

Matrix rref_basis(const Matrix& m) {
  RrefResult rr = rref(m);
  Matrix b(m.field(), rr.rank, m.cols());
  for (int i = 0; i < rr.rank; ++i)
    for (int j = 0; j < m.cols(); ++j) b.set(i, j, rr.mat.at(i, j));
  return b;
}

Matrix nullspace(const Matrix& m) {
  RrefResult rr = rref(m);
  const Field& f = *m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : rr.pivots) is_pivot[c] = true;
  Matrix ns(m.field(), m.cols() - rr.rank, m.cols());
  int row = 0;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ns.set(row, free, 1);
    for (int i = 0; i < rr.rank; ++i)
      ns.set(row, rr.pivots[i], f.neg(rr.mat.at(i, free)));
    ++row;
  }
  return ns;
}

bool rref_contains(const Matrix& basis, std::span<const int> row) {
  const Field& f = *basis.field();
  std::vector<int> w(row.begin(), row.end());
  for (int i = 0; i < basis.rows(); ++i) {
    // Pivot column of basis row i: first nonzero entry (unit by rref).
    int pc = -1;
    for (int j = 0; j < basis.cols(); ++j)
      if (basis.at(i, j) != 0) {
        pc = j;
        break;
      }
    if (pc < 0) continue;
    int v = w[pc];
    if (v == 0) continue;
    for (int j = pc; j < basis.cols(); ++j)
      w[j] = f.sub(w[j], f.mul(v, basis.at(i, j)));
  }
  for (int v : w)
    if (v != 0) return false;
  return true;
}

bool same_row_space(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() || !a.field()->same(*b.field())) return false;
  return rref_basis(a) == rref_basis(b);
}

}  // namespace qc2
