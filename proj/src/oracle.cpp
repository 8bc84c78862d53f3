#include "qc2/oracle.hpp"

#include <functional>

namespace qc2 {

namespace {

void check_cols(const Matrix& g, int n) {
  if (g.cols() != 2 * n)
    fail(ErrorKind::SpecMismatch, "generator matrix must have 2n columns");
}

std::vector<int> bar_half(std::span<const int> half, int n) {
  std::vector<int> out(n);
  out[0] = half[0];
  for (int k = 1; k < n; ++k) out[k] = half[n - k];
  return out;
}

bool closed_under(const Matrix& g,
                  const std::function<std::vector<int>(std::span<const int>)>& map) {
  Matrix basis = rref_basis(g);
  for (int i = 0; i < basis.rows(); ++i)
    if (!rref_contains(basis, map(basis.row(i)))) return false;
  return true;
}

}  // namespace

std::vector<int> shift_image(const Field&, std::span<const int> row, int n) {
  std::vector<int> out(2 * n);
  for (int k = 0; k < n; ++k) {
    out[k] = row[(k + n - 1) % n];
    out[n + k] = row[n + (k + n - 1) % n];
  }
  return out;
}

std::vector<int> y_image(const Field&, std::span<const int> row, int n) {
  std::vector<int> a = bar_half(row.subspan(n, n), n);
  std::vector<int> b = bar_half(row.subspan(0, n), n);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<int> ytilde_image(const Field& f, std::span<const int> row, int n) {
  std::vector<int> out = y_image(f, row, n);
  for (int k = 0; k < n; ++k) out[k] = f.neg(out[k]);
  return out;
}

bool oracle_self_dual(const Matrix& g, int n) {
  check_cols(g, n);
  if (rref(g).rank != n) return false;
  return (g * g.transpose()).is_zero();
}

bool oracle_shift_invariant(const Matrix& g, int n) {
  check_cols(g, n);
  const Field& f = *g.field();
  return closed_under(g, [&](std::span<const int> r) { return shift_image(f, r, n); });
}

bool oracle_y_closed(const Matrix& g, int n) {
  check_cols(g, n);
  const Field& f = *g.field();
  return closed_under(g, [&](std::span<const int> r) { return y_image(f, r, n); });
}

bool oracle_ytilde_closed(const Matrix& g, int n) {
  check_cols(g, n);
  const Field& f = *g.field();
  return closed_under(g, [&](std::span<const int> r) { return ytilde_image(f, r, n); });
}

std::optional<GroupAlgebraElement> oracle_double_circulant(const Matrix& g, int n) {
  check_cols(g, n);
  Matrix basis = rref_basis(g);
  if (basis.rows() != n) return std::nullopt;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (basis.at(i, j) != (i == j ? 1 : 0)) return std::nullopt;
  // Right block must be circulant: each row the right shift of the previous.
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (basis.at(i, n + j) != basis.at(i - 1, n + (j + n - 1) % n))
        return std::nullopt;
  auto alg = GroupAlgebra::make(g.field(), n);
  std::vector<int> a(n);
  for (int j = 0; j < n; ++j) a[j] = basis.at(0, n + j);
  return alg->from_coeffs(std::move(a));
}

int oracle_min_distance(const Matrix& g, long long cap) {
  Matrix basis = rref_basis(g);
  int k = basis.rows();
  if (k == 0) return 0;
  long long q = g.field()->q();
  long long total = 1;
  for (int i = 0; i < k; ++i) {
    total *= q;
    if (total > cap) fail(ErrorKind::CapExceeded, "codeword enumeration too large");
  }
  const Field& f = *g.field();
  int best = g.cols() + 1;
  std::vector<int> word(g.cols());
  for (long long idx = 1; idx < total; ++idx) {
    std::fill(word.begin(), word.end(), 0);
    long long t = idx;
    for (int i = 0; i < k; ++i) {
      int c = static_cast<int>(t % q);
      t /= q;
      if (c == 0) continue;
      for (int j = 0; j < g.cols(); ++j)
        word[j] = f.add(word[j], f.mul(c, basis.at(i, j)));
    }
    int w = 0;
    for (int v : word)
      if (v != 0) ++w;
    if (w < best) best = w;
  }
  return best;
}

}  // namespace qc2
