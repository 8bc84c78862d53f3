#ifndef QC2_TESTS_SUPPORT_HPP
#define QC2_TESTS_SUPPORT_HPP

#include <random>
#include <set>
#include <string>
#include <vector>

#include "qc2/classify.hpp"
#include "qc2/goursat.hpp"
#include "qc2/oracle.hpp"

namespace qc2::testing {

inline FieldPtr f2() { return Field::make(2, 1); }
inline FieldPtr f3() { return Field::make(3, 1); }
inline FieldPtr f4() { return Field::make(2, 2); }
inline FieldPtr f5() { return Field::make(5, 1); }

inline GroupAlgebraElement random_element(const GroupAlgebraPtr& alg, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(0, static_cast<int>(alg->q()) - 1);
  std::vector<int> c(alg->n());
  for (int& v : c) v = dist(rng);
  return alg->from_coeffs(std::move(c));
}

inline std::string matrix_key(const Matrix& m) {
  std::string k = std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ":";
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) k += std::to_string(m.at(i, j)) + ",";
  return k;
}

inline std::string goursat_key(const GoursatData& d) {
  std::string k = std::to_string(d.c1.support()) + "/" + std::to_string(d.c2.support()) +
                  "/" + std::to_string(d.c12.support()) + "/";
  for (int v : d.g.coeffs()) k += std::to_string(v) + ",";
  return k;
}

/// Canonical rref basis of the FH-closure of a set of words in F^{2n}
/// (closure under the simultaneous shift of both halves).
inline Matrix fh_closure(const FieldPtr& field, const std::vector<std::vector<int>>& words,
                         int n) {
  Matrix rows(field, 0, 2 * n);
  for (const auto& w : words) {
    std::vector<int> cur = w;
    for (int k = 0; k < n; ++k) {
      rows.append_row(cur);
      cur = shift_image(*field, cur, n);
    }
  }
  return rref_basis(rows);
}

/// Every shift-invariant subspace of F^{2n}, found without Goursat data:
/// the FH-closures of all single words, closed under pairwise sum to a
/// fixpoint (every submodule is a finite join of one-generator ones).
inline std::set<std::string> brute_submodules(const FieldPtr& field, int n) {
  long long q = field->q();
  long long total = 1;
  for (int i = 0; i < 2 * n; ++i) total *= q;

  std::set<std::string> seen;
  std::vector<Matrix> mods;
  auto add = [&](const Matrix& m) {
    if (seen.insert(matrix_key(m)).second) mods.push_back(m);
  };
  std::vector<int> w(2 * n);
  for (long long idx = 0; idx < total; ++idx) {
    long long t = idx;
    for (int i = 0; i < 2 * n; ++i) {
      w[i] = static_cast<int>(t % q);
      t /= q;
    }
    add(fh_closure(field, {w}, n));
  }
  for (size_t i = 0; i < mods.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      add(rref_basis(Matrix::vstack(mods[i], mods[j])));
  return seen;
}

/// All q^k words spanned by the rows of a basis matrix.
inline std::set<std::vector<int>> span_words(const Matrix& basis) {
  const Field& f = *basis.field();
  long long q = f.q();
  long long total = 1;
  for (int i = 0; i < basis.rows(); ++i) total *= q;
  std::set<std::vector<int>> out;
  std::vector<int> word(basis.cols());
  for (long long idx = 0; idx < total; ++idx) {
    std::fill(word.begin(), word.end(), 0);
    long long t = idx;
    for (int i = 0; i < basis.rows(); ++i) {
      int c = static_cast<int>(t % q);
      t /= q;
      if (c == 0) continue;
      for (int j = 0; j < basis.cols(); ++j)
        word[j] = f.add(word[j], f.mul(c, basis.at(i, j)));
    }
    out.insert(word);
  }
  return out;
}

}  // namespace qc2::testing

#endif
