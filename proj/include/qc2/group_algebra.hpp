#ifndef QC2_GROUP_ALGEBRA_HPP
#define QC2_GROUP_ALGEBRA_HPP

#include <memory>
#include <string>
#include <vector>

#include "qc2/gf.hpp"
#include "qc2/poly.hpp"

namespace qc2 {

class GroupAlgebra;
using GroupAlgebraPtr = std::shared_ptr<const GroupAlgebra>;
class Matrix;

/// The group algebra FH = F_q[x]/(x^n - 1) of the cyclic group of order n,
/// under the standing hypothesis gcd(n, q) = 1 (checked at construction).
/// Elements are length-n coefficient vectors of packed field values; the
/// element a0 + a1 x + ... + a_{n-1} x^{n-1} is identified with the word
/// (a0, ..., a_{n-1}) in F^n.
class GroupAlgebra : public std::enable_shared_from_this<GroupAlgebra> {
 public:
  static GroupAlgebraPtr make(FieldPtr field, int n);

  const FieldPtr& field() const { return field_; }
  int n() const { return n_; }
  long long q() const { return field_->q(); }
  bool same(const GroupAlgebra& other) const {
    return n_ == other.n_ && field_->same(*other.field_);
  }

  class Element;
  Element zero() const;
  Element one() const;
  Element monomial(int k, int coeff = 1) const;  // coeff * x^k
  Element from_coeffs(std::vector<int> coeffs) const;
  Element from_poly(const Poly& p) const;  // reduced mod x^n - 1

 private:
  GroupAlgebra(FieldPtr field, int n) : field_(std::move(field)), n_(n) {}
  FieldPtr field_;
  int n_;
};

class GroupAlgebra::Element {
 public:
  Element() = default;
  Element(GroupAlgebraPtr alg, std::vector<int> coeffs);

  const GroupAlgebraPtr& algebra() const { return alg_; }
  const FieldPtr& field() const { return alg_->field(); }
  int n() const { return alg_->n(); }
  const std::vector<int>& coeffs() const { return coeffs_; }
  int coeff(int k) const { return coeffs_[k]; }
  FieldElement coeff_elem(int k) const { return alg_->field()->element(coeffs_[k]); }
  bool is_zero() const;

  /// The bar involution x -> x^{-1}: index 0 fixed, index k -> n - k.
  Element bar() const;
  /// sigma(a) = a0, the coefficient of the group identity.
  FieldElement sigma() const { return coeff_elem(0); }
  Element scaled(int packed_scalar) const;
  std::string str() const;  // coefficient list, e.g. "[1, w, w^2]"

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  Element operator-() const;
  /// Cyclic convolution: c_k = sum_{i+j = k mod n} a_i b_j.
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const FieldElement& s, const Element& a);
  friend bool operator==(const Element& a, const Element& b) {
    return a.alg_->same(*b.alg_) && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

 private:
  GroupAlgebraPtr alg_;
  std::vector<int> coeffs_;
};

using GroupAlgebraElement = GroupAlgebra::Element;

/// Coordinatewise inner product <a, b> = sum a_i b_i.
FieldElement inner(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

/// The circulant matrix a(P): first row (a0, ..., a_{n-1}), each following
/// row the right cyclic shift of the previous one. A ring isomorphism onto
/// the n x n circulant matrices.
Matrix circulant(const GroupAlgebraElement& a);

}  // namespace qc2

#endif
