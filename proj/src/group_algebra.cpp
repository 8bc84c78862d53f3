#include "qc2/group_algebra.hpp"

#include <numeric>

#include "qc2/matrix.hpp"

namespace qc2 {

GroupAlgebraPtr GroupAlgebra::make(FieldPtr field, int n) {
  if (n < 1) fail(ErrorKind::Parse, "n must be positive");
  if (std::gcd(static_cast<long long>(n), field->p()) != 1)
    fail(ErrorKind::NotCoprime,
         "gcd(n, q) = 1 required: n = " + std::to_string(n) + ", q = " +
             std::to_string(field->q()));
  return std::shared_ptr<const GroupAlgebra>(new GroupAlgebra(std::move(field), n));
}

GroupAlgebra::Element GroupAlgebra::zero() const {
  return {shared_from_this(), std::vector<int>(n_, 0)};
}

GroupAlgebra::Element GroupAlgebra::one() const { return monomial(0); }

GroupAlgebra::Element GroupAlgebra::monomial(int k, int coeff) const {
  std::vector<int> c(n_, 0);
  c[((k % n_) + n_) % n_] = coeff;
  return {shared_from_this(), std::move(c)};
}

GroupAlgebra::Element GroupAlgebra::from_coeffs(std::vector<int> coeffs) const {
  return {shared_from_this(), std::move(coeffs)};
}

GroupAlgebra::Element GroupAlgebra::from_poly(const Poly& p) const {
  if (!p.field->same(*field_))
    fail(ErrorKind::SpecMismatch, "polynomial field differs from algebra field");
  std::vector<int> c(n_, 0);
  for (int k = 0; k <= p.degree(); ++k)
    c[k % n_] = field_->add(c[k % n_], p.c[k]);
  return {shared_from_this(), std::move(c)};
}

GroupAlgebra::Element::Element(GroupAlgebraPtr alg, std::vector<int> coeffs)
    : alg_(std::move(alg)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != alg_->n())
    fail(ErrorKind::SpecMismatch, "coefficient vector length differs from n");
}

bool GroupAlgebra::Element::is_zero() const {
  for (int v : coeffs_)
    if (v != 0) return false;
  return true;
}

GroupAlgebra::Element GroupAlgebra::Element::bar() const {
  int n = alg_->n();
  std::vector<int> c(n);
  c[0] = coeffs_[0];
  for (int k = 1; k < n; ++k) c[k] = coeffs_[n - k];
  return {alg_, std::move(c)};
}

GroupAlgebra::Element GroupAlgebra::Element::scaled(int packed_scalar) const {
  const Field& f = *alg_->field();
  std::vector<int> c(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = f.mul(packed_scalar, coeffs_[i]);
  return {alg_, std::move(c)};
}

std::string GroupAlgebra::Element::str() const {
  const Field& f = *alg_->field();
  std::string out = "[";
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ", ";
    out += f.format(coeffs_[i]);
  }
  return out + "]";
}

static void check_same(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (!a.algebra()->same(*b.algebra()))
    fail(ErrorKind::SpecMismatch, "elements of different group algebras");
}

GroupAlgebra::Element operator+(const GroupAlgebraElement& a,
                                const GroupAlgebraElement& b) {
  check_same(a, b);
  const Field& f = *a.field();
  std::vector<int> c(a.n());
  for (int i = 0; i < a.n(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
  return {a.algebra(), std::move(c)};
}

GroupAlgebra::Element GroupAlgebra::Element::operator-() const {
  const Field& f = *alg_->field();
  std::vector<int> c(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = f.neg(coeffs_[i]);
  return {alg_, std::move(c)};
}

GroupAlgebra::Element operator-(const GroupAlgebraElement& a,
                                const GroupAlgebraElement& b) {
  return a + (-b);
}

GroupAlgebra::Element operator*(const GroupAlgebraElement& a,
                                const GroupAlgebraElement& b) {
  check_same(a, b);
  const Field& f = *a.field();
  int n = a.n();
  std::vector<int> c(n, 0);
  for (int i = 0; i < n; ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (b.coeff(j) == 0) continue;
      int k = i + j >= n ? i + j - n : i + j;
      c[k] = f.add(c[k], f.mul(a.coeff(i), b.coeff(j)));
    }
  }
  return {a.algebra(), std::move(c)};
}

GroupAlgebra::Element operator*(const FieldElement& s, const GroupAlgebraElement& a) {
  if (!s.field()->same(*a.field()))
    fail(ErrorKind::SpecMismatch, "scalar field differs from algebra field");
  return a.scaled(s.value());
}

FieldElement inner(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  check_same(a, b);
  const Field& f = *a.field();
  int acc = 0;
  for (int i = 0; i < a.n(); ++i) acc = f.add(acc, f.mul(a.coeff(i), b.coeff(i)));
  return f.element(acc);
}

Matrix circulant(const GroupAlgebraElement& a) {
  int n = a.n();
  Matrix m(a.field(), n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.set(r, c, a.coeff(((c - r) % n + n) % n));
  return m;
}

}  // namespace qc2
