#ifndef QC2_GF_HPP
#define QC2_GF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qc2/errors.hpp"

namespace qc2 {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Exact arithmetic in F_q, q = p^m, as Z_p[t] modulo a fixed monic
/// irreducible. Elements are packed as integers in [0, q): the value
/// c0 + c1*p + ... + c_{m-1}*p^{m-1} encodes the coefficient vector
/// (c0, ..., c_{m-1}) in ascending powers of the residue of t.
///
/// Immutable after construction; safe to share between threads.
class Field : public std::enable_shared_from_this<Field> {
 public:
  static constexpr long long kDefaultCap = 1LL << 16;

  /// Builds F_{p^m}. When no modulus is given, the lexicographically
  /// smallest (by ascending coefficient sequence) monic irreducible of
  /// degree m over Z_p is selected, so construction is deterministic.
  static FieldPtr make(long long p, int m,
                       std::optional<std::vector<int>> modulus = std::nullopt,
                       long long cap = kDefaultCap);

  long long p() const { return p_; }
  int m() const { return m_; }
  long long q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }
  bool same(const Field& other) const;
  std::string label() const;  // "p" or "p^m"

  // Packed-value arithmetic.
  int add(int a, int b) const {
    return tables_ ? add_tab_[a * q_ + b] : add_slow(a, b);
  }
  int mul(int a, int b) const {
    return tables_ ? mul_tab_[a * q_ + b] : mul_slow(a, b);
  }
  int neg(int a) const { return tables_ ? neg_tab_[a] : neg_slow(a); }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const;
  int pow(int a, long long e) const;
  int from_int(long long v) const;  // prime-subfield embedding
  int from_coeffs(const std::vector<int>& coeffs) const;
  std::vector<int> to_coeffs(int v) const;

  class Element;
  Element element(int v) const;
  Element zero() const;
  Element one() const;
  std::vector<Element> elements() const;

  /// Token grammar: digits, 'w', '^', '+'. "w" is the residue of t
  /// (extension fields only); e.g. "1+w", "2w^3". Output is canonical:
  /// one term per nonzero coefficient, ascending powers.
  int parse(const std::string& token) const;
  std::string format(int v) const;

 private:
  Field() = default;
  int add_slow(int a, int b) const;
  int mul_slow(int a, int b) const;
  int neg_slow(int a) const;

  long long p_ = 0;
  int m_ = 0;
  long long q_ = 0;
  std::vector<int> modulus_;  // length m+1, ascending, monic
  bool tables_ = false;
  std::vector<uint16_t> add_tab_, mul_tab_, neg_tab_, inv_tab_;

  static constexpr long long kTableLimit = 256;
};

/// A field element bound to its field; mixed-field arithmetic is a hard
/// error (SpecMismatch), never an implicit coercion.
class Field::Element {
 public:
  Element() = default;
  Element(FieldPtr field, int value) : field_(std::move(field)), v_(value) {}

  const FieldPtr& field() const { return field_; }
  int value() const { return v_; }
  std::vector<int> coeffs() const { return field_->to_coeffs(v_); }
  bool is_zero() const { return v_ == 0; }
  std::string str() const { return field_->format(v_); }

  friend Element operator+(const Element& a, const Element& b) {
    check_same(a, b);
    return {a.field_, a.field_->add(a.v_, b.v_)};
  }
  friend Element operator-(const Element& a, const Element& b) {
    check_same(a, b);
    return {a.field_, a.field_->sub(a.v_, b.v_)};
  }
  friend Element operator*(const Element& a, const Element& b) {
    check_same(a, b);
    return {a.field_, a.field_->mul(a.v_, b.v_)};
  }
  friend Element operator/(const Element& a, const Element& b) {
    check_same(a, b);
    return {a.field_, a.field_->mul(a.v_, b.field_->inv(b.v_))};
  }
  Element operator-() const { return {field_, field_->neg(v_)}; }
  Element inverse() const { return {field_, field_->inv(v_)}; }
  Element pow(long long e) const { return {field_, field_->pow(v_, e)}; }

  friend bool operator==(const Element& a, const Element& b) {
    return a.field_->same(*b.field_) && a.v_ == b.v_;
  }
  friend bool operator!=(const Element& a, const Element& b) {
    return !(a == b);
  }

 private:
  static void check_same(const Element& a, const Element& b) {
    if (!a.field_ || !b.field_ || !a.field_->same(*b.field_))
      fail(ErrorKind::SpecMismatch, "elements belong to different fields");
  }

  FieldPtr field_;
  int v_ = 0;
};

using FieldElement = Field::Element;

}  // namespace qc2

#endif
