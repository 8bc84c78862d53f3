#ifndef QC2_POLY_HPP
#define QC2_POLY_HPP

#include <string>
#include <tuple>
#include <vector>

#include "qc2/gf.hpp"

namespace qc2 {

/// Dense univariate polynomial over a Field, packed coefficient values in
/// ascending degree, normalized (no trailing zeros; the zero polynomial has
/// an empty coefficient vector).
struct Poly {
  FieldPtr field;
  std::vector<int> c;

  static Poly zero(FieldPtr f) { return {std::move(f), {}}; }
  static Poly one(FieldPtr f) { return {std::move(f), {1}}; }
  static Poly from_coeffs(FieldPtr f, std::vector<int> coeffs);
  static Poly xn_minus_one(FieldPtr f, int n);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool is_one() const { return c.size() == 1 && c[0] == 1; }
  bool is_monic() const { return !c.empty() && c.back() == 1; }
  int coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c.size()) ? c[k] : 0;
  }
  int eval(int a) const;
  Poly monic() const;
  std::string str() const;  // e.g. "1 + w*x + x^2"

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field->same(*b.field) && a.c == b.c;
  }

  void trim();
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& b);

/// Monic g = gcd(a, b) together with u, v such that u*a + v*b = g.
std::tuple<Poly, Poly, Poly> extended_gcd(const Poly& a, const Poly& b);

}  // namespace qc2

#endif
