#include "qc2/poly.hpp"

#include <utility>

namespace qc2 {

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly Poly::from_coeffs(FieldPtr f, std::vector<int> coeffs) {
  Poly p{std::move(f), std::move(coeffs)};
  p.trim();
  return p;
}

Poly Poly::xn_minus_one(FieldPtr f, int n) {
  std::vector<int> c(n + 1, 0);
  c[0] = f->neg(1);
  c[n] = 1;
  return {std::move(f), std::move(c)};
}

int Poly::eval(int a) const {
  int r = 0;
  for (int k = degree(); k >= 0; --k) r = field->add(field->mul(r, a), c[k]);
  return r;
}

Poly Poly::monic() const {
  if (is_zero() || c.back() == 1) return *this;
  int s = field->inv(c.back());
  Poly r = *this;
  for (int& v : r.c) v = field->mul(v, s);
  return r;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= degree(); ++k) {
    if (c[k] == 0) continue;
    if (!out.empty()) out += " + ";
    std::string co = field->format(c[k]);
    if (k == 0) {
      out += co;
    } else {
      if (co != "1") out += (co.find('+') != std::string::npos ? "(" + co + ")" : co) + "*";
      out += k == 1 ? "x" : "x^" + std::to_string(k);
    }
  }
  return out;
}

static void check_fields(const Poly& a, const Poly& b) {
  if (!a.field->same(*b.field))
    fail(ErrorKind::SpecMismatch, "polynomials over different fields");
}

Poly operator+(const Poly& a, const Poly& b) {
  check_fields(a, b);
  std::vector<int> c(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = a.field->add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return Poly::from_coeffs(a.field, std::move(c));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (int& v : r.c) v = field->neg(v);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  check_fields(a, b);
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.field);
  std::vector<int> c(a.c.size() + b.c.size() - 1, 0);
  const Field& f = *a.field;
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      c[i + j] = f.add(c[i + j], f.mul(a.c[i], b.c[j]));
  }
  return Poly::from_coeffs(a.field, std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  check_fields(a, b);
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  const Field& f = *a.field;
  Poly rem = a;
  int db = b.degree();
  int lead_inv = f.inv(b.c.back());
  std::vector<int> quot(std::max(0, a.degree() - db + 1), 0);
  while (rem.degree() >= db) {
    int k = rem.degree() - db;
    int coef = f.mul(rem.c.back(), lead_inv);
    quot[k] = coef;
    for (int i = 0; i <= db; ++i)
      rem.c[k + i] = f.sub(rem.c[k + i], f.mul(coef, b.c[i]));
    rem.trim();
  }
  return {Poly::from_coeffs(a.field, std::move(quot)), rem};
}

Poly mod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

std::tuple<Poly, Poly, Poly> extended_gcd(const Poly& a, const Poly& b) {
  check_fields(a, b);
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::one(a.field), u1 = Poly::zero(a.field);
  Poly v0 = Poly::zero(a.field), v1 = Poly::one(a.field);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    u0 = std::exchange(u1, u0 - q * u1);
    v0 = std::exchange(v1, v0 - q * v1);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  int s = a.field->inv(r0.c.back());
  Poly sc = Poly::from_coeffs(a.field, {s});
  return {r0 * sc, u0 * sc, v0 * sc};
}

}  // namespace qc2
