#include "qc2/gf.hpp"

#include <algorithm>
#include <cctype>

namespace qc2 {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::BadCharacteristic: return "BadCharacteristic";
    case ErrorKind::BasisMismatch: return "BasisMismatch";
    case ErrorKind::OverlapViolation: return "OverlapViolation";
    case ErrorKind::NotUnit: return "NotUnit";
    case ErrorKind::EquivalenceViolation: return "EquivalenceViolation";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense polynomials over Z_p, ascending coefficients, no trailing zeros.
using ZpPoly = std::vector<int>;

void zp_trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a by monic b.
ZpPoly zp_mod(ZpPoly a, const ZpPoly& b, long long p) {
  zp_trim(a);
  int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    int k = static_cast<int>(a.size()) - 1 - db;
    long long c = a.back();
    for (int i = 0; i <= db; ++i) {
      long long t = a[k + i] - c * b[i] % p;
      a[k + i] = static_cast<int>(((t % p) + p) % p);
    }
    zp_trim(a);
  }
  return a;
}

bool zp_is_irreducible(const ZpPoly& f, long long p) {
  int d = static_cast<int>(f.size()) - 1;
  if (d < 1) return false;
  if (d == 1) return true;
  if (f[0] == 0) return false;  // divisible by t
  // Trial division by every monic polynomial of degree 1..d/2.
  for (int dd = 1; dd <= d / 2; ++dd) {
    ZpPoly g(dd + 1, 0);
    g[dd] = 1;
    long long combos = 1;
    for (int i = 0; i < dd; ++i) combos *= p;
    for (long long idx = 0; idx < combos; ++idx) {
      long long t = idx;
      for (int i = 0; i < dd; ++i) {
        g[i] = static_cast<int>(t % p);
        t /= p;
      }
      if (zp_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Lexicographically smallest (ascending coefficient sequence) monic
// irreducible of degree m over Z_p.
ZpPoly smallest_irreducible(long long p, int m) {
  ZpPoly f(m + 1, 0);
  f[m] = 1;
  std::vector<int> digits(m, 0);
  while (true) {
    for (int i = 0; i < m; ++i) f[i] = digits[i];
    if (zp_is_irreducible(f, p)) return f;
    // Advance in lex order: digits[0] is the most significant position.
    int i = m - 1;
    while (i >= 0 && digits[i] == p - 1) digits[i--] = 0;
    if (i < 0) fail(ErrorKind::Internal, "no irreducible polynomial found");
    ++digits[i];
  }
}

}  // namespace

FieldPtr Field::make(long long p, int m, std::optional<std::vector<int>> modulus,
                     long long cap) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1) fail(ErrorKind::Parse, "extension degree must be positive");
  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > cap)
      fail(ErrorKind::CapExceeded,
           "q = " + std::to_string(p) + "^" + std::to_string(m) +
               " exceeds cap " + std::to_string(cap));
  }

  std::vector<int> mod;
  if (modulus) {
    mod = *modulus;
    if (static_cast<int>(mod.size()) != m + 1 || mod.back() != 1)
      fail(ErrorKind::NotIrreducible, "modulus must be monic of degree m");
    for (int c : mod)
      if (c < 0 || c >= p)
        fail(ErrorKind::NotIrreducible, "modulus coefficient out of [0, p)");
    if (!zp_is_irreducible(mod, p))
      fail(ErrorKind::NotIrreducible, "supplied modulus is reducible over Z_p");
  } else {
    mod = smallest_irreducible(p, m);
  }

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->m_ = m;
  f->q_ = q;
  f->modulus_ = std::move(mod);
  if (q <= kTableLimit) {
    f->add_tab_.resize(q * q);
    f->mul_tab_.resize(q * q);
    f->neg_tab_.resize(q);
    f->inv_tab_.assign(q, 0);
    for (int a = 0; a < q; ++a) {
      f->neg_tab_[a] = static_cast<uint16_t>(f->neg_slow(a));
      for (int b = 0; b < q; ++b) {
        f->add_tab_[a * q + b] = static_cast<uint16_t>(f->add_slow(a, b));
        f->mul_tab_[a * q + b] = static_cast<uint16_t>(f->mul_slow(a, b));
      }
    }
    for (int a = 1; a < q; ++a)
      for (int b = 1; b < q; ++b)
        if (f->mul_tab_[a * q + b] == 1) f->inv_tab_[a] = static_cast<uint16_t>(b);
    f->tables_ = true;
  }
  return f;
}

bool Field::same(const Field& other) const {
  if (this == &other) return true;
  return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
}

std::string Field::label() const {
  return m_ == 1 ? std::to_string(p_)
                 : std::to_string(p_) + "^" + std::to_string(m_);
}

int Field::add_slow(int a, int b) const {
  int r = 0, pw = 1;
  for (int i = 0; i < m_; ++i) {
    int ca = static_cast<int>((a / pw) % p_), cb = static_cast<int>((b / pw) % p_);
    r += static_cast<int>((ca + cb) % p_) * pw;
    pw = static_cast<int>(pw * p_);
  }
  return r;
}

int Field::neg_slow(int a) const {
  int r = 0, pw = 1;
  for (int i = 0; i < m_; ++i) {
    int c = static_cast<int>((a / pw) % p_);
    r += static_cast<int>((p_ - c) % p_) * pw;
    pw = static_cast<int>(pw * p_);
  }
  return r;
}

int Field::mul_slow(int a, int b) const {
  // Convolve coefficient vectors, then reduce modulo the field modulus.
  std::vector<int> ca = to_coeffs(a), cb = to_coeffs(b);
  std::vector<int> prod(2 * m_ - 1, 0);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      prod[i + j] = static_cast<int>((prod[i + j] + 1LL * ca[i] * cb[j]) % p_);
  for (int k = 2 * m_ - 2; k >= m_; --k) {
    long long c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (int i = 0; i < m_; ++i) {
      long long t = prod[k - m_ + i] - c * modulus_[i] % p_;
      prod[k - m_ + i] = static_cast<int>(((t % p_) + p_) % p_);
    }
  }
  prod.resize(m_);
  return from_coeffs(prod);
}

int Field::inv(int a) const {
  if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in " + label());
  if (tables_) return inv_tab_[a];
  return pow(a, q_ - 2);
}

int Field::pow(int a, long long e) const {
  int r = 1, base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

int Field::from_int(long long v) const {
  long long r = ((v % p_) + p_) % p_;
  return static_cast<int>(r);
}

int Field::from_coeffs(const std::vector<int>& coeffs) const {
  int r = 0, pw = 1;
  for (int i = 0; i < m_; ++i) {
    int c = i < static_cast<int>(coeffs.size()) ? coeffs[i] : 0;
    if (c < 0 || c >= p_) fail(ErrorKind::Parse, "coefficient out of [0, p)");
    r += c * pw;
    pw = static_cast<int>(pw * p_);
  }
  return r;
}

std::vector<int> Field::to_coeffs(int v) const {
  std::vector<int> c(m_);
  for (int i = 0; i < m_; ++i) {
    c[i] = static_cast<int>(v % p_);
    v = static_cast<int>(v / p_);
  }
  return c;
}

Field::Element Field::element(int v) const {
  if (v < 0 || v >= q_) fail(ErrorKind::Parse, "element value out of range");
  return {shared_from_this(), v};
}

Field::Element Field::zero() const { return {shared_from_this(), 0}; }
Field::Element Field::one() const { return {shared_from_this(), 1}; }

std::vector<Field::Element> Field::elements() const {
  std::vector<Element> out;
  out.reserve(q_);
  for (int v = 0; v < q_; ++v) out.emplace_back(shared_from_this(), v);
  return out;
}

int Field::parse(const std::string& token) const {
  std::string s;
  for (char c : token)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty() || s.back() == '+')
    fail(ErrorKind::Parse, "malformed element token '" + token + "'");
  int acc = 0;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t end = s.find('+', pos);
    std::string term = s.substr(pos, end == std::string::npos ? end : end - pos);
    pos = end == std::string::npos ? s.size() : end + 1;
    if (term.empty()) fail(ErrorKind::Parse, "malformed element token '" + token + "'");
    size_t i = 0;
    long long digits = -1;
    while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) {
      if (digits < 0) digits = 0;
      digits = digits * 10 + (term[i] - '0');
      ++i;
    }
    int value = from_int(digits < 0 ? 1 : digits);
    if (i < term.size()) {
      if (term[i] != 'w')
        fail(ErrorKind::Parse, "unexpected character in element token '" + token + "'");
      if (m_ < 2)
        fail(ErrorKind::Parse, "'w' is undefined in the prime field " + label());
      ++i;
      long long exp = 1;
      if (i < term.size()) {
        if (term[i] != '^' || ++i >= term.size())
          fail(ErrorKind::Parse, "malformed power in element token '" + token + "'");
        exp = 0;
        while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i])))
          exp = exp * 10 + (term[i++] - '0');
        if (i != term.size())
          fail(ErrorKind::Parse, "malformed power in element token '" + token + "'");
      }
      int w = from_coeffs({0, 1});
      value = mul(value, pow(w, exp));
    } else if (digits < 0) {
      fail(ErrorKind::Parse, "malformed element token '" + token + "'");
    }
    acc = add(acc, value);
  }
  return acc;
}

std::string Field::format(int v) const {
  if (m_ == 1) return std::to_string(v);
  std::vector<int> c = to_coeffs(v);
  std::string out;
  for (int i = 0; i < m_; ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
    } else {
      if (c[i] != 1) out += std::to_string(c[i]);
      out += i == 1 ? "w" : "w^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace qc2
