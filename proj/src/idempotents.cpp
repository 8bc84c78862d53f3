#include "qc2/idempotents.hpp"

#include <algorithm>
#include <numeric>

namespace qc2 {

std::vector<CyclotomicCoset> cyclotomic_cosets(int n, long long q) {
  if (n < 1) fail(ErrorKind::Parse, "n must be positive");
  if (std::gcd(static_cast<long long>(n), q) != 1)
    fail(ErrorKind::NotCoprime, "gcd(n, q) != 1");
  long long qm = q % n;
  std::vector<bool> seen(n, false);
  std::vector<CyclotomicCoset> out;
  for (int rep = 0; rep < n; ++rep) {
    if (seen[rep]) continue;
    CyclotomicCoset cs{rep, {}};
    long long cur = rep;
    do {
      cs.members.push_back(static_cast<int>(cur));
      seen[cur] = true;
      cur = cur * qm % n;
    } while (cur != rep);
    std::sort(cs.members.begin(), cs.members.end());
    out.push_back(std::move(cs));
  }
  return out;
}

long long mul_order_mod(long long q, int n) {
  if (n < 1) fail(ErrorKind::Parse, "n must be positive");
  if (std::gcd(static_cast<long long>(n), q) != 1)
    fail(ErrorKind::NotCoprime, "gcd(n, q) != 1");
  if (n == 1) return 1;
  long long cur = q % n, ord = 1;
  while (cur != 1) {
    cur = cur * (q % n) % n;
    ++ord;
  }
  return ord;
}

bool ord_is_odd(int n, long long q) { return mul_order_mod(q, n) % 2 == 1; }

bool minus_one_in_q_powers(int n, long long q) {
  if (n < 1) fail(ErrorKind::Parse, "n must be positive");
  if (std::gcd(static_cast<long long>(n), q) != 1)
    fail(ErrorKind::NotCoprime, "gcd(n, q) != 1");
  if (n <= 2) return true;  // -1 = 1 mod 1 and mod 2
  long long cur = 1;
  do {
    cur = cur * (q % n) % n;
    if (cur == n - 1) return true;
  } while (cur != 1);
  return false;
}

namespace {

std::vector<long long> prime_divisors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

int v2(long long x) {
  int v = 0;
  while (x % 2 == 0) {
    x /= 2;
    ++v;
  }
  return v;
}

}  // namespace

bool cond6_even(int n, long long q) {
  if (q < 2 || (q & (q - 1)) != 0)
    fail(ErrorKind::BadCharacteristic, "q must be a power of 2");
  if (n % 2 == 0) fail(ErrorKind::NotCoprime, "n must be odd in characteristic 2");
  int want = -1;
  for (long long p : prime_divisors(n)) {
    int v = v2(mul_order_mod(q, static_cast<int>(p)));
    if (v < 1) return false;
    if (want < 0) want = v;
    if (v != want) return false;
  }
  return true;
}

bool cond6_odd(int n, long long q) {
  if (q % 2 == 0) fail(ErrorKind::BadCharacteristic, "q must be odd");
  if (std::gcd(static_cast<long long>(n), q) != 1)
    fail(ErrorKind::NotCoprime, "gcd(n, q) != 1");
  int l = v2(n);
  if (l < 2) {
    int want = -1;
    for (long long p : prime_divisors(n)) {
      if (p == 2) continue;
      int v = v2(mul_order_mod(q, static_cast<int>(p)));
      if (v < 1) return false;
      if (want < 0) want = v;
      if (v != want) return false;
    }
    return true;
  }
  long long two_l = 1LL << l;
  if (q % two_l != two_l - 1) return false;
  for (long long p : prime_divisors(n)) {
    if (p == 2) continue;
    if (v2(mul_order_mod(q, static_cast<int>(p))) != 1) return false;
  }
  return true;
}

namespace {

// Arithmetic in the splitting extension F_{q^r} = F_q[u]/(h), h monic
// irreducible of degree r over F_q. Elements are length-r vectors of packed
// F_q values. Only what the minimal-polynomial computation needs.
struct SplitField {
  FieldPtr base;
  int r;
  Poly h;

  using Elem = std::vector<int>;

  Elem zero() const { return Elem(r, 0); }
  Elem scalar(int v) const {
    Elem e(r, 0);
    e[0] = v;
    return e;
  }
  Elem from_index(long long idx) const {
    Elem e(r);
    for (int i = 0; i < r; ++i) {
      e[i] = static_cast<int>(idx % base->q());
      idx /= base->q();
    }
    return e;
  }
  bool is_zero(const Elem& a) const {
    for (int v : a)
      if (v) return false;
    return true;
  }
  bool is_scalar(const Elem& a) const {
    for (int i = 1; i < r; ++i)
      if (a[i]) return false;
    return true;
  }
  Elem add(const Elem& a, const Elem& b) const {
    Elem c(r);
    for (int i = 0; i < r; ++i) c[i] = base->add(a[i], b[i]);
    return c;
  }
  Elem neg(const Elem& a) const {
    Elem c(r);
    for (int i = 0; i < r; ++i) c[i] = base->neg(a[i]);
    return c;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    const Field& f = *base;
    std::vector<int> prod(2 * r - 1, 0);
    for (int i = 0; i < r; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < r; ++j)
        prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
    }
    for (int k = 2 * r - 2; k >= r; --k) {
      int c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (int i = 0; i < r; ++i)
        prod[k - r + i] = f.sub(prod[k - r + i], f.mul(c, h.coeff(i)));
    }
    prod.resize(r);
    return prod;
  }
  Elem pow(Elem a, long long e) const {
    Elem acc = scalar(1);
    while (e > 0) {
      if (e & 1) acc = mul(acc, a);
      a = mul(a, a);
      e >>= 1;
    }
    return acc;
  }
};

bool poly_is_irreducible(const Poly& f) {
  int d = f.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  if (f.coeff(0) == 0) return false;
  long long q = f.field->q();
  for (int dd = 1; dd <= d / 2; ++dd) {
    long long combos = 1;
    for (int i = 0; i < dd; ++i) combos *= q;
    std::vector<int> g(dd + 1, 0);
    g[dd] = 1;
    for (long long idx = 0; idx < combos; ++idx) {
      long long t = idx;
      for (int i = 0; i < dd; ++i) {
        g[i] = static_cast<int>(t % q);
        t /= q;
      }
      if (mod(f, Poly{f.field, g}).is_zero()) return false;
    }
  }
  return true;
}

// Lex-smallest (ascending coefficient sequence) monic irreducible of degree
// r over the base field; for r = 1 this is the polynomial u itself.
Poly smallest_irreducible_over(const FieldPtr& field, int r) {
  std::vector<int> digits(r, 0);
  std::vector<int> c(r + 1, 0);
  c[r] = 1;
  while (true) {
    for (int i = 0; i < r; ++i) c[i] = digits[i];
    Poly f{field, c};
    if (r == 1 || poly_is_irreducible(f)) return f;
    int i = r - 1;
    while (i >= 0 && digits[i] == field->q() - 1) digits[i--] = 0;
    if (i < 0) fail(ErrorKind::Internal, "no irreducible polynomial of degree r");
    ++digits[i];
  }
}

}  // namespace

IdempotentBasisPtr IdempotentBasis::compute(FieldPtr field, int n) {
  return compute(GroupAlgebra::make(std::move(field), n));
}

IdempotentBasisPtr IdempotentBasis::compute(GroupAlgebraPtr alg) {
  const FieldPtr& field = alg->field();
  int n = alg->n();
  long long q = field->q();

  auto cosets = cyclotomic_cosets(n, q);
  if (cosets.size() > 64)
    fail(ErrorKind::CapExceeded, "more than 64 primitive idempotents");

  // Splitting field F_{q^r} with n | q^r - 1.
  int r = static_cast<int>(mul_order_mod(q, n));
  long long qr = 1;
  for (int i = 0; i < r; ++i) {
    qr *= q;
    if (qr > kSplitCap)
      fail(ErrorKind::CapExceeded, "splitting field larger than 2^24");
  }
  SplitField ext{field, r, smallest_irreducible_over(field, r)};

  // alpha: a primitive n-th root of unity, chosen deterministically as the
  // first beta (in counting order) whose (q^r-1)/n power has order exactly n.
  auto nprimes = prime_divisors(n);
  SplitField::Elem alpha = ext.scalar(1);
  for (long long bi = 1; bi < qr; ++bi) {
    SplitField::Elem a = ext.pow(ext.from_index(bi), (qr - 1) / n);
    bool ok = !ext.is_zero(a);
    for (long long l : nprimes)
      if (ok && ext.is_scalar(ext.pow(a, n / l)) && ext.pow(a, n / l)[0] == 1)
        ok = false;
    if (ok) {
      alpha = a;
      break;
    }
  }

  std::vector<SplitField::Elem> alpha_pow(n, ext.scalar(1));
  for (int j = 1; j < n; ++j) alpha_pow[j] = ext.mul(alpha_pow[j - 1], alpha);

  Poly xn1 = Poly::xn_minus_one(field, n);

  // Minimal polynomial per coset: f_S = prod_{j in S} (t - alpha^j); all
  // coefficients must land in F_q because S is closed under j -> j*q.
  std::vector<Poly> factors;
  for (const auto& cs : cosets) {
    std::vector<SplitField::Elem> f{ext.scalar(1)};
    for (int j : cs.members) {
      std::vector<SplitField::Elem> g(f.size() + 1, ext.zero());
      for (size_t k = 0; k < f.size(); ++k) {
        g[k + 1] = ext.add(g[k + 1], f[k]);
        g[k] = ext.add(g[k], ext.mul(ext.neg(alpha_pow[j]), f[k]));
      }
      f = std::move(g);
    }
    std::vector<int> coeffs(f.size());
    for (size_t k = 0; k < f.size(); ++k) {
      if (!ext.is_scalar(f[k]))
        fail(ErrorKind::Internal, "minimal polynomial left the base field");
      coeffs[k] = f[k][0];
    }
    factors.push_back(Poly::from_coeffs(field, std::move(coeffs)));
  }

  {
    Poly prod = Poly::one(field);
    for (const Poly& f : factors) prod = prod * f;
    if (!(prod == xn1)) fail(ErrorKind::Internal, "factor product is not x^n - 1");
  }

  // CRT idempotents: e = u*h mod (x^n - 1) with h = (x^n-1)/f and
  // u*h = 1 (mod f).
  std::vector<GroupAlgebraElement> idems;
  for (const Poly& f : factors) {
    Poly h = divmod(xn1, f).first;
    auto [g, u, v] = extended_gcd(h, f);
    if (!g.is_one()) fail(ErrorKind::Internal, "x^n - 1 is not squarefree");
    idems.push_back(alg->from_poly(mod(u, f) * h));
  }

  // Canonical order: e_0 (the all-(1/n) idempotent, i.e. the coset {0}
  // component) first, then ascending coefficient sequence.
  std::vector<int> order(cosets.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    bool a0 = cosets[a].rep == 0, b0 = cosets[b].rep == 0;
    if (a0 != b0) return a0;
    return idems[a].coeffs() < idems[b].coeffs();
  });

  auto basis = std::shared_ptr<IdempotentBasis>(new IdempotentBasis(alg));
  for (int i : order) {
    basis->idems_.push_back(idems[i]);
    basis->factors_.push_back(factors[i]);
    basis->cosets_.push_back(cosets[i]);
  }

  // Construction self-checks: the orthogonal-idempotent identities and the
  // expected e_0, failing fast on any defect.
  {
    int inv_n = field->inv(field->from_int(n));
    for (int v : basis->idems_[0].coeffs())
      if (v != inv_n) fail(ErrorKind::Internal, "e_0 is not (1/n) sum x^i");
    GroupAlgebraElement sum = alg->zero();
    for (const auto& e : basis->idems_) sum = sum + e;
    if (!(sum == alg->one())) fail(ErrorKind::Internal, "idempotents do not sum to 1");
    int s = static_cast<int>(basis->idems_.size());
    for (int i = 0; i < s; ++i)
      for (int j = i; j < s; ++j) {
        GroupAlgebraElement p = basis->idems_[i] * basis->idems_[j];
        bool ok = i == j ? p == basis->idems_[i] : p.is_zero();
        if (!ok) fail(ErrorKind::Internal, "idempotent orthogonality failed");
      }
  }

  // Bar permutation, checked against the coset-level map S -> -S.
  int s = static_cast<int>(basis->idems_.size());
  basis->bar_perm_.assign(s, -1);
  for (int i = 0; i < s; ++i) {
    GroupAlgebraElement b = basis->idems_[i].bar();
    for (int j = 0; j < s; ++j)
      if (basis->idems_[j] == b) {
        basis->bar_perm_[i] = j;
        break;
      }
    if (basis->bar_perm_[i] < 0)
      fail(ErrorKind::Internal, "bar does not permute the idempotents");
    std::vector<int> negated;
    for (int v : basis->cosets_[i].members) negated.push_back((n - v) % n);
    std::sort(negated.begin(), negated.end());
    if (negated != basis->cosets_[basis->bar_perm_[i]].members)
      fail(ErrorKind::Internal, "bar permutation disagrees with coset negation");
  }
  if (basis->bar_perm_[0] != 0)
    fail(ErrorKind::Internal, "bar must fix e_0");

  return basis;
}

std::vector<int> IdempotentBasis::bar_fixed() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (bar_perm_[i] == i) out.push_back(i);
  return out;
}

std::vector<int> IdempotentBasis::bar_moved() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (bar_perm_[i] != i) out.push_back(i);
  return out;
}

GroupAlgebraElement IdempotentBasis::sum_idempotents(uint64_t support) const {
  GroupAlgebraElement acc = alg_->zero();
  for (int i = 0; i < size(); ++i)
    if (support >> i & 1) acc = acc + idems_[i];
  return acc;
}

uint64_t IdempotentBasis::bar_mask(uint64_t support) const {
  uint64_t out = 0;
  for (int i = 0; i < size(); ++i)
    if (support >> i & 1) out |= 1ULL << bar_perm_[i];
  return out;
}

int IdempotentBasis::support_dim(uint64_t support) const {
  int d = 0;
  for (int i = 0; i < size(); ++i)
    if (support >> i & 1) d += dim(i);
  return d;
}

std::vector<Poly> factor_xn_minus_one(const FieldPtr& field, int n) {
  auto basis = IdempotentBasis::compute(field, n);
  std::vector<Poly> out;
  for (int i = 0; i < basis->size(); ++i) out.push_back(basis->factor(i));
  return out;
}

}  // namespace qc2
