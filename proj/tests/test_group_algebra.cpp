#include <doctest.h>

#include "qc2/matrix.hpp"
#include "support.hpp"

using namespace qc2;
using namespace qc2::testing;

namespace {

GroupAlgebraPtr fh(const FieldPtr& f, int n) { return GroupAlgebra::make(f, n); }

GroupAlgebraElement e1_f4(const GroupAlgebraPtr& alg) {
  auto f = alg->field();
  int w = f->from_coeffs({0, 1});
  return alg->from_coeffs({1, w, f->mul(w, w)});  // 1 + w x + w^2 x^2
}

}  // namespace

TEST_CASE("construction enforces gcd(n, q) = 1") {
  CHECK_THROWS_AS(GroupAlgebra::make(f2(), 4), Error);
  CHECK_THROWS_AS(GroupAlgebra::make(f3(), 6), Error);
  CHECK(GroupAlgebra::make(f2(), 1)->n() == 1);
}

TEST_CASE("cyclic convolution") {
  auto alg = fh(f2(), 3);
  CHECK(alg->monomial(1) * alg->monomial(2) == alg->one());  // x * x^2 = 1

  auto alg4 = fh(f4(), 3);
  auto e1 = e1_f4(alg4);
  CHECK(e1 * e1 == e1);  // idempotency
  auto e0 = alg4->from_coeffs({1, 1, 1});
  CHECK((e0 * e1).is_zero());  // orthogonality

  auto other = fh(f4(), 5);  // wrong n
  CHECK_THROWS_AS((void)(e1 * other->one()), Error);
}

TEST_CASE("bar map") {
  auto alg = fh(f4(), 3);
  auto f = alg->field();
  int w = f->from_coeffs({0, 1}), w2 = f->mul(w, w);
  CHECK(alg->one().bar() == alg->one());
  CHECK(e1_f4(alg).bar() == alg->from_coeffs({1, w2, w}));  // e_1' = 1 + w^2 x + w x^2

  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    auto a = random_element(alg, rng), b = random_element(alg, rng);
    CHECK(a.bar().bar() == a);
    CHECK((a + b).bar() == a.bar() + b.bar());
    CHECK((a * b).bar() == a.bar() * b.bar());  // automorphism (abelian H)
  }
}

TEST_CASE("sigma and the inner product") {
  auto alg = fh(f4(), 3);
  CHECK(alg->one().sigma() == f4()->one());
  CHECK(alg->monomial(1).sigma() == f4()->zero());

  auto e1 = e1_f4(alg);
  CHECK(inner(e1, e1).is_zero());  // the second fixture row (1, w, w^2) is self-orthogonal
  CHECK(inner(e1, alg->zero()).is_zero());

  std::mt19937 rng(11);
  for (auto& algq : {fh(f4(), 3), fh(f5(), 4), fh(f3(), 5), fh(f2(), 7)}) {
    for (int t = 0; t < 300; ++t) {
      auto a = random_element(algq, rng), b = random_element(algq, rng);
      auto d = random_element(algq, rng);
      CHECK((a * b).sigma() == (b * a).sigma());
      CHECK(inner(a, b) == (a * b.bar()).sigma());
      CHECK(inner(a, b) == (a.bar() * b).sigma());
      CHECK(inner(d * a, b) == inner(a, d.bar() * b));
    }
  }
}

TEST_CASE("circulant representation") {
  auto alg = fh(f4(), 3);
  Matrix p = circulant(alg->monomial(1));
  Matrix expect = Matrix::from_rows(f4(), {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  CHECK(p == expect);
  CHECK(circulant(alg->one()) == Matrix::identity(f4(), 3));

  std::mt19937 rng(13);
  for (auto& algq : {fh(f4(), 3), fh(f5(), 4), fh(f2(), 5)}) {
    for (int t = 0; t < 200; ++t) {
      auto a = random_element(algq, rng), b = random_element(algq, rng);
      CHECK(circulant(a.bar()) == circulant(a).transpose());
      CHECK(circulant(a * b) == circulant(a) * circulant(b));
      if (!(a == b)) CHECK(!(circulant(a) == circulant(b)));  // injective
    }
  }
}
