#include <doctest.h>

#include "support.hpp"

using namespace qc2;
using namespace qc2::testing;

namespace {

Matrix example11_a1() {
  int w = f4()->from_coeffs({0, 1}), w2 = f4()->mul(w, w);
  return Matrix::from_rows(
      f4(), {{1, 1, 1, 1, 1, 1}, {1, w, w2, 0, 0, 0}, {0, 0, 0, 1, w, w2}});
}

Matrix example11_a2() {
  int w = f4()->from_coeffs({0, 1}), w2 = f4()->mul(w, w);
  return Matrix::from_rows(
      f4(), {{1, 1, 1, 1, 1, 1}, {1, w, w2, 0, 0, 0}, {0, 0, 0, 1, w2, w}});
}

}  // namespace

TEST_CASE("rref and rank") {
  Matrix id = Matrix::identity(f5(), 4);
  auto rr = rref(id);
  CHECK(rr.mat == id);
  CHECK(rr.rank == 4);
  CHECK(rref(Matrix(f5(), 3, 5)).rank == 0);
  CHECK(rref(example11_a1()).rank == 3);  // the rows form a basis
}

TEST_CASE("nullspace") {
  CHECK(nullspace(Matrix::identity(f4(), 3)).rows() == 0);
  Matrix row11 = Matrix::from_rows(f2(), {{1, 1}});
  Matrix ns = nullspace(row11);
  CHECK(ns == Matrix::from_rows(f2(), {{1, 1}}));
  // example-1.1: the nullspace of A equals A's own row space (self-dual).
  Matrix a = example11_a1();
  CHECK(same_row_space(nullspace(a), a));
  // rank-nullity and orthogonality on random matrices.
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> dim(1, 6), val(0, 4);
  for (int t = 0; t < 200; ++t) {
    Matrix m(f5(), dim(rng), dim(rng));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m.set(i, j, val(rng));
    Matrix ker = nullspace(m);
    CHECK(rref(ker).rank + rref(m).rank == m.cols());
    CHECK((m * ker.transpose()).is_zero());
  }
}

TEST_CASE("oracle_self_dual") {
  CHECK(oracle_self_dual(example11_a1(), 3));
  CHECK(oracle_self_dual(example11_a2(), 3));
  Matrix ii = Matrix::from_rows(f3(), {{1, 1}});
  CHECK(!oracle_self_dual(ii, 1));  // <(1,1),(1,1)> = 2 != 0 over F3
  CHECK(!oracle_self_dual(Matrix(f4(), 1, 6), 3));  // rank 0
}

TEST_CASE("shift invariance") {
  CHECK(oracle_shift_invariant(example11_a1(), 3));
  Matrix single = Matrix::from_rows(f2(), {{1, 0, 0, 0, 0, 0}});
  CHECK(!oracle_shift_invariant(single, 3));
  CHECK(oracle_shift_invariant(Matrix::identity(f2(), 6), 3));  // full space
}

TEST_CASE("y-closure matches the fixture verdicts") {
  CHECK(!oracle_y_closed(example11_a1(), 3));  // y e_1 = bar(e_1) y not in C
  CHECK(oracle_y_closed(example11_a2(), 3));
  CHECK(oracle_y_closed(Matrix::identity(f4(), 6), 3));
}

TEST_CASE("y and y~ maps are period 2 and 4 on words") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> val(0, 4);
  auto field = f5();
  const Field& f = *field;
  for (int t = 0; t < 100; ++t) {
    std::vector<int> w(8);
    for (int& v : w) v = val(rng);
    CHECK(y_image(f, y_image(f, w, 4), 4) == w);
    auto y1 = ytilde_image(f, w, 4);
    auto y2 = ytilde_image(f, y1, 4);
    auto y4 = ytilde_image(f, ytilde_image(f, y2, 4), 4);
    CHECK(y4 == w);  // (y~)^4 = (-1)^2 = 1
    CHECK((y2 != w || w == std::vector<int>(8, 0)));  // y~^2 = -1 fixes only 0 in odd char
  }
}

TEST_CASE("ytilde-closure separates the example-6.5 cases") {
  auto b5p = IdempotentBasis::compute(f5(), 4);
  auto g = b5p->sum_idempotents(0b0011).scaled(2);
  auto case1 = GoursatData::make(CyclicCode(b5p, 0b0100), CyclicCode(b5p, 0b0100),
                                 CyclicCode(b5p, 0b0011), g);
  auto case2 = GoursatData::make(CyclicCode(b5p, 0b0100), CyclicCode(b5p, 0b1000),
                                 CyclicCode(b5p, 0b0011), g);
  CHECK(!oracle_ytilde_closed(qc_generator_matrix(case1), 4));
  CHECK(oracle_ytilde_closed(qc_generator_matrix(case2), 4));

  // char 2: y~ and y closures agree on random codes.
  auto b2 = IdempotentBasis::compute(f2(), 5);
  std::mt19937 rng(31);
  auto alg = b2->algebra();
  for (int t = 0; t < 100; ++t) {
    Matrix m = fh_closure(f2(), {pair_to_row({random_element(alg, rng),
                                              random_element(alg, rng)})}, 5);
    CHECK(oracle_y_closed(m, 5) == oracle_ytilde_closed(m, 5));
  }
}

TEST_CASE("double circulant detection") {
  // (I | g(P)) for the example-5.5 case (3) fixture: g = e0 + w e1 + w^2 bar(e1).
  auto b = IdempotentBasis::compute(f4(), 3);
  int w = f4()->from_coeffs({0, 1}), w2 = f4()->mul(w, w);
  auto g = b->idempotent(0) + b->idempotent(1).scaled(w) + b->idempotent(2).scaled(w2);
  Matrix gen = Matrix(f4(), 0, 6);
  {
    Matrix gp = circulant(g);
    Matrix id = Matrix::identity(f4(), 3);
    for (int i = 0; i < 3; ++i) {
      std::vector<int> row = id.row_vec(i);
      auto right = gp.row_vec(i);
      row.insert(row.end(), right.begin(), right.end());
      gen.append_row(row);
    }
  }
  auto found = oracle_double_circulant(gen, 3);
  REQUIRE(found.has_value());
  CHECK(*found == g);
  // Self-dual double circulant per the example-5.5 case (3) fixture: alpha^2 = beta gamma = 1.
  CHECK(oracle_self_dual(gen, 3));

  CHECK(!oracle_double_circulant(example11_a2(), 3).has_value());
  CHECK(!oracle_double_circulant(Matrix(f4(), 2, 6), 3).has_value());
}

TEST_CASE("minimum distance") {
  Matrix a = example11_a1();
  int d = oracle_min_distance(a);
  // Independent route: enumerate all 4^3 coefficient combinations directly.
  int best = 7;
  auto field = f4();
  const Field& f = *field;
  for (int c0 = 0; c0 < 4; ++c0)
    for (int c1 = 0; c1 < 4; ++c1)
      for (int c2 = 0; c2 < 4; ++c2) {
        if (c0 == 0 && c1 == 0 && c2 == 0) continue;
        int wgt = 0;
        for (int j = 0; j < 6; ++j) {
          int v = f.add(f.mul(c0, a.at(0, j)),
                        f.add(f.mul(c1, a.at(1, j)), f.mul(c2, a.at(2, j))));
          if (v != 0) ++wgt;
        }
        best = std::min(best, wgt);
      }
  CHECK(d == best);
  CHECK(d == 3);

  Matrix rep = Matrix::from_rows(f2(), {{1, 1, 1, 1, 1, 1}});
  CHECK(oracle_min_distance(rep) == 6);
  CHECK(oracle_min_distance(Matrix::identity(f2(), 6)) == 1);
  CHECK(oracle_min_distance(Matrix(f2(), 0, 6)) == 0);
  CHECK_THROWS_AS(oracle_min_distance(Matrix::identity(f5(), 12), 1000), Error);
}
