#include <doctest.h>

#include "support.hpp"

using namespace qc2;
using namespace qc2::testing;

namespace {

std::vector<GoursatData> collect_qc(const IdempotentBasisPtr& b,
                                    long long cap = kDefaultEnumCap) {
  std::vector<GoursatData> out;
  enumerate_qc(b, cap, [&](const GoursatData& d) { out.push_back(d); });
  return out;
}

std::vector<GoursatData> collect_sd(const IdempotentBasisPtr& b,
                                    long long cap = kDefaultEnumCap) {
  std::vector<GoursatData> out;
  enumerate_self_dual(b, cap, [&](const GoursatData& d) { out.push_back(d); });
  return out;
}

}  // namespace

TEST_CASE("enumeration counts match the choice-product formula") {
  auto b1 = IdempotentBasis::compute(f2(), 1);
  CHECK(qc_choice_product(b1) == 5);
  CHECK(collect_qc(b1).size() == 5);  // 0, three lines, and the plane in F_2^2

  auto b2 = IdempotentBasis::compute(f2(), 3);
  CHECK(qc_choice_product(b2) == 35);
  CHECK(collect_qc(b2).size() == 35);

  auto b4 = IdempotentBasis::compute(f4(), 3);
  CHECK(collect_qc(b4).size() == 343);

  CHECK_THROWS_AS(enumerate_qc(b4, 10, [](const GoursatData&) {}), Error);
}

TEST_CASE("enumeration is exactly the set of shift-invariant subspaces") {
  struct Case {
    FieldPtr f;
    int n;
  };
  for (const auto& [f, n] : {Case{f2(), 1}, Case{f2(), 3}, Case{f2(), 5}, Case{f2(), 7},
                             Case{f4(), 3}, Case{f3(), 2}, Case{f3(), 4}, Case{f3(), 5},
                             Case{f5(), 3}}) {
    auto basis = IdempotentBasis::compute(f, n);
    auto brute = brute_submodules(f, n);
    std::set<std::string> algebraic;
    for (const auto& d : collect_qc(basis))
      algebraic.insert(matrix_key(qc_generator_matrix(d)));
    CHECK(algebraic.size() == collect_qc(basis).size());  // all codes distinct
    CHECK(algebraic == brute);
  }
}

TEST_CASE("self-dual enumeration equals the filtered full enumeration") {
  struct Case {
    FieldPtr f;
    int n;
  };
  for (const auto& [f, n] : {Case{f2(), 3}, Case{f2(), 7}, Case{f4(), 3}, Case{f3(), 4},
                             Case{f5(), 3}, Case{f5(), 4}}) {
    auto basis = IdempotentBasis::compute(f, n);
    std::set<std::string> filtered, direct;
    for (const auto& d : collect_qc(basis))
      if (qc_is_self_dual(d)) filtered.insert(goursat_key(d));
    for (const auto& d : collect_sd(basis)) {
      CHECK(qc_is_self_dual(d));  // soundness of every emitted datum
      direct.insert(goursat_key(d));
    }
    CHECK(direct.size() == collect_sd(basis).size());  // no duplicates
    CHECK(direct == filtered);                         // completeness
  }
}

TEST_CASE("self-dual codes pass the matrix oracle") {
  for (auto& basis : {IdempotentBasis::compute(f2(), 3), IdempotentBasis::compute(f5(), 4)}) {
    auto sds = collect_sd(basis);
    CHECK(!sds.empty());
    for (const auto& d : sds)
      CHECK(oracle_self_dual(qc_generator_matrix(d), basis->n()));
  }
}

TEST_CASE("F2 n=3: every self-dual code is double circulant and dihedral") {
  auto basis = IdempotentBasis::compute(f2(), 3);
  auto sds = collect_sd(basis);
  CHECK(!sds.empty());
  for (const auto& d : sds) {
    CHECK(qc_is_double_circulant(d));
    CHECK(qc_is_dihedral(d));
  }
}

TEST_CASE("self-dual existence boundary in odd characteristic") {
  // No self-dual 2-quasi-cyclic codes over F3 and F7 (4 does not divide q-1).
  for (auto [p, nmax] : std::vector<std::pair<long long, int>>{{3, 7}, {7, 5}}) {
    auto f = Field::make(p, 1);
    for (int n = 1; n <= nmax; ++n) {
      if (std::gcd(static_cast<long long>(n), p) != 1) continue;
      CHECK(collect_sd(IdempotentBasis::compute(f, n)).empty());
    }
  }
  // Nonempty over F5, n = 4, and it contains both Example 6.5 data.
  auto b5p = IdempotentBasis::compute(f5(), 4);
  auto sds = collect_sd(b5p);
  CHECK(!sds.empty());
  auto g = b5p->sum_idempotents(0b0011).scaled(2);
  auto case1 = GoursatData::make(CyclicCode(b5p, 0b0100), CyclicCode(b5p, 0b0100),
                                 CyclicCode(b5p, 0b0011), g);
  auto case2 = GoursatData::make(CyclicCode(b5p, 0b0100), CyclicCode(b5p, 0b1000),
                                 CyclicCode(b5p, 0b0011), g);
  int hits = 0;
  for (const auto& d : sds) hits += (d == case1) + (d == case2);
  CHECK(hits == 2);
}

TEST_CASE("verify_theorem on the three calibration points") {
  auto rep2 = verify_theorem(IdempotentBasis::compute(f2(), 3));
  for (bool c : rep2.criteria) CHECK(c);
  CHECK(rep2.self_dual == rep2.double_circulant);
  CHECK(rep2.self_dual == rep2.dihedral);
  CHECK(rep2.self_dual_exists);

  auto rep4 = verify_theorem(IdempotentBasis::compute(f4(), 3));
  for (bool c : rep4.criteria) CHECK(!c);
  CHECK(rep4.witness_not_dihedral.has_value());
  // Example 1.1(1) is among the self-dual non-dihedral codes.
  auto b4 = IdempotentBasis::compute(f4(), 3);
  auto ex11 = GoursatData::make(CyclicCode(b4, 0b010), CyclicCode(b4, 0b010),
                                CyclicCode(b4, 0b001), b4->idempotent(0));
  bool found = false;
  enumerate_self_dual(b4, kDefaultEnumCap, [&](const GoursatData& d) {
    if (d == ex11 && !qc_is_dihedral(d)) found = true;
  });
  CHECK(found);

  auto rep5 = verify_theorem(IdempotentBasis::compute(f5(), 4));
  for (bool c : rep5.criteria) CHECK(!c);
  CHECK(rep5.witness_not_dihedral.has_value());
  CHECK(!rep5.char2);
}

TEST_CASE("verify_theorem across the default grid points with q in {3, 7}") {
  // Vacuous (1), (2): no self-dual codes, but (3)-(6) still agree.
  auto f7 = Field::make(7, 1);
  for (int n : {2, 3, 4, 5}) {
    auto rep = verify_theorem(IdempotentBasis::compute(f7, n));
    CHECK(!rep.self_dual_exists);
    CHECK(rep.criteria[0]);
    CHECK(rep.criteria[1]);
  }
  auto rep38 = verify_theorem(IdempotentBasis::compute(f3(), 8));
  CHECK(!rep38.self_dual_exists);
  CHECK(!rep38.criteria[2]);  // -1 not in <3> mod 8
  CHECK(!rep38.criteria[5]);
}

TEST_CASE("count monotonicity over assorted points") {
  for (auto [p, m, n] : std::vector<std::tuple<long long, int, int>>{
           {2, 1, 7}, {2, 2, 5}, {3, 2, 5}, {5, 1, 8}, {13, 1, 4}}) {
    auto rep = verify_theorem(IdempotentBasis::compute(Field::make(p, m), n));
    CHECK(rep.double_circulant <= rep.principal);
    CHECK(rep.principal <= rep.self_dual);
    CHECK(rep.dihedral <= rep.self_dual);
    if (rep.criteria[2]) {
      CHECK(rep.self_dual == rep.double_circulant);
      CHECK(rep.self_dual == rep.dihedral);
    }
  }
}

TEST_CASE("among self-dual codes, (consta-)dihedral reduces to bar(C1) = C2") {
  for (auto [p, m, n] : std::vector<std::tuple<long long, int, int>>{
           {2, 1, 7}, {2, 2, 3}, {2, 2, 9}, {3, 2, 5}, {5, 1, 4}, {5, 1, 8}}) {
    auto basis = IdempotentBasis::compute(Field::make(p, m), n);
    enumerate_self_dual(basis, kDefaultEnumCap, [&](const GoursatData& d) {
      bool dih = p == 2 ? qc_is_dihedral(d) : qc_is_consta_dihedral(d);
      CHECK(dih == (basis->bar_mask(d.c1.support()) == d.c2.support()));
    });
  }
}

TEST_CASE("the Goursat projections are the sums with C12") {
  auto b = IdempotentBasis::compute(f4(), 3);
  auto d = GoursatData::make(CyclicCode(b, 0b010), CyclicCode(b, 0b100),
                             CyclicCode(b, 0b001), b->idempotent(0));
  CHECK(d.c1_tilde().support() == 0b011);
  CHECK(d.c2_tilde().support() == 0b101);
  // Double circulant iff C~1 = FH and C2 = 0.
  CHECK(qc_is_double_circulant(d) ==
        (d.c1_tilde().support() == b->full_mask() && d.c2.is_zero()));
}

TEST_CASE("principal self-dual codes are (consta-)dihedral") {
  for (auto [p, m, n] : std::vector<std::tuple<long long, int, int>>{
           {2, 1, 3}, {2, 1, 7}, {2, 2, 3}, {2, 2, 9}, {3, 2, 5}, {5, 1, 4},
           {5, 1, 8}, {13, 1, 4}}) {
    auto basis = IdempotentBasis::compute(Field::make(p, m), n);
    enumerate_self_dual(basis, kDefaultEnumCap, [&](const GoursatData& d) {
      if (qc_is_principal(d))
        CHECK((p == 2 ? qc_is_dihedral(d) : qc_is_consta_dihedral(d)));
    });
  }
}

TEST_CASE("default grid respects the cap and includes the fixture points") {
  auto grid = default_grid();
  auto has = [&](long long p, int m, int n) {
    for (const auto& pt : grid)
      if (pt.p == p && pt.m == m && pt.n == n) return true;
    return false;
  };
  CHECK(has(2, 1, 3));
  CHECK(has(2, 2, 3));
  CHECK(has(5, 1, 4));
  CHECK(has(3, 1, 8));
  CHECK(!has(2, 1, 4));   // gcd
  CHECK(!has(13, 1, 14)); // cap
  for (const auto& pt : grid) {
    auto basis = IdempotentBasis::compute(Field::make(pt.p, pt.m), pt.n);
    CHECK(qc_choice_product(basis) <= kDefaultEnumCap);
  }
}
