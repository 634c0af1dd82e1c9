#include <random>

#include "doctest.h"
#include "iwlab/localize.hpp"

using namespace iwlab;

TEST_CASE("completions above p") {
  QuadraticField K(Integer(2));
  auto v7 = completions_above_p(K, 7);
  REQUIRE(v7.size() == 2);
  std::vector<Integer> roots{v7[0].sqrt_d_image(2), v7[1].sqrt_d_image(2)};
  std::sort(roots.begin(), roots.end());
  CHECK(roots == std::vector<Integer>{10, 39});
  for (auto& v : v7) CHECK(mod(v.sqrt_d_image(6) * v.sqrt_d_image(6) - 2, pow(Integer(7), 6)) == 0);
  auto v5 = completions_above_p(K, 5);
  REQUIRE(v5.size() == 1);
  CHECK(v5[0].residue_degree() == 2);
  CHECK_THROWS_AS(completions_above_p(QuadraticField(Integer(5)), 5), UnsupportedError);
  CHECK(completions_above_p(QuadraticField::rational(), 3).size() == 1);
}

TEST_CASE("local images") {
  QuadraticField K(Integer(2));
  auto x = K.from_sqrt_d(3, 1);
  for (auto& v : completions_above_p(K, 7)) {
    auto lv = embed(v, x, 2);
    if (v.sqrt_d_image(2) == 10) {
      CHECK(lv.valuation == 0);
      CHECK(lv.unit.lift() == 13);
    } else {
      CHECK(lv.valuation == 1);
      CHECK(mod(7 * lv.unit.lift(), 49) == 42);
    }
    auto one = embed(v, K.one(), 2);
    CHECK(one.valuation == 0);
    CHECK(one.unit.lift() == 1);
    CHECK(embed(v, K.element(7), 2).valuation == 1);
  }
  // inert place: embedding respects multiplication
  auto v5 = completions_above_p(K, 5)[0];
  auto a = K.from_sqrt_d(Rational(1, 3), 2), b = K.from_sqrt_d(4, -1);
  auto ea = embed(v5, a, 6), eb = embed(v5, b, 6), eab = embed(v5, a * b, 6);
  CHECK((ea.unit_ext * eb.unit_ext).congruent(eab.unit_ext));
  CHECK(ea.unit_ext.norm().congruent(PAdicNumber(5, a.norm(), 6)));
}

TEST_CASE("loc_p is multiplicative") {
  std::mt19937 rng(11);
  for (long d : {2L, 3L, 7L, 10L}) {
    QuadraticField K{Integer(d)};
    for (long p : {3L, 5L, 7L}) {
      if (K.disc() % p == 0) continue;
      for (int t = 0; t < 10; ++t) {
        auto r = [&] { return Rational(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 6)); };
        auto x = K.element(r(), r()), y = K.element(r(), r());
        if (x.is_zero() || y.is_zero()) continue;
        for (auto& v : completions_above_p(K, p)) {
          auto lx = loc(v, x, 6), ly = loc(v, y, 6), lxy = loc(v, x * y, 6);
          CHECK((lx.valuation + ly.valuation).congruent(lxy.valuation));
          for (std::size_t j = 0; j < lx.log.size(); ++j)
            CHECK((lx.log[j] + ly.log[j]).congruent(lxy.log[j]));
        }
      }
    }
  }
}

TEST_CASE("torsion tests") {
  auto Qf = QuadraticField::rational();
  auto v7 = completions_above_p(Qf, 7)[0];
  CHECK(is_loc_torsion(Qf.element(-1), v7, 7, 4) == Verdict::yes);
  CHECK(is_loc_torsion(Qf.element(2), v7, 7, 2) == Verdict::no);
  CHECK(is_loc_torsion(Qf.element(7), v7, 7, 2) == Verdict::no);
  // 2^6 = 64 = 1 + 9*7: log vanishes mod 7 but not mod 49
  CHECK(is_loc_torsion(Qf.element(pow(Integer(2), 6 * 7)), v7, 7, 2) == Verdict::indeterminate);
  QuadraticField K(Integer(2));
  auto v5 = completions_above_p(K, 5)[0];
  CHECK(is_loc_torsion(K.fundamental_unit(), v5, 5, 6) == Verdict::no);
  CHECK(is_loc_torsion(K.element(-1), v5, 5, 6) == Verdict::yes);
  // place not above p: torsion exactly when the valuation vanishes
  auto w7 = place_of(K, factor_rational_prime(K, 7).primes[0]);
  CHECK(is_loc_torsion(K.fundamental_unit(), w7, 5, 6) == Verdict::yes);
  CHECK(is_loc_torsion(K.element(7), w7, 5, 6) == Verdict::no);

  auto a = SUnitProduct::of(Qf.element(4), 3, 6);
  auto v3 = completions_above_p(Qf, 3)[0];
  CHECK(is_loc_torsion(a, v3, 3, 4) == Verdict::no);
  CHECK(is_loc_torsion(SUnitProduct::of(Qf.element(-1), 3, 6), v3, 3, 4) == Verdict::yes);
}

TEST_CASE("E_Q membership") {
  auto Qf = QuadraticField::rational();
  SUnitProduct x;
  x.p = 3;
  x.basis = {Qf.element(2), Qf.element(5)};
  x.labels = {"2", "5"};
  x.exponents = {PAdicNumber(3, Integer(58), 4), PAdicNumber(3, Integer(1), 4)};
  std::vector<PrimeIdeal> Q{parse_prime(Qf, "2"), parse_prime(Qf, "5")};
  CHECK(eq_membership(Qf, x, Q));
  CHECK_FALSE(eq_membership(Qf, SUnitProduct::of(Qf.element(7), 3, 4), Q));
  QuadraticField K(Integer(2));
  CHECK(eq_membership(K, SUnitProduct::of(K.fundamental_unit(), 3, 4), {}));
}

TEST_CASE("Z_p ranks") {
  auto Qf = QuadraticField::rational();
  auto at = [&](long ell) { return place_of(Qf, parse_prime(Qf, std::to_string(ell))); };
  auto r = inertia_rank(Qf, {Qf.element(5)}, {at(5)}, 3, 4);
  CHECK(r.rank == 1);
  CHECK(r.certified());
  CHECK(inertia_rank(Qf, {Qf.element(-1)}, {at(5)}, 3, 4).rank == 0);
  auto r28 = inertia_rank(Qf, {Qf.element(2), Qf.element(8)}, {at(2)}, 3, 4);
  CHECK(r28.rank == 1);
  CHECK(r28.certified());
  // monotone in T and in Q
  auto big = inertia_rank(Qf, {Qf.element(2), Qf.element(5), Qf.element(10)}, {at(2), at(5)}, 3, 4);
  CHECK(big.rank == 2);
  CHECK(inertia_rank(Qf, {Qf.element(2), Qf.element(5)}, {at(2), at(5), at(3)}, 3, 4).rank == 2);
  // a p^N-th power has its log below precision N, seen only at N + 2
  QuadraticField K(Integer(2));
  auto eps = K.fundamental_unit();
  auto places = completions_above_p(K, 5);
  auto e = eps.pow(125);
  auto ind = inertia_rank(K, {e}, places, 5, 3);
  CHECK(ind.rank == 0);
  CHECK(ind.rank_high == 1);
  CHECK_FALSE(ind.certified());
  CHECK(inertia_rank(K, {eps}, places, 5, 3).certified());
}
