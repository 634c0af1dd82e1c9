#include <functional>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "iwlab/abgroup.hpp"

using namespace iwlab;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

FiniteAbelianGroup present(const std::vector<std::vector<Integer>>& rows, std::size_t n) {
  return smith_presentation(IntMatrix::from_rows(rows, n), n);
}

}  // namespace

TEST_CASE("smith presentations") {
  auto g = present({ints({2, 0}), ints({0, 3})}, 2);
  CHECK(g.invariants() == ints({6}));
  auto h = present({ints({4, 2}), ints({0, 2})}, 2);
  CHECK(h.invariants() == ints({2, 4}));
  CHECK(h.order() == 8);
  auto f = smith_presentation(IntMatrix(0, 2), 2);
  CHECK(f.free_rank() == 2);
  CHECK(f.invariants().empty());
  CHECK_THROWS(f.order());
  auto mixed = present({ints({6, 4, 0})}, 3);
  CHECK(mixed.invariants() == ints({2}));
  CHECK(mixed.free_rank() == 2);
}

TEST_CASE("SNF is idempotent") {
  auto g = FiniteAbelianGroup::from_invariants(ints({2, 4, 12}));
  CHECK(g.invariants() == ints({2, 4, 12}));
  auto h = FiniteAbelianGroup::from_invariants(ints({4, 6}));
  CHECK(h.invariants() == ints({2, 12}));
}

TEST_CASE("element orders, subgroup orders, dlogs") {
  auto z6 = FiniteAbelianGroup::from_invariants(ints({6}));
  CHECK(element_order(z6, z6.identity()) == 1);
  CHECK(element_order(z6, z6.reduce(ints({2}))) == 3);
  CHECK(subgroup_image_order(z6, {z6.reduce(ints({2}))}) == 3);
  CHECK(subgroup_image_order(z6, {}) == 1);
  CHECK(subgroup_image_order(z6, {z6.generator(0)}) == 6);
  CHECK_FALSE(solve_dlog(z6, z6.reduce(ints({2})), z6.reduce(ints({3}))).has_value());

  auto g = FiniteAbelianGroup::from_invariants(ints({2, 4}));
  CHECK(element_order(g, g.reduce(ints({1, 1}))) == 4);
  CHECK(*solve_dlog(g, g.reduce(ints({1, 1})), g.reduce(ints({0, 2}))) == 2);

  auto z9 = FiniteAbelianGroup::from_invariants(ints({9}));
  CHECK(*solve_dlog(z9, z9.generator(0), z9.reduce(ints({4}))) == 4);
}

TEST_CASE("ambient maps are consistent") {
  // Z^3 / <(2,4,6),(0,3,9),(1,1,1)>
  auto G = present({ints({2, 4, 6}), ints({0, 3, 9}), ints({1, 1, 1})}, 3);
  for (long i = -3; i <= 3; ++i)
    for (long j = -3; j <= 3; ++j) {
      auto x = ints({i, j, 0});
      auto gx = G.from_ambient(x);
      CHECK(G.from_ambient(G.to_ambient(gx)) == gx);
    }
  CHECK(G.is_identity(G.from_ambient(ints({2, 4, 6}))));
  CHECK(G.is_identity(G.from_ambient(ints({1, 1, 1}))));
  CHECK(G.is_identity(G.from_ambient(ints({1, 4, 10}))));
}

TEST_CASE("p-part") {
  auto G = FiniteAbelianGroup::from_invariants(ints({6, 36}));
  auto P = G.p_part(3);
  CHECK(P.invariants() == ints({3, 9}));
  auto Q = G.p_part(2);
  CHECK(Q.invariants() == ints({2, 4}));
  // the section composed with projection is the identity on the p-part
  for (long a = 0; a < 3; ++a)
    for (long b = 0; b < 9; ++b) {
      auto x = P.reduce(ints({a, b}));
      CHECK(P.from_ambient(P.to_ambient(x)) == x);
      CHECK(Q.is_identity(Q.from_ambient(P.to_ambient(x))));
    }
}

TEST_CASE("lattice kernel") {
  // e1 + 2 e2 = 0 mod 5
  IntMatrix C = IntMatrix::from_rows({ints({1}), ints({2})}, 1);
  auto K = lattice_kernel(C, ints({5}));
  auto S = smith_form(K);
  Integer det = 1;
  for (auto& d : S.diagonal) det *= d;
  CHECK(det == 5);
  for (std::size_t i = 0; i < K.rows(); ++i) CHECK(mod(K(i, 0) + 2 * K(i, 1), 5) == 0);
}

TEST_CASE("brute-force agreement on random presentations") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + rng() % 2;
    std::vector<std::vector<Integer>> rows;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Integer> r(n);
      for (auto& x : r) x = static_cast<long>(rng() % 9) - 4;
      r[i] += 6;
      rows.push_back(r);
    }
    auto G = present(rows, n);
    if (!G.is_finite()) continue;
    if (G.order() > 10000) continue;
    // enumerate classes by walking the Smith coordinates of a box of ambient vectors
    std::set<std::vector<Integer>> seen;
    std::function<void(std::vector<Integer>&, std::size_t)> walk = [&](std::vector<Integer>& v,
                                                                       std::size_t k) {
      if (k == n) {
        seen.insert(G.from_ambient(v).e);
        return;
      }
      for (long a = -12; a <= 12; ++a) {
        v[k] = a;
        walk(v, k + 1);
      }
    };
    std::vector<Integer> v(n);
    walk(v, 0);
    // every relation is trivial and the class count equals the order
    for (auto& r : rows) CHECK(G.is_identity(G.from_ambient(r)));
    if (G.order() <= 25) CHECK(Integer(static_cast<long>(seen.size())) == G.order());
    // orders: brute-force multiples
    for (const auto& e : seen) {
      GroupElement g{e};
      Integer o = element_order(G, g);
      CHECK(G.order() % o == 0);
      GroupElement acc = G.identity();
      long k = 0;
      do {
        acc = G.add(acc, g);
        ++k;
      } while (!G.is_identity(acc));
      CHECK(o == k);
      CHECK(subgroup_image_order(G, {g}) == o);
      auto h = G.scale(g, 5);
      auto dl = solve_dlog(G, g, h);
      REQUIRE(dl.has_value());
      CHECK(G.scale(g, *dl) == h);
    }
  }
}
