#include "doctest.h"
#include "iwlab/iwasawa.hpp"

using namespace iwlab;

namespace {

QuadraticField field(long d) { return d == 1 ? QuadraticField::rational() : QuadraticField(Integer(d)); }

// r >= 0 selects the degree-one prime with omega = r; r < 0 the first prime above ell.
PrimeIdeal prime(const QuadraticField& K, long ell, long r = -1) {
  auto ps = factor_rational_prime(K, ell).primes;
  if (r < 0) return ps.at(0);
  for (const auto& P : ps)
    if (P.root == r) return P;
  throw std::logic_error("no such prime");
}

struct MqFixture {
  long d, p;
  long ell1, r1, ell2, r2;
  long N;
  std::vector<long> G;
  long a1;  // mod p^(N+1)
  long m_Q;
};

// values from the brute-force oracle
const std::vector<MqFixture> kFixtures{
    {1, 3, 2, -1, 5, -1, 3, {27}, 58, 1},
    {2, 5, 2, -1, 3, -1, 2, {25}, 36, 1},
    {2, 3, 2, -1, 7, 0, 3, {27}, 11, 1},
    {29, 3, 2, -1, 5, 1, 2, {9, 9}, 2, 9},
    {29, 3, 2, -1, 5, 1, 3, {9, 27}, 29, 9},
    {29, 3, 2, -1, 5, 1, 4, {9, 81}, 110, 9},
    {37, 7, 3, 0, 3, 1, 2, {7, 49}, 342, 7},
    {5, 3, 2, -1, 5, -1, 3, {27}, 29, 1},
};

}  // namespace

TEST_CASE("inertness in the cyclotomic extension") {
  auto Qf = field(1);
  CHECK(is_inert_in_cyclotomic(prime(Qf, 2), Qf, 3));
  CHECK_FALSE(is_inert_in_cyclotomic(prime(Qf, 17), Qf, 3));
  CHECK_THROWS_AS(is_inert_in_cyclotomic(prime(Qf, 3), Qf, 3), UsageError);
}

TEST_CASE("M_Q generator over Q") {
  auto Qf = field(1);
  auto r = mq_generator(Qf, 3, prime(Qf, 2), prime(Qf, 5), 3);
  CHECK(r.a1.precision() == 2);
  CHECK(r.a1.lift() == 4);
  // <2>^4 <5> = (-2)^4 (-5) = -80 = 1 mod 27
  CHECK(mod(Integer(-80) - 1, 27) == 0);
  auto u = angle(PAdicNumber(3, Integer(2), 3)).pow(4) * angle(PAdicNumber(3, Integer(5), 3));
  CHECK(u.lift() == 1);
  CHECK(r.degree.is_zero());
  CHECK_THROWS_AS(mq_generator(Qf, 3, prime(Qf, 2), prime(Qf, 2), 3), UsageError);
  CHECK_THROWS_AS(mq_generator(Qf, 3, prime(Qf, 17), prime(Qf, 5), 3), UsageError);
}

TEST_CASE("m_Q fixtures") {
  for (const auto& f : kFixtures) {
    CAPTURE(f.d);
    CAPTURE(f.p);
    CAPTURE(f.N);
    auto K = field(f.d);
    auto q1 = prime(K, f.ell1, f.r1), q2 = prime(K, f.ell2, f.r2);
    auto a1 = a1_coefficient(q1, q2, f.p, f.N + 2);
    CHECK(mod(a1.lift(), pow(Integer(f.p), static_cast<unsigned long>(f.N + 1))) == f.a1);
    auto r = mq_order(K, f.p, q1, q2, f.N);
    std::vector<long> inv;
    for (const auto& x : r.invariants) inv.push_back(x.get_si());
    CHECK(inv == f.G);
    CHECK(r.m_Q == f.m_Q);
    CHECK(r.stable);
    CHECK(r.degree.is_zero());
    Integer order = 1;
    for (const auto& x : r.invariants) order *= x;
    CHECK(order % (r.m_Q * pow(Integer(f.p), static_cast<unsigned long>(f.N))) == 0);
  }
  // the same pair at N = 1, where a1 is only needed modulo the exponent
  auto K = field(37);
  GaloisGroupG G(K, 7, 1);
  CHECK(G.group().invariants() == std::vector<Integer>{7, 7});
  CHECK(element_order(G.group(), mq_element(G, prime(K, 3, 0), prime(K, 3, 1))) == 7);
}

TEST_CASE("M_Q is symmetric in q1, q2") {
  for (const auto& f : kFixtures) {
    auto K = field(f.d);
    auto q1 = prime(K, f.ell1, f.r1), q2 = prime(K, f.ell2, f.r2);
    GaloisGroupG G(K, f.p, f.N);
    auto x = mq_element(G, q1, q2), y = mq_element(G, q2, q1);
    Integer ox = subgroup_image_order(G.group(), {x});
    CHECK(ox == subgroup_image_order(G.group(), {y}));
    CHECK(ox == subgroup_image_order(G.group(), {x, y}));
  }
}

TEST_CASE("Leopoldt defect") {
  auto Qf = field(1);
  auto r = leopoldt_defect(Qf, 3, 8);
  CHECK(r.delta == 0);
  CHECK(r.standing_assumption);
  auto r2 = leopoldt_defect(field(2), 5, 8);
  CHECK(r2.delta == 0);
  CHECK(r2.certified);
  REQUIRE(r2.regulator_valuation.has_value());
  CHECK(*r2.regulator_valuation >= 1);
  CHECK_FALSE(r2.standing_assumption);
  CHECK_THROWS_AS(leopoldt_defect(field(5), 5, 8), UnsupportedError);
  // the regulator valuation agrees with log(eps^24) computed directly
  auto K = field(2);
  auto v = completions_above_p(K, 5)[0];
  auto e24 = embed(v, K.fundamental_unit().pow(24), 10).unit_ext;
  auto L = plog(e24);
  CHECK(std::min(L.a().valuation(), L.b().valuation()) == *r2.regulator_valuation);
}

TEST_CASE("Greenberg-Wiles evaluator") {
  CHECK(greenberg_wiles(0, 0, {}) == 0);
  CHECK(greenberg_wiles(1, 0, {{2, 1}, {0, 0}}) == 2);
  // V = Q_p(1) over Q: h0(V) = 0, h0(V*(1)) = h0(Q_p) = 1, L_p = 0 with
  // h0(Q_p, Q_p(1)) = 0, and the real place contributes 0 - 0.
  CHECK(greenberg_wiles(0, 1, {{0, 0}, {0, 0}}) == -1);
  CHECK_THROWS_AS(greenberg_wiles(-1, 0, {}), UsageError);
}

TEST_CASE("defect scan") {
  auto s = defect_never_one_scan(50, {3, 5, 7}, 8);
  CHECK(s.violations == 0);
  CHECK(s.indeterminate == 0);
  CHECK(s.entries.front().d == 1);
  CHECK(std::find(s.skipped.begin(), s.skipped.end(), std::pair<long, long>{5, 5}) != s.skipped.end());
  for (const auto& e : s.entries) CHECK(e.report.delta == 0);
}

TEST_CASE("pairwise spans") {
  auto Qf = field(1);
  CHECK(pairwise_span_check(Qf, 3, {prime(Qf, 2), prime(Qf, 5), prime(Qf, 11)}, 3).holds());
  auto K = field(29);
  auto s = pairwise_span_check(K, 3, {prime(K, 5, 1), prime(K, 5, 3), prime(K, 2)}, 3);
  CHECK(s.holds());
  CHECK(s.full_order > 1);
}
