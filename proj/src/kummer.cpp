#include "iwlab/kummer.hpp"

#include <algorithm>

namespace iwlab {

namespace {

std::vector<PAdicNumber> logs_above_p(const std::vector<Place>& places, const FieldElement& x, long prec) {
  std::vector<PAdicNumber> out;
  for (const auto& v : places)
    for (const auto& c : loc(v, x, prec).log) out.push_back(c);
  return out;
}

}  // namespace

Integer KummerCertificate::predicted_degree() const {
  return a_exponent < 0 ? Integer(0) : pow(Integer(p), static_cast<unsigned long>(a_exponent));
}

KummerCertificate construct_alpha(const QuadraticField& K, long p, const PrimeIdeal& q1,
                                  const PrimeIdeal& q2, long N) {
  FrobeniusModuleReport mq = mq_order(K, p, q1, q2, N);
  if (!mq.stable) throw PrecisionError("m_Q has not stabilized between N and N + 2");
  const Integer P = p;
  const long vm = iwlab::valuation(mq.m_Q, P);

  SUnitBasis B = s_unit_basis(K, {q1, q2});
  const IntMatrix& E = B.valuation_lattice;
  Integer det = E(0, 0) * E(1, 1) - E(0, 1) * E(1, 0);
  const long vdet = iwlab::valuation(det, P);
  auto places = completions_above_p(K, p);

  long reg = 0;
  std::vector<PAdicNumber> log_eps;
  if (!K.is_rational()) {
    auto probe = logs_above_p(places, K.fundamental_unit(), N + 4);
    reg = N + 4;
    for (const auto& c : probe)
      if (!c.is_zero()) reg = std::min(reg, c.valuation());
    if (reg >= N + 4) throw PrecisionError("log of the fundamental unit vanishes at this precision");
  }
  const long W = N + 4 + vm + vdet + reg;

  PAdicNumber a1 = a1_coefficient(q1, q2, p, W + 1);
  PAdicNumber m(p, mq.m_Q, W);
  std::vector<PAdicNumber> t{m * a1, m};
  PAdicNumber d(p, det, W);
  std::vector<PAdicNumber> x{
      (t[0] * PAdicNumber(p, E(1, 1), W) - t[1] * PAdicNumber(p, E(1, 0), W)) / d,
      (t[1] * PAdicNumber(p, E(0, 0), W) - t[0] * PAdicNumber(p, E(0, 1), W)) / d};
  for (const auto& xi : x)
    if (!xi.is_zero() && xi.valuation() < 0)
      throw UnsupportedError("valuation target is not reached by p-integral S-unit exponents");

  SUnitProduct alpha;
  alpha.p = p;
  alpha.basis = B.elements;
  alpha.labels = B.labels;
  alpha.exponents.assign(B.elements.size(), PAdicNumber::zero(p, W));
  alpha.exponents[B.first_nonunit] = x[0];
  alpha.exponents[B.first_nonunit + 1] = x[1];

  if (!K.is_rational()) {
    // cancel the remaining log by a power of the fundamental unit
    std::vector<PAdicNumber> L(places.size() == 1 && places[0].type == SplitType::inert ? 2 : places.size(),
                               PAdicNumber::zero(p, W));
    for (int j = 0; j < 2; ++j) {
      auto lg = logs_above_p(places, B.elements[B.first_nonunit + j], W + 2);
      for (std::size_t c = 0; c < L.size(); ++c) L[c] += x[j] * lg[c];
    }
    log_eps = logs_above_p(places, K.fundamental_unit(), W + 2);
    std::size_t c = 0;
    for (std::size_t i = 1; i < log_eps.size(); ++i)
      if (log_eps[i].valuation() < log_eps[c].valuation()) c = i;
    PAdicNumber y = -(L[c] / log_eps[c]);
    if (!y.is_zero() && y.valuation() < 0)
      throw UnsupportedError("unit correction is not p-integral");
    alpha.exponents[1] = y;
  }

  KummerCertificate cert = verify_alpha(alpha, K, p, q1, q2, N, mq);
  Integer bound = p_part(K.is_rational() ? Integer(1) : K.class_group().order(), P) *
                  pow(P, static_cast<unsigned long>(N));
  Integer pm = 1;
  while (pm < bound) {
    pm *= p;
    ++cert.m;
  }
  for (const auto& ti : t) cert.truncations.push_back(mod(ti.is_zero() ? Integer(0) : ti.lift(), pm));
  return cert;
}

KummerCertificate verify_alpha(const SUnitProduct& alpha, const QuadraticField& K, long p,
                               const PrimeIdeal& q1, const PrimeIdeal& q2, long N,
                               const std::optional<FrobeniusModuleReport>& mq) {
  KummerCertificate c;
  c.alpha = alpha;
  c.q1 = q1;
  c.q2 = q2;
  c.p = p;
  c.N = N;
  if (alpha.p != p) throw UsageError("alpha is a product over a different prime");
  auto reject = [&](Verdict v, const std::string& clause, const std::string& why) {
    c.status = v;
    c.failed_clause = clause;
    c.reason = why;
    return c;
  };

  if (!eq_membership(K, alpha, {q1, q2})) return reject(Verdict::no, "i", "alpha has valuation outside Q");

  c.valuations = {alpha.valuation(q1), alpha.valuation(q2)};
  for (const auto& v : c.valuations)
    if (v.is_zero()) return reject(Verdict::indeterminate, "ii", "a valuation vanishes at this precision");
  if (c.valuations[0].valuation() != c.valuations[1].valuation())
    return reject(Verdict::no, "ii", "v_q1 and v_q2 generate different ideals");
  c.a_exponent = c.valuations[0].valuation();

  bool undecided = false;
  c.loc_p_trivial = true;
  for (const auto& v : completions_above_p(K, p)) {
    Verdict t = is_loc_torsion(alpha, v, p, N);
    c.loc_p_torsion.emplace_back(v.str(), t);
    if (t == Verdict::no) return reject(Verdict::no, "iii", "loc_p(alpha) is not torsion at " + v.str());
    if (t == Verdict::indeterminate) undecided = true;
    LocalValue lv = loc_value(v, alpha, N);
    bool one = lv.inert ? lv.unit_ext.congruent(UnramifiedQuadElem(p, v.d, 1, 0, N))
                        : lv.unit.congruent(PAdicNumber(p, Integer(1), N));
    c.loc_p_trivial = c.loc_p_trivial && one;
  }
  if (undecided) return reject(Verdict::indeterminate, "iii", "loc_p(alpha) is below precision");

  FrobeniusModuleReport r = mq ? *mq : mq_order(K, p, q1, q2, N);
  c.m_Q = r.m_Q;
  c.m_Q_stable = r.stable;
  if (!r.stable) return reject(Verdict::indeterminate, "iv", "m_Q has not stabilized");
  if (iwlab::valuation(r.m_Q, Integer(p)) > c.a_exponent)
    return reject(Verdict::no, "iv", "m_Q does not divide p^a");
  c.status = Verdict::yes;
  return c;
}

RankReport kummer_rank(const std::vector<FieldElement>& T, const QuadraticField& K, long p, long N) {
  auto places = completions_above_p(K, p);
  std::vector<PrimeIdeal> others;
  for (const auto& t : T)
    for (const auto& P : support(K, t))
      if (P.ell != p && std::find(others.begin(), others.end(), P) == others.end()) others.push_back(P);
  std::sort(others.begin(), others.end());
  auto build = [&](long M) {
    std::vector<std::vector<PAdicNumber>> rows;
    for (const auto& t : T) {
      std::vector<PAdicNumber> row;
      for (const auto& P : others) row.emplace_back(p, Integer(valuation(P, t)), M);
      for (const auto& v : places) {
        LocalImage img = loc(v, t, M);
        row.push_back(img.valuation);
        for (const auto& c : img.log) row.push_back(c);
      }
      rows.push_back(row);
    }
    return rows;
  };
  RankReport r;
  r.precision = N;
  r.rank = zp_rank(build(N));
  r.rank_high = zp_rank(build(N + 2));
  return r;
}

Verdict same_kummer_extension(const FieldElement& x, const FieldElement& y, const QuadraticField& K,
                              long p, long N) {
  for (const auto* z : {&x, &y}) {
    auto r = kummer_rank({*z}, K, p, N);
    if (!r.certified()) return Verdict::indeterminate;
    if (r.rank == 0) throw UsageError(z->str() + " is torsion in the completion");
  }
  auto r = kummer_rank({x, y}, K, p, N);
  if (!r.certified()) return Verdict::indeterminate;
  return r.rank == 1 ? Verdict::yes : Verdict::no;
}

}  // namespace iwlab
