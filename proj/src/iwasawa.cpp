#include "iwlab/iwasawa.hpp"

#include <algorithm>

namespace iwlab {

namespace {

void check_odd_prime(long p) {
  if (p < 3 || !is_prime(Integer(p))) throw UsageError("p must be an odd prime");
}

void check_pair(const QuadraticField& K, long p, const PrimeIdeal& q1, const PrimeIdeal& q2) {
  check_odd_prime(p);
  if (q1 == q2) throw UsageError("q1 and q2 must be distinct");
  for (const auto* q : {&q1, &q2})
    if (!is_inert_in_cyclotomic(*q, K, p))
      throw UsageError(to_string(*q) + " is not inert in the cyclotomic Z_" + std::to_string(p) + "-extension");
}

long v_p_exponent(const FiniteAbelianGroup& G, long p) {
  return G.order() == 1 ? 0 : iwlab::valuation(G.exponent(), Integer(p));
}

PAdicNumber log_angle_of_norm(const PrimeIdeal& q, long p, long prec) {
  return plog(angle(PAdicNumber(p, q.norm(), prec)));
}

}  // namespace

bool is_inert_in_cyclotomic(const PrimeIdeal& q, const QuadraticField& K, long p) {
  (void)K;
  check_odd_prime(p);
  if (q.ell == p) throw UsageError("q lies above p");
  return iwlab::valuation(pow(q.norm(), static_cast<unsigned long>(p - 1)) - 1, Integer(p)) == 1;
}

PAdicNumber a1_coefficient(const PrimeIdeal& q1, const PrimeIdeal& q2, long p, long prec) {
  PAdicNumber l1 = log_angle_of_norm(q1, p, prec), l2 = log_angle_of_norm(q2, p, prec);
  if (l1.is_zero()) throw PrecisionError("log<N(q1)> vanishes at this precision");
  return -(l2 / l1);
}

GroupElement mq_element(const GaloisGroupG& G, const PrimeIdeal& q1, const PrimeIdeal& q2) {
  const long p = G.prime();
  long e = v_p_exponent(G.group(), p);
  PAdicNumber a1 = a1_coefficient(q1, q2, p, e + 2);
  Integer a = a1.is_zero() ? Integer(0) : a1.lift();
  const auto& H = G.group();
  return H.add(H.scale(G.class_of(q1.ideal), a), G.class_of(q2.ideal));
}

FrobeniusModuleReport mq_generator(const QuadraticField& K, long p, const PrimeIdeal& q1,
                                   const PrimeIdeal& q2, long N) {
  check_pair(K, p, q1, q2);
  if (N < 2) throw UsageError("precision N must be at least 2");
  FrobeniusModuleReport r;
  r.q1 = q1;
  r.q2 = q2;
  r.p = p;
  r.N = N;
  r.a1 = a1_coefficient(q1, q2, p, N);
  GaloisGroupG G(K, p, N);
  r.invariants = G.group().invariants();
  r.element = mq_element(G, q1, q2);
  r.degree = G.degree(r.element);
  return r;
}

FrobeniusModuleReport mq_order(const QuadraticField& K, long p, const PrimeIdeal& q1,
                               const PrimeIdeal& q2, long N) {
  FrobeniusModuleReport r = mq_generator(K, p, q1, q2, N);
  GaloisGroupG G(K, p, N), H(K, p, N + 2);
  r.m_Q = element_order(G.group(), r.element);
  r.m_Q_high = element_order(H.group(), mq_element(H, q1, q2));
  r.stable = r.m_Q == r.m_Q_high;
  return r;
}

LeopoldtReport leopoldt_defect(const QuadraticField& K, long p, long N) {
  check_odd_prime(p);
  if (N < 1) throw UsageError("precision N must be at least 1");
  LeopoldtReport r;
  r.precision = N;
  r.unit_rank = K.unit_rank();
  r.standing_assumption = p == 3 || (p == 5 && K.d() == 5);
  if (K.is_rational()) return r;
  auto places = completions_above_p(K, p);
  auto log_row = [&](long M) {
    std::vector<PAdicNumber> row;
    for (const auto& v : places)
      for (const auto& c : loc(v, K.fundamental_unit(), M).log) row.push_back(c);
    return row;
  };
  auto row = log_row(N);
  long rank = zp_rank({row});
  long rank_high = zp_rank({log_row(N + 2)});
  r.delta = r.unit_rank - rank;
  r.certified = rank == rank_high;
  for (const auto& c : row)
    if (!c.is_zero() && (!r.regulator_valuation || c.valuation() < *r.regulator_valuation))
      r.regulator_valuation = c.valuation();
  return r;
}

long greenberg_wiles(long h0_V, long h0_Vdual, const std::vector<LocalTerm>& locals) {
  if (h0_V < 0 || h0_Vdual < 0) throw UsageError("dimensions must be nonnegative");
  long s = h0_V - h0_Vdual;
  for (const auto& t : locals) {
    if (t.dim_L < 0 || t.h0 < 0) throw UsageError("dimensions must be nonnegative");
    s += t.dim_L - t.h0;
  }
  return s;
}

ScanReport defect_never_one_scan(long d_max, const std::vector<long>& primes, long N) {
  for (long p : primes) check_odd_prime(p);
  std::vector<long> sorted = primes;
  std::sort(sorted.begin(), sorted.end());
  ScanReport out;
  std::vector<long> ds{1};
  for (long d = 2; d <= d_max; ++d)
    if (is_squarefree(Integer(d))) ds.push_back(d);
  for (long d : ds) {
    auto K = d == 1 ? QuadraticField::rational() : QuadraticField(Integer(d));
    for (long p : sorted) {
      if (!K.is_rational() && K.disc() % p == 0) {
        out.skipped.emplace_back(d, p);
        continue;
      }
      ScanEntry e;
      e.d = d;
      e.p = p;
      e.report = leopoldt_defect(K, p, N);
      if (!e.report.certified) {
        e.status = "indeterminate";
        ++out.indeterminate;
      } else if (e.report.delta == 1) {
        e.status = "violation";
        ++out.violations;
      } else {
        e.status = "ok";
      }
      out.entries.push_back(e);
    }
  }
  return out;
}

SpanReport pairwise_span_check(const QuadraticField& K, long p, const std::vector<PrimeIdeal>& Q, long N) {
  if (Q.size() < 3) throw UsageError("the span check needs at least three primes");
  for (std::size_t i = 0; i + 1 < Q.size(); ++i) check_pair(K, p, Q[i], Q.back());
  GaloisGroupG G(K, p, N);
  const auto& H = G.group();
  std::vector<GroupElement> frob;
  for (const auto& q : Q) frob.push_back(G.class_of(q.ideal));

  std::vector<GroupElement> pairwise;
  for (std::size_t i = 0; i + 1 < Q.size(); ++i) pairwise.push_back(mq_element(G, Q[i], Q.back()));

  long E = v_p_exponent(H, p) + 2;
  Integer pE = pow(Integer(p), static_cast<unsigned long>(E));
  IntMatrix C(0, 1);
  for (const auto& q : Q) C.append_row({norm_degree(q.norm(), p, E).lift()});
  IntMatrix ker = lattice_kernel(C, {pE});
  std::vector<GroupElement> full;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    GroupElement g = H.identity();
    for (std::size_t i = 0; i < Q.size(); ++i) g = H.add(g, H.scale(frob[i], ker(r, i)));
    full.push_back(g);
  }
  SpanReport s;
  s.pairwise_order = subgroup_image_order(H, pairwise);
  s.full_order = subgroup_image_order(H, full);
  auto joint = pairwise;
  joint.insert(joint.end(), full.begin(), full.end());
  s.joint_order = subgroup_image_order(H, joint);
  return s;
}

}  // namespace iwlab
