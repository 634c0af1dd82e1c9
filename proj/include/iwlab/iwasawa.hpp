#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iwlab/classfield.hpp"

namespace iwlab {

/// v_p(N(q)^(p-1) - 1) == 1: Frob_q topologically generates Gal(F_inf/F).
bool is_inert_in_cyclotomic(const PrimeIdeal& q, const QuadraticField& K, long p);

/// a_1 = -log<N(q2)> / log<N(q1)>; logs taken at precision `prec`, so a_1 is
/// known modulo p^(prec - 1).
PAdicNumber a1_coefficient(const PrimeIdeal& q1, const PrimeIdeal& q2, long p, long prec);

struct FrobeniusModuleReport {
  PrimeIdeal q1, q2;
  long p = 0, N = 0;
  PAdicNumber a1;  // at precision N - 1
  GroupElement element;  // a1 Frob_q1 + Frob_q2 in G_N
  PAdicNumber degree;    // its degree, zero within precision
  std::vector<Integer> invariants;
  Integer m_Q = 0, m_Q_high = 0;
  bool stable = false;
};

FrobeniusModuleReport mq_generator(const QuadraticField& K, long p, const PrimeIdeal& q1,
                                   const PrimeIdeal& q2, long N);
/// Image of a1 Frob_q1 + Frob_q2 in G_N with a1 known to the exponent of G_N.
GroupElement mq_element(const GaloisGroupG& G, const PrimeIdeal& q1, const PrimeIdeal& q2);
FrobeniusModuleReport mq_order(const QuadraticField& K, long p, const PrimeIdeal& q1,
                               const PrimeIdeal& q2, long N);

struct LeopoldtReport {
  long delta = 0;
  long unit_rank = 0;
  std::optional<long> regulator_valuation;
  long precision = 0;
  bool certified = true;
  bool standing_assumption = false;
};

LeopoldtReport leopoldt_defect(const QuadraticField& K, long p, long N);

struct LocalTerm {
  long dim_L = 0, h0 = 0;
};
long greenberg_wiles(long h0_V, long h0_Vdual, const std::vector<LocalTerm>& locals);

struct ScanEntry {
  long d = 1, p = 0;
  LeopoldtReport report;
  std::string status;  // "ok", "violation", "indeterminate"
};

struct ScanReport {
  std::vector<ScanEntry> entries;
  std::vector<std::pair<long, long>> skipped;  // ramified (d, p)
  long violations = 0, indeterminate = 0;
};

/// Leopoldt defect for F = Q and every squarefree 2 <= d <= d_max.
ScanReport defect_never_one_scan(long d_max, const std::vector<long>& primes, long N);

struct SpanReport {
  Integer pairwise_order, full_order, joint_order;
  bool holds() const { return pairwise_order == full_order && full_order == joint_order; }
};

/// Compares the span of the degree-zero elements attached to the pairs
/// (q_i, q_last) with the image of the whole degree-zero lattice in G_N.
SpanReport pairwise_span_check(const QuadraticField& K, long p, const std::vector<PrimeIdeal>& Q, long N);

}  // namespace iwlab
