#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iwlab/iwasawa.hpp"
#include "iwlab/localize.hpp"

namespace iwlab {

struct KummerCertificate {
  SUnitProduct alpha;
  PrimeIdeal q1, q2;
  long p = 0, N = 0;
  std::vector<PAdicNumber> valuations;                     // v_q1, v_q2
  std::vector<std::pair<std::string, Verdict>> loc_p_torsion;  // per place above p
  bool loc_p_trivial = false;                              // loc_p(alpha) = 1 within precision
  long a_exponent = -1;                                    // (v_q1) = (v_q2) = (p^a)
  Integer m_Q = 0;
  bool m_Q_stable = false;
  /// Truncation parameter: least m with p^m >= |Cl(p)| p^N, and the target
  /// valuations reduced modulo p^m.
  long m = 0;
  std::vector<Integer> truncations;

  Verdict status = Verdict::indeterminate;
  std::string failed_clause;  // "i", "ii", "iii", "iv" or empty
  std::string reason;

  Integer predicted_degree() const;
};

/// Builds alpha in the completed Q-units with v_qi(alpha) = m_Q (a1, 1)_i and
/// trivial localization at p, then verifies it.
KummerCertificate construct_alpha(const QuadraticField& K, long p, const PrimeIdeal& q1,
                                  const PrimeIdeal& q2, long N);

/// Checks (i) alpha is a Q-unit, (ii) v_q1 and v_q2 generate the same ideal
/// (p^a), (iii) loc_p(alpha) is torsion, (iv) m_Q divides p^a.
KummerCertificate verify_alpha(const SUnitProduct& alpha, const QuadraticField& K, long p,
                               const PrimeIdeal& q1, const PrimeIdeal& q2, long N,
                               const std::optional<FrobeniusModuleReport>& mq = std::nullopt);

/// Z_p-rank of the closure of T: valuations at every finite place in the
/// support of T together with logs at the places above p.
RankReport kummer_rank(const std::vector<FieldElement>& T, const QuadraticField& K, long p, long N);

Verdict same_kummer_extension(const FieldElement& x, const FieldElement& y, const QuadraticField& K,
                              long p, long N);

}  // namespace iwlab
