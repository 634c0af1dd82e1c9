#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iwlab/errors.hpp"
#include "iwlab/padic.hpp"
#include "iwlab/quadfield.hpp"

namespace iwlab {

/// A finite place of F, with a local model when its residue characteristic is odd
/// and unramified: split places embed omega into Z_l by a Hensel-lifted root, inert
/// places use the unramified quadratic extension with s^2 = d.
struct Place {
  PrimeIdeal prime;
  SplitType type = SplitType::rational;
  Integer disc = 0, d = 1;

  long ell() const { return prime.ell.get_si(); }
  int residue_degree() const { return prime.f; }
  /// Image of omega modulo l^k (split or rational places).
  Integer omega_image(long k) const;
  /// Image of sqrt d modulo l^k (split places).
  Integer sqrt_d_image(long k) const;
  std::string str() const;
};

Place place_of(const QuadraticField& K, const PrimeIdeal& P);
/// One inert or two split places; UnsupportedError when p ramifies.
std::vector<Place> completions_above_p(const QuadraticField& K, long p);

/// x = l^v * u at an unramified place above an odd prime l.
struct LocalValue {
  long valuation = 0;
  bool inert = false;
  PAdicNumber unit;             // split or rational place
  UnramifiedQuadElem unit_ext;  // inert place
  std::string str() const;
};

LocalValue embed(const Place& v, const FieldElement& x, long precision);
/// Coordinates of log<u> for the unit part: one at split places, two (a, b in the
/// basis 1, s) at inert places.
std::vector<PAdicNumber> log_coordinates(const LocalValue& lv);

/// Formal product of S-units with Z_p exponents.
struct SUnitProduct {
  long p = 0;
  std::vector<FieldElement> basis;
  std::vector<std::string> labels;
  std::vector<PAdicNumber> exponents;

  static SUnitProduct of(const FieldElement& x, long p, long precision);
  /// Componentwise product (shared basis).
  SUnitProduct operator*(const SUnitProduct& o) const;
  SUnitProduct pow(const PAdicNumber& k) const;
  /// Sum of e_i v_P(u_i).
  PAdicNumber valuation(const PrimeIdeal& P) const;
  /// Primes where some basis element has nonzero valuation.
  std::vector<PrimeIdeal> support(const QuadraticField& K) const;
};

/// Image at a place above p in additive coordinates: valuation and log<.>.
struct LocalImage {
  PAdicNumber valuation;
  std::vector<PAdicNumber> log;
};

LocalImage loc(const Place& v, const SUnitProduct& x, long precision);
LocalImage loc(const Place& v, const FieldElement& x, long precision);
/// prod <u_i>^(e_i mod p^precision) at v (exponents must be p-integral).
LocalValue loc_value(const Place& v, const SUnitProduct& x, long precision);
std::vector<LocalImage> loc_p(const QuadraticField& K, const SUnitProduct& x, long precision);

/// Torsion test for the image at a place. For a field element the answer is exact when
/// x is a root of unity or has nonzero valuation; a vanishing log at precision N
/// gives indeterminate.
Verdict is_loc_torsion(const FieldElement& x, const Place& v, long p, long N);
/// For a formal product: yes means valuation and log vanish at precision N.
Verdict is_loc_torsion(const SUnitProduct& x, const Place& v, long p, long N);

/// v_q(x) = 0 for every q outside Q.
bool eq_membership(const QuadraticField& K, const SUnitProduct& x, const std::vector<PrimeIdeal>& Q);

/// Z_p-rank of a matrix known at finite precision, with certification by
/// recomputation at a higher precision.
struct RankReport {
  long rank = 0;       // at precision N
  long rank_high = 0;  // at precision N + 2
  long precision = 0;
  bool certified() const { return rank == rank_high; }
};

/// Rank by valuation-pivoted elimination; entries indistinguishable from zero
/// are treated as zero.
long zp_rank(std::vector<std::vector<PAdicNumber>> rows);

/// Rank of the closure of T in the product of completions at the places Q.
RankReport inertia_rank(const QuadraticField& K, const std::vector<FieldElement>& T,
                        const std::vector<Place>& Q, long p, long N);

}  // namespace iwlab
