#pragma once

#include <memory>
#include <vector>

#include "iwlab/rayclass.hpp"

namespace iwlab {

/// Degree log<N(a)> / log(1 + p) of a norm coprime to p, at precision N.
PAdicNumber norm_degree(const Integer& norm, long p, long N);

struct FrobeniusImage {
  GroupElement cls;
  PAdicNumber degree;
  /// Exact valuation of the degree in Z_p; finite because N(q) != 1.
  long degree_valuation = 0;
};

/// Finite model G_N = Cl(p^(N+1))(p) of the Galois group of the maximal abelian
/// pro-p extension unramified outside p, with the degree map to Z/p^N.
class GaloisGroupG {
 public:
  GaloisGroupG(const QuadraticField& K, long p, long N);

  const QuadraticField& field() const { return ray_->field(); }
  long prime() const { return p_; }
  long precision() const { return N_; }
  long modulus_exponent() const { return N_ + 1; }
  const RayClassGroup& ray() const { return *ray_; }
  const FiniteAbelianGroup& group() const { return ray_->group(); }

  /// deg(g) modulo p^N.
  PAdicNumber degree(const GroupElement& g) const;
  /// Degrees of the ambient generators.
  const std::vector<PAdicNumber>& generator_degrees() const { return degrees_; }
  GroupElement class_of(const Ideal& A) const { return ray_->class_of(A); }

 private:
  long p_, N_;
  std::shared_ptr<const RayClassGroup> ray_;
  std::vector<PAdicNumber> degrees_;
};

GaloisGroupG group_G(const QuadraticField& K, long p, long N);
/// |G_(N+1)| = p |G_N|, the sign that the torsion has been reached.
bool is_stable(const GaloisGroupG& G);

/// Class of q in G_N and its degree; UsageError for q above p.
FrobeniusImage frobenius_image(const GaloisGroupG& G, const PrimeIdeal& q);

/// p-part of N(q) - 1.
Integer e_of_q(const PrimeIdeal& q, long p);

struct EvenCriterionReport {
  Verdict pass = Verdict::indeterminate;
  Integer e_q;
  /// (M, |Cl(q p^M)(p)| / |Cl(p^M)(p)|) for M = N + 1, N + 2
  std::vector<std::pair<long, Integer>> ratios;
  Integer inertia_order() const { return ratios.empty() ? Integer(0) : ratios.front().second; }
};

EvenCriterionReport even_criterion(const QuadraticField& K, long p, const PrimeIdeal& q, long N);

}  // namespace iwlab
