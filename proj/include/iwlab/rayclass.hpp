#pragma once

#include <string>
#include <utility>
#include <vector>

#include "iwlab/abgroup.hpp"
#include "iwlab/localize.hpp"
#include "iwlab/quadfield.hpp"

namespace iwlab {

/// Integral modulus as a product of prime powers.
struct Modulus {
  std::vector<std::pair<PrimeIdeal, long>> factors;

  static Modulus of(const QuadraticField& K, const Ideal& m);
  Integer norm() const;
  bool divisible_by(const Integer& ell) const;
  std::string str() const;
};

/// p-part of the wide ray class group Cl(m), presented on the p-parts of the
/// local unit groups (O/P^k)* followed by primes representing the Smith
/// generators of the class group.
class RayClassGroup {
 public:
  enum class BlockKind { residue, local_split, local_inert, local_rational };

  /// One factor (O/P^k)*(p). Residue blocks are cyclic of order p^e inside the
  /// residue field; local blocks use log<x>/p modulo p^(k-1).
  struct Block {
    PrimeIdeal prime;
    long exponent = 1;
    BlockKind kind = BlockKind::residue;
    std::vector<Integer> orders;
    Place place;              // local blocks
    Integer residue_gen = 0;  // residue blocks with f = 1: element of order p^e
    Integer residue_gen_y = 0;
    Integer cofactor = 1;  // (N(P) - 1) / p^e
  };

  RayClassGroup(const QuadraticField& K, const Ideal& m, long p);

  const QuadraticField& field() const { return K_; }
  long prime() const { return p_; }
  const Modulus& modulus() const { return m_; }
  const FiniteAbelianGroup& group() const { return G_; }
  Integer order() const { return G_.order(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const std::vector<PrimeIdeal>& class_generators() const { return cl_primes_; }

  /// Number of local coordinates and their moduli.
  std::size_t residue_rank() const { return residue_orders_.size(); }
  const std::vector<Integer>& residue_orders() const { return residue_orders_; }
  /// |(O/m)*(p)|
  Integer residue_group_order() const;
  /// Order of the image of the global units in (O/m)*(p).
  Integer unit_image_order() const;
  /// Order of the p-part of the class group.
  Integer class_group_p_order() const;

  /// Local coordinates of x, which must be a unit at every prime of m.
  std::vector<Integer> residue_coordinates(const FieldElement& x) const;
  GroupElement image_of_residue(const FieldElement& x) const;
  /// Class of an ideal coprime to m.
  GroupElement class_of(const Ideal& A) const;
  /// Ambient exponent vector (local coordinates, then class generators) of A.
  std::vector<Integer> ambient_of(const Ideal& A) const;

 private:
  QuadraticField K_;
  long p_;
  Modulus m_;
  std::vector<Block> blocks_;
  std::vector<Integer> residue_orders_;
  std::vector<PrimeIdeal> cl_primes_;
  std::vector<Integer> cl_orders_;
  FiniteAbelianGroup G_;
};

}  // namespace iwlab
