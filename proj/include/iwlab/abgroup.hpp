#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iwlab/integer.hpp"

namespace iwlab {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Integer> row(std::size_t i) const;
  void append_row(const std::vector<Integer>& r);
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

/// row vector times matrix
std::vector<Integer> mul(const std::vector<Integer>& x, const IntMatrix& m);

/// Smith form U * A * V = diag(d) of the relation matrix A (relations are rows).
/// Only V and its inverse are kept: x -> x V maps the ambient lattice onto
/// coordinates in which the relation lattice is diagonal.
struct SmithForm {
  std::vector<Integer> diagonal;  // length = ambient rank; zeros mark free directions
  IntMatrix V, V_inv;
};
SmithForm smith_form(const IntMatrix& relations);

/// Basis (as rows) of { e in Z^t : e * C = 0 mod moduli[j] in column j } for a
/// t x k matrix C.
IntMatrix lattice_kernel(const IntMatrix& C, const std::vector<Integer>& moduli);

/// Exponent vector in a FiniteAbelianGroup, components reduced mod the
/// invariant factors (free components are left unreduced).
struct GroupElement {
  std::vector<Integer> e;
  bool operator==(const GroupElement&) const = default;
};

/// Z^n / (relations) in Smith presentation d_1 | d_2 | ... | d_k (each > 1)
/// plus a free part, with the change of basis to and from the ambient Z^n.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;

  /// Group with the given invariant factors and the identity as ambient basis.
  static FiniteAbelianGroup from_invariants(std::vector<Integer> factors);

  const std::vector<Integer>& invariants() const { return factors_; }
  std::size_t free_rank() const { return free_rank_; }
  std::size_t ambient_rank() const { return to_coords_.rows(); }
  bool is_finite() const { return free_rank_ == 0; }
  /// Order of the torsion part (the whole group when finite).
  Integer torsion_order() const;
  /// Order; throws for infinite groups.
  Integer order() const;
  Integer exponent() const;

  GroupElement identity() const;
  /// Class of an ambient vector x in Z^n.
  GroupElement from_ambient(const std::vector<Integer>& x) const;
  /// Some ambient vector mapping to g.
  std::vector<Integer> to_ambient(const GroupElement& g) const;
  GroupElement reduce(std::vector<Integer> coords) const;
  /// Generator i of the Smith basis.
  GroupElement generator(std::size_t i) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement scale(const GroupElement& a, const Integer& k) const;
  bool is_identity(const GroupElement& a) const;

  /// p-primary part as its own group, with the ambient map composed.
  FiniteAbelianGroup p_part(const Integer& p) const;

  std::vector<std::string> labels;

 private:
  friend FiniteAbelianGroup smith_presentation(const IntMatrix&, std::size_t);
  std::vector<Integer> factors_;  // torsion factors, then free_rank_ zeros in coordinates
  std::size_t free_rank_ = 0;
  IntMatrix to_coords_;    // n x (k + free)
  IntMatrix from_coords_;  // (k + free) x n
};

/// Present Z^ambient_rank / rowspan(relations).
FiniteAbelianGroup smith_presentation(const IntMatrix& relations, std::size_t ambient_rank);

/// Least n >= 1 with n g = 0; throws std::domain_error for elements of infinite order.
Integer element_order(const FiniteAbelianGroup& G, const GroupElement& g);

/// Order of the subgroup generated by gens (finite groups only).
Integer subgroup_image_order(const FiniteAbelianGroup& G, const std::vector<GroupElement>& gens);

/// Smallest n >= 0 with n g = h, or nullopt when h is not in <g>.
std::optional<Integer> solve_dlog(const FiniteAbelianGroup& G, const GroupElement& g,
                                  const GroupElement& h);

std::string to_string(const GroupElement& g);

}  // namespace iwlab
