#include "iwlab/abgroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace iwlab {

namespace {
Integer p_part_of(const Integer& n, const Integer& p) { return n == 0 ? Integer(0) : p_part(n, p); }
}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

void IntMatrix::append_row(const std::vector<Integer>& r) {
  if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::vector<Integer> mul(const std::vector<Integer>& x, const IntMatrix& m) {
  if (x.size() != m.rows()) throw std::invalid_argument("vector/matrix shape mismatch");
  std::vector<Integer> y(m.cols());
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (x[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) y[j] += x[k] * m(k, j);
  }
  return y;
}

// ---------------------------------------------------------------- Smith form

namespace {

struct SmithWork {
  IntMatrix A, V, Vi;

  void col_addmul(std::size_t dst, std::size_t src, const Integer& q) {
    // col_dst -= q col_src
    for (std::size_t r = 0; r < A.rows(); ++r) A(r, dst) -= q * A(r, src);
    for (std::size_t r = 0; r < V.rows(); ++r) V(r, dst) -= q * V(r, src);
    for (std::size_t c = 0; c < Vi.cols(); ++c) Vi(src, c) += q * Vi(dst, c);
  }
  void col_swap(std::size_t i, std::size_t j) {
    A.swap_cols(i, j);
    V.swap_cols(i, j);
    Vi.swap_rows(i, j);
  }
  void col_negate(std::size_t i) {
    for (std::size_t r = 0; r < A.rows(); ++r) A(r, i) = -A(r, i);
    for (std::size_t r = 0; r < V.rows(); ++r) V(r, i) = -V(r, i);
    for (std::size_t c = 0; c < Vi.cols(); ++c) Vi(i, c) = -Vi(i, c);
  }
  void row_addmul(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t c = 0; c < A.cols(); ++c) A(dst, c) -= q * A(src, c);
  }
};

}  // namespace

SmithForm smith_form(const IntMatrix& relations) {
  const std::size_t n = relations.cols();
  SmithWork w{relations, IntMatrix::identity(n), IntMatrix::identity(n)};
  IntMatrix& A = w.A;
  const std::size_t m = A.rows();
  std::size_t t = 0;
  while (t < std::min(m, n)) {
    // pivot: nonzero entry of minimal absolute value in the trailing block
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (A(i, j) != 0 && (pi == m || abs(A(i, j)) < abs(A(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    A.swap_rows(t, pi);
    w.col_swap(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A(i, t) == 0) continue;
        Integer q = fdiv(A(i, t), A(t, t));
        w.row_addmul(i, t, q);
        if (A(i, t) != 0) {
          A.swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A(t, j) == 0) continue;
        Integer q = fdiv(A(t, j), A(t, t));
        w.col_addmul(j, t, q);
        if (A(t, j) != 0) {
          w.col_swap(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility d_t | every remaining entry
      for (std::size_t i = t + 1; i < m && clean; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (A(i, j) % A(t, t) != 0) {
            w.row_addmul(t, i, Integer(-1));
            clean = false;
            break;
          }
    }
    if (A(t, t) < 0) w.col_negate(t);
    ++t;
  }
  SmithForm out;
  out.diagonal.assign(n, 0);
  for (std::size_t i = 0; i < std::min(m, n); ++i) out.diagonal[i] = A(i, i);
  out.V = std::move(w.V);
  out.V_inv = std::move(w.Vi);
  return out;
}

IntMatrix lattice_kernel(const IntMatrix& C, const std::vector<Integer>& moduli) {
  const std::size_t t = C.rows(), k = C.cols();
  if (moduli.size() != k) throw std::invalid_argument("lattice_kernel: moduli length");
  // Rows [C | I_t] and [diag(moduli) | 0]; echelonize the first k columns.
  IntMatrix A(0, k + t);
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<Integer> r(k + t);
    for (std::size_t j = 0; j < k; ++j) r[j] = C(i, j);
    r[k + i] = 1;
    A.append_row(r);
  }
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Integer> r(k + t);
    r[j] = moduli[j];
    A.append_row(r);
  }
  std::size_t top = 0;
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = top + 1; i < A.rows(); ++i) {
      while (A(i, j) != 0) {
        Integer q = fdiv(A(top, j), A(i, j));
        for (std::size_t c = 0; c < A.cols(); ++c) A(top, c) -= q * A(i, c);
        A.swap_rows(top, i);
      }
    }
    if (A(top, j) != 0) ++top;
  }
  IntMatrix out(0, t);
  for (std::size_t i = top; i < A.rows(); ++i) {
    std::vector<Integer> r(t);
    bool nonzero = false;
    for (std::size_t c = 0; c < t; ++c) {
      r[c] = A(i, k + c);
      nonzero = nonzero || r[c] != 0;
    }
    if (nonzero) out.append_row(r);
  }
  return out;
}

// --------------------------------------------------------- FiniteAbelianGroup

FiniteAbelianGroup smith_presentation(const IntMatrix& relations, std::size_t ambient_rank) {
  IntMatrix R = relations;
  if (R.rows() == 0) R = IntMatrix(0, ambient_rank);
  if (R.cols() != ambient_rank) throw std::invalid_argument("relation width != ambient rank");
  SmithForm s = smith_form(R);
  FiniteAbelianGroup G;
  std::vector<std::size_t> keep;
  std::vector<std::size_t> free_cols;
  for (std::size_t i = 0; i < ambient_rank; ++i) {
    if (s.diagonal[i] == 0)
      free_cols.push_back(i);
    else if (s.diagonal[i] != 1)
      keep.push_back(i);
  }
  // diagonal entries are already ordered by divisibility among the nonzero ones.
  for (auto i : keep) G.factors_.push_back(s.diagonal[i]);
  G.free_rank_ = free_cols.size();
  keep.insert(keep.end(), free_cols.begin(), free_cols.end());
  G.to_coords_ = IntMatrix(ambient_rank, keep.size());
  G.from_coords_ = IntMatrix(keep.size(), ambient_rank);
  for (std::size_t c = 0; c < keep.size(); ++c) {
    for (std::size_t r = 0; r < ambient_rank; ++r) {
      G.to_coords_(r, c) = s.V(r, keep[c]);
      G.from_coords_(c, r) = s.V_inv(keep[c], r);
    }
  }
  return G;
}

FiniteAbelianGroup FiniteAbelianGroup::from_invariants(std::vector<Integer> factors) {
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<Integer> r(factors.size());
    r[i] = factors[i];
    rows.push_back(r);
  }
  return smith_presentation(IntMatrix::from_rows(rows, factors.size()), factors.size());
}

Integer FiniteAbelianGroup::torsion_order() const {
  Integer o = 1;
  for (const auto& d : factors_) o *= d;
  return o;
}

Integer FiniteAbelianGroup::order() const {
  if (!is_finite()) throw std::domain_error("group has a free part");
  return torsion_order();
}

Integer FiniteAbelianGroup::exponent() const {
  if (!is_finite()) throw std::domain_error("group has a free part");
  return factors_.empty() ? Integer(1) : factors_.back();
}

GroupElement FiniteAbelianGroup::identity() const {
  return {std::vector<Integer>(factors_.size() + free_rank_)};
}

GroupElement FiniteAbelianGroup::reduce(std::vector<Integer> coords) const {
  if (coords.size() != factors_.size() + free_rank_)
    throw std::invalid_argument("element length does not match group");
  for (std::size_t i = 0; i < factors_.size(); ++i) coords[i] = mod(coords[i], factors_[i]);
  return {std::move(coords)};
}

GroupElement FiniteAbelianGroup::from_ambient(const std::vector<Integer>& x) const {
  return reduce(mul(x, to_coords_));
}

std::vector<Integer> FiniteAbelianGroup::to_ambient(const GroupElement& g) const {
  return mul(g.e, from_coords_);
}

GroupElement FiniteAbelianGroup::generator(std::size_t i) const {
  GroupElement g = identity();
  g.e.at(i) = 1;
  return g;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  std::vector<Integer> c(a.e.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.e[i] + b.e.at(i);
  return reduce(std::move(c));
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& a) const {
  std::vector<Integer> c(a.e.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.e[i];
  return reduce(std::move(c));
}

GroupElement FiniteAbelianGroup::scale(const GroupElement& a, const Integer& k) const {
  std::vector<Integer> c(a.e.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * a.e[i];
  return reduce(std::move(c));
}

bool FiniteAbelianGroup::is_identity(const GroupElement& a) const {
  return std::all_of(a.e.begin(), a.e.end(), [](const Integer& x) { return x == 0; });
}

FiniteAbelianGroup FiniteAbelianGroup::p_part(const Integer& p) const {
  if (!is_finite()) throw std::domain_error("p_part of an infinite group");
  FiniteAbelianGroup H;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    Integer q = p_part_of(factors_[i], p);
    if (q > 1) {
      keep.push_back(i);
      H.factors_.push_back(q);
    }
  }
  const std::size_t n = ambient_rank();
  H.to_coords_ = IntMatrix(n, keep.size());
  H.from_coords_ = IntMatrix(keep.size(), n);
  for (std::size_t c = 0; c < keep.size(); ++c) {
    // Z/d -> Z/p^a is reduction; its section Z/p^a -> Z/d is multiplication by
    // e = (d/p^a) * ((d/p^a)^{-1} mod p^a).
    const Integer& d = factors_[keep[c]];
    const Integer& q = H.factors_[c];
    Integer cof = d / q;
    Integer e = cof * invert(cof, q);
    for (std::size_t r = 0; r < n; ++r) {
      H.to_coords_(r, c) = to_coords_(r, keep[c]);
      H.from_coords_(c, r) = e * from_coords_(keep[c], r);
    }
  }
  return H;
}

// ---------------------------------------------------------------- operations

Integer element_order(const FiniteAbelianGroup& G, const GroupElement& g) {
  const auto& d = G.invariants();
  for (std::size_t i = d.size(); i < g.e.size(); ++i)
    if (g.e[i] != 0) throw std::domain_error("element of infinite order");
  Integer ord = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    Integer oi = d[i] / gcd(d[i], g.e[i]);
    ord = ord / gcd(ord, oi) * oi;
  }
  return ord;
}

Integer subgroup_image_order(const FiniteAbelianGroup& G, const std::vector<GroupElement>& gens) {
  const auto& d = G.invariants();
  const std::size_t k = d.size();
  if (!G.is_finite()) throw std::domain_error("subgroup order in an infinite group");
  IntMatrix R(0, k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Integer> r(k);
    r[i] = d[i];
    R.append_row(r);
  }
  for (const auto& g : gens) R.append_row(g.e);
  Integer quotient = 1;
  for (const auto& x : smith_form(R).diagonal) quotient *= x;
  return G.order() / quotient;
}

std::optional<Integer> solve_dlog(const FiniteAbelianGroup& G, const GroupElement& g,
                                  const GroupElement& h) {
  const auto& d = G.invariants();
  for (std::size_t i = d.size(); i < g.e.size(); ++i)
    if (g.e[i] != 0 || h.e[i] != 0) throw std::domain_error("dlog with free components");
  // n ≡ r (mod m), accumulated over the congruences n g_i ≡ h_i (mod d_i).
  Integer r = 0, m = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    Integer gi = mod(g.e[i], d[i]), hi = mod(h.e[i], d[i]);
    Integer c = gcd(gi, d[i]);
    if (hi % c != 0) return std::nullopt;
    Integer di = d[i] / c;
    Integer ri = di == 1 ? Integer(0) : mod((hi / c) * invert(gi / c, di), di);
    // combine n ≡ r (m) with n ≡ ri (di)
    Integer gg = gcd(m, di);
    if (mod(ri - r, gg) != 0) return std::nullopt;
    Integer l = m / gg * di;
    Integer step = m / gg;
    Integer t = (di / gg == 1) ? Integer(0) : mod(((ri - r) / gg) * invert(step, di / gg), di / gg);
    r = mod(r + m * t, l);
    m = l;
  }
  return r;
}

std::string to_string(const GroupElement& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.e.size(); ++i) s += (i ? "," : "") + g.e[i].get_str();
  return s + ")";
}

}  // namespace iwlab
