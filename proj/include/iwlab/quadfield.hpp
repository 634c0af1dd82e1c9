#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iwlab/abgroup.hpp"
#include "iwlab/errors.hpp"
#include "iwlab/integer.hpp"

namespace iwlab {

class QuadraticField;

/// x + y*omega with omega = (D + sqrt D)/2; for F = Q the y coordinate is always 0.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const QuadraticField& K, const Rational& x, const Rational& y = 0);

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  const Integer& disc() const { return D_; }

  bool is_zero() const { return x_ == 0 && y_ == 0; }
  bool is_one() const { return x_ == 1 && y_ == 0; }
  bool is_rational() const { return y_ == 0; }
  bool is_integral() const { return x_.get_den() == 1 && y_.get_den() == 1; }
  /// Least positive n with n * this integral.
  Integer denominator() const;

  Rational norm() const;
  Rational trace() const;
  FieldElement conj() const;
  /// Sign of the real value under sqrt D > 0.
  int sign() const;
  /// |this| >= |conj|, decided exactly.
  bool dominates_conjugate() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  FieldElement inverse() const;
  FieldElement pow(long e) const;
  /// r * this for rational r.
  FieldElement scaled(const Rational& r) const;

  bool operator==(const FieldElement& o) const { return x_ == o.x_ && y_ == o.y_ && D_ == o.D_; }

  /// "a + b*sqrt(d)" with rational a, b.
  std::string str() const;

 private:
  friend class QuadraticField;
  Rational x_ = 0, y_ = 0;
  Integer D_ = 0;  // 0 for F = Q
};

/// Integral ideal with Z-basis {a, b + c*omega}, c | a, c | b, 0 <= b < a.
/// Over Q only a is used and b = 0, c = 1.
class Ideal {
 public:
  Ideal() = default;
  /// HNF of the Z-span of the given elements (integer coordinates).
  static Ideal span(const Integer& D, const std::vector<std::pair<Integer, Integer>>& gens);
  static Ideal unit(const Integer& D);
  static Ideal principal(const FieldElement& alpha);  // alpha integral, nonzero
  static Ideal rational(const Integer& D, const Integer& n);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& disc() const { return D_; }
  Integer norm() const { return D_ == 0 ? a_ : a_ * c_; }
  bool is_one() const { return a_ == 1; }

  Ideal operator*(const Ideal& o) const;
  Ideal pow(unsigned long e) const;
  Ideal conj() const;
  /// Exact division by a rational integer dividing every element.
  Ideal divide(const Integer& n) const;
  bool contains(const Integer& x, const Integer& y) const;
  bool contains(const FieldElement& alpha) const;
  /// this ⊆ o
  bool is_contained_in(const Ideal& o) const;

  bool operator==(const Ideal& o) const = default;
  bool operator<(const Ideal& o) const;

  std::string str() const;

 private:
  Integer a_ = 1, b_ = 0, c_ = 1, D_ = 0;
};

enum class SplitType { split, inert, ramified, rational };
std::string to_string(SplitType t);

struct PrimeIdeal {
  Ideal ideal;
  Integer ell;
  int e = 1, f = 1;
  /// omega ≡ root mod P when f = 1.
  Integer root = 0;
  PrimeIdeal conj() const;
  Integer norm() const { return ideal.norm(); }
  bool operator==(const PrimeIdeal& o) const { return ideal == o.ideal; }
  bool operator<(const PrimeIdeal& o) const { return ideal < o.ideal; }
};

struct SplittingReport {
  SplitType type;
  std::vector<PrimeIdeal> primes;
};

/// Class group as a Smith presentation over an ambient set of prime ideals,
/// with a lookup from reduced-cycle keys to ambient exponent vectors.
struct ClassGroup {
  FiniteAbelianGroup group;
  std::vector<PrimeIdeal> ambient_primes;
  std::map<std::pair<Integer, Integer>, std::vector<Integer>> key_to_ambient;
  Integer order() const { return group.order(); }
};

struct SUnitBasis {
  std::vector<FieldElement> elements;
  std::vector<std::string> labels;
  std::vector<PrimeIdeal> Q;
  /// Row j: valuations of the j-th non-unit generator at the primes of Q.
  IntMatrix valuation_lattice;
  /// Index of the first non-unit generator in `elements`.
  std::size_t first_nonunit = 0;
};

/// F = Q or F = Q(sqrt d) with d > 1 squarefree.
class QuadraticField {
 public:
  static QuadraticField rational();
  explicit QuadraticField(const Integer& d);
  /// "Q" or "Q(sqrt{d})" (also "Q(sqrt(d))", "Q(sqrt d)").
  static QuadraticField parse(std::string_view spec);

  bool is_rational() const { return D_ == 0; }
  const Integer& d() const { return d_; }
  /// Discriminant d or 4d; 0 for Q.
  const Integer& disc() const { return D_; }
  /// (D^2 - D)/4, the norm of omega.
  Integer omega_norm() const { return (D_ * D_ - D_) / 4; }
  int degree() const { return is_rational() ? 1 : 2; }
  int unit_rank() const { return is_rational() ? 0 : 1; }
  std::string str() const;
  bool operator==(const QuadraticField& o) const { return D_ == o.D_; }

  FieldElement element(const Rational& x, const Rational& y = 0) const { return {*this, x, y}; }
  FieldElement one() const { return element(1); }
  /// a + b*sqrt(d)
  FieldElement from_sqrt_d(const Rational& a, const Rational& b) const;

  /// Fundamental unit > 1; throws UsageError for Q.
  const FieldElement& fundamental_unit() const;
  const ClassGroup& class_group() const;

 private:
  struct Cache;
  Integer d_ = 1, D_ = 0;
  std::shared_ptr<Cache> cache_;
};

SplittingReport factor_rational_prime(const QuadraticField& K, const Integer& ell);
/// Prime ideals dividing I with exponents, ordered by (norm, HNF).
std::vector<std::pair<PrimeIdeal, long>> factor_ideal(const QuadraticField& K, const Ideal& I);
long valuation(const PrimeIdeal& P, const Ideal& I);
/// v_P(x) for nonzero x.
long valuation(const PrimeIdeal& P, const FieldElement& x);
/// Prime ideals dividing the numerator or denominator of x.
std::vector<PrimeIdeal> support(const QuadraticField& K, const FieldElement& x);

/// Class of I in the class group.
GroupElement class_of(const QuadraticField& K, const Ideal& I);
/// Generator g with (g) = I, normalized, or nullopt.
std::optional<FieldElement> principal_generator(const QuadraticField& K, const Ideal& I);
/// g times a power of the fundamental unit so that 1 <= |g/g'| < eps^2, then positive;
/// also made of positive norm by eps when N(eps) = -1.
FieldElement normalize_generator(const QuadraticField& K, FieldElement g);

/// Reduced-cycle invariant of the class of I (wide equivalence).
std::pair<Integer, Integer> class_key(const QuadraticField& K, const Ideal& I);

/// {-1, eps, gamma_1, ...} where the gamma_j generate the ideals prod q^e for
/// e running over a basis of {e : prod q^e principal}.
SUnitBasis s_unit_basis(const QuadraticField& K, const std::vector<PrimeIdeal>& Q);

/// Parse "a", "a/b", "sqrt(d)", "a + b*sqrt(d)" and similar sums.
FieldElement parse_element(const QuadraticField& K, std::string_view text);

/// Parse "l", "l:1"/"l:2" (choice among primes above l) or "(a; b; c)".
PrimeIdeal parse_prime(const QuadraticField& K, std::string_view text);
/// Human-readable ideal rendering.
std::string to_string(const PrimeIdeal& P);

}  // namespace iwlab
