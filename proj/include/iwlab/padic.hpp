#pragma once

#include <iosfwd>
#include <string>

#include "iwlab/errors.hpp"
#include "iwlab/integer.hpp"

namespace iwlab {

/// Element of Q_p known modulo p^precision.
///
/// Stored as p^v * u with u a unit modulo p^(precision - v). A value whose
/// known digits are all zero is the zero marker: valuation() == precision()
/// and is_zero() is true. Precision is carried per value; every operation
/// returns the number of digits it can guarantee:
///   add/sub   min of the absolute precisions
///   mul/div   min of the relative precisions
class PAdicNumber {
 public:
  PAdicNumber() = default;
  PAdicNumber(long p, const Integer& value, long precision);
  PAdicNumber(long p, const Rational& value, long precision);

  static PAdicNumber zero(long p, long precision);
  /// p^val * unit with `relative` known digits in the unit.
  static PAdicNumber from_unit(long p, long val, const Integer& unit, long relative);

  long prime() const { return p_; }
  long precision() const { return prec_; }
  long relative_precision() const { return prec_ - val_; }
  /// Equals precision() for the zero marker, meaning "at least precision()".
  long valuation() const { return val_; }
  bool is_zero() const { return val_ >= prec_; }
  bool is_unit() const { return val_ == 0 && prec_ > 0; }
  const Integer& unit() const { return unit_; }

  /// Representative in [0, p^precision); requires valuation() >= 0.
  Integer lift() const;
  /// Representative in (-p^precision/2, p^precision/2].
  Integer lift_symmetric() const;
  Rational lift_rational() const;

  /// Drop digits; never adds any.
  PAdicNumber with_precision(long prec) const;

  PAdicNumber operator-() const;
  PAdicNumber& operator+=(const PAdicNumber& o);
  PAdicNumber& operator-=(const PAdicNumber& o);
  PAdicNumber& operator*=(const PAdicNumber& o);
  PAdicNumber& operator/=(const PAdicNumber& o);
  friend PAdicNumber operator+(PAdicNumber a, const PAdicNumber& b) { return a += b; }
  friend PAdicNumber operator-(PAdicNumber a, const PAdicNumber& b) { return a -= b; }
  friend PAdicNumber operator*(PAdicNumber a, const PAdicNumber& b) { return a *= b; }
  friend PAdicNumber operator/(PAdicNumber a, const PAdicNumber& b) { return a /= b; }

  PAdicNumber inverse() const;
  PAdicNumber pow(const Integer& e) const;

  /// no if the values differ at the common precision, indeterminate otherwise.
  /// Never answers yes: agreement on finitely many digits is not equality.
  Verdict equals(const PAdicNumber& o) const;
  /// True when the two values agree on every digit both of them know.
  bool congruent(const PAdicNumber& o) const;

  /// "p^v * m (mod p^N)".
  std::string str() const;

 private:
  void check_same_prime(const PAdicNumber& o) const;
  void normalize();

  long p_ = 0;
  long val_ = 0;
  long prec_ = 0;
  Integer unit_ = 0;
};

std::ostream& operator<<(std::ostream& os, const PAdicNumber& x);

/// (valuation, unit part); the unit part of the zero marker is the zero marker.
struct ValuationAndUnit {
  long valuation;
  bool at_least;  // valuation is only a lower bound
  PAdicNumber unit;
};
ValuationAndUnit val_and_unit(const PAdicNumber& x);

/// Teichmueller representative: the (p-1)-th root of unity congruent to x mod p.
PAdicNumber teichmueller(const PAdicNumber& x);
/// Projection <x> = x / omega(x) of a unit to 1 + pZ_p.
PAdicNumber angle(const PAdicNumber& x);
/// Iwasawa logarithm of a 1-unit.
PAdicNumber plog(const PAdicNumber& x);
/// log(w) / log(u) for 1-units u, w.
PAdicNumber log_ratio(const PAdicNumber& u, const PAdicNumber& w);

/// Element a + b*s of the unramified quadratic extension of Z_p, s^2 = r with
/// r a quadratic non-residue mod p. Coordinates are integers modulo p^precision.
class UnramifiedQuadElem {
 public:
  UnramifiedQuadElem() = default;
  UnramifiedQuadElem(long p, const Integer& r, const Integer& a, const Integer& b, long precision);

  long prime() const { return p_; }
  const Integer& nonresidue() const { return r_; }
  long precision() const { return prec_; }
  PAdicNumber a() const { return PAdicNumber(p_, a_, prec_); }
  PAdicNumber b() const { return PAdicNumber(p_, b_, prec_); }
  const Integer& a_lift() const { return a_; }
  const Integer& b_lift() const { return b_; }

  /// min(v(a), v(b)), equal to precision() when both coordinates vanish.
  long valuation() const;
  bool is_zero() const { return valuation() >= prec_; }
  bool is_unit() const { return valuation() == 0; }

  UnramifiedQuadElem with_precision(long prec) const;
  UnramifiedQuadElem conj() const;
  PAdicNumber norm() const;
  PAdicNumber trace() const;

  UnramifiedQuadElem& operator+=(const UnramifiedQuadElem& o);
  UnramifiedQuadElem& operator-=(const UnramifiedQuadElem& o);
  UnramifiedQuadElem& operator*=(const UnramifiedQuadElem& o);
  friend UnramifiedQuadElem operator+(UnramifiedQuadElem x, const UnramifiedQuadElem& y) {
    return x += y;
  }
  friend UnramifiedQuadElem operator-(UnramifiedQuadElem x, const UnramifiedQuadElem& y) {
    return x -= y;
  }
  friend UnramifiedQuadElem operator*(UnramifiedQuadElem x, const UnramifiedQuadElem& y) {
    return x *= y;
  }
  /// Units only.
  UnramifiedQuadElem inverse() const;
  UnramifiedQuadElem pow(const Integer& e) const;
  /// x / p^k for k <= valuation(); loses k digits.
  UnramifiedQuadElem divide_by_p_power(long k) const;

  bool congruent(const UnramifiedQuadElem& o) const;
  std::string str() const;

 private:
  void check_compatible(const UnramifiedQuadElem& o) const;

  long p_ = 0;
  Integer r_ = 0;
  Integer a_ = 0, b_ = 0;
  long prec_ = 0;
};

UnramifiedQuadElem teichmueller(const UnramifiedQuadElem& x);
UnramifiedQuadElem angle(const UnramifiedQuadElem& x);
/// Logarithm of a 1-unit (x = 1 mod p).
UnramifiedQuadElem plog(const UnramifiedQuadElem& x);

}  // namespace iwlab
