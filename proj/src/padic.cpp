#include "iwlab/padic.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace iwlab {

namespace {

Integer ppow(long p, long k) { return k <= 0 ? Integer(1) : pow(Integer(p), static_cast<unsigned long>(k)); }

void check_prime(long p) {
  if (p == 2) throw UsageError("p = 2 is not supported; p must be odd");
  if (p < 3 || !is_prime(Integer(p))) throw UsageError("p must be an odd prime, got " + std::to_string(p));
}

// Truncated log series for y = x - 1 in pO, O = Z_p or Z_p[s]/(s^2 - r).
// Coordinates (a, b) of y; returns log(1 + y) mod p^n.
struct Pair {
  Integer a, b;
};

Pair log_series(const Pair& y, long p, long n, const Integer& r) {
  if (n <= 0) return {0, 0};
  // Terms with k - v_p(k) >= n vanish mod p^n since v(y) >= 1.
  long kmax = n + 1;
  for (long pt = p; pt <= 2 * n + 4; pt *= p) ++kmax;
  long smax = 0;
  for (long pt = p; pt <= kmax; pt *= p) ++smax;
  const Integer work = ppow(p, n + smax);
  const Integer target = ppow(p, n);

  Pair acc{0, 0};
  Pair power{1, 0};
  for (long k = 1; k <= kmax; ++k) {
    Integer na = mod(power.a * y.a + r * power.b * y.b, work);
    Integer nb = mod(power.a * y.b + power.b * y.a, work);
    power = {na, nb};
    long s = 0;
    long kk = k;
    while (kk % p == 0) {
      kk /= p;
      ++s;
    }
    if (k - s >= n) continue;
    Integer ps = ppow(p, s);
    Integer inv = invert(Integer(kk), target);
    Integer ta = mod((power.a / ps) * inv, target);
    Integer tb = mod((power.b / ps) * inv, target);
    if (k % 2 == 0) {
      ta = -ta;
      tb = -tb;
    }
    acc.a = mod(acc.a + ta, target);
    acc.b = mod(acc.b + tb, target);
  }
  return acc;
}

}  // namespace

// ---------------------------------------------------------------- PAdicNumber

PAdicNumber::PAdicNumber(long p, const Integer& value, long precision) : p_(p), prec_(precision) {
  check_prime(p);
  if (value == 0) {
    val_ = prec_;
    unit_ = 0;
    return;
  }
  Integer m = value;
  long v = 0;
  while (v < prec_ && mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
    m /= p;
    ++v;
  }
  val_ = v;
  unit_ = m;
  normalize();
}

PAdicNumber::PAdicNumber(long p, const Rational& value, long precision) : p_(p), prec_(precision) {
  check_prime(p);
  Integer num = value.get_num(), den = value.get_den();
  if (num == 0) {
    val_ = prec_;
    unit_ = 0;
    return;
  }
  long vn = iwlab::valuation(num, Integer(p)), vd = iwlab::valuation(den, Integer(p));
  val_ = vn - vd;
  if (val_ >= prec_) {
    val_ = prec_;
    unit_ = 0;
    return;
  }
  const Integer mod_rel = ppow(p, prec_ - val_);
  unit_ = mod((num / ppow(p, vn)) * invert(den / ppow(p, vd), mod_rel), mod_rel);
}

PAdicNumber PAdicNumber::zero(long p, long precision) {
  check_prime(p);
  PAdicNumber z;
  z.p_ = p;
  z.prec_ = precision;
  z.val_ = precision;
  z.unit_ = 0;
  return z;
}

PAdicNumber PAdicNumber::from_unit(long p, long val, const Integer& unit, long relative) {
  PAdicNumber x = zero(p, val + relative);
  if (relative <= 0) return x;
  x.val_ = val;
  x.unit_ = unit;
  x.normalize();
  return x;
}

void PAdicNumber::normalize() {
  if (val_ >= prec_) {
    val_ = prec_;
    unit_ = 0;
    return;
  }
  Integer m = mod(unit_, ppow(p_, prec_ - val_));
  if (m == 0) {
    val_ = prec_;
    unit_ = 0;
    return;
  }
  while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p_)) && val_ < prec_) {
    m /= p_;
    ++val_;
  }
  unit_ = (val_ >= prec_) ? Integer(0) : mod(m, ppow(p_, prec_ - val_));
  if (val_ >= prec_) val_ = prec_;
}

void PAdicNumber::check_same_prime(const PAdicNumber& o) const {
  if (p_ != o.p_) throw UsageError("mixed primes in p-adic arithmetic");
}

Integer PAdicNumber::lift() const {
  if (is_zero()) return 0;
  if (val_ < 0) throw std::domain_error("lift of a non-integral p-adic number");
  return mod(unit_ * ppow(p_, val_), ppow(p_, prec_));
}

Integer PAdicNumber::lift_symmetric() const {
  Integer x = lift();
  Integer m = ppow(p_, prec_);
  if (2 * x > m) x -= m;
  return x;
}

Rational PAdicNumber::lift_rational() const {
  if (is_zero()) return 0;
  Rational r(unit_);
  if (val_ >= 0)
    r *= Rational(ppow(p_, val_));
  else
    r /= Rational(ppow(p_, -val_));
  r.canonicalize();
  return r;
}

PAdicNumber PAdicNumber::with_precision(long prec) const {
  if (prec >= prec_) return *this;
  PAdicNumber x = *this;
  x.prec_ = prec;
  x.normalize();
  return x;
}

PAdicNumber PAdicNumber::operator-() const {
  PAdicNumber x = *this;
  if (!x.is_zero()) x.unit_ = mod(-x.unit_, ppow(p_, prec_ - val_));
  return x;
}

PAdicNumber& PAdicNumber::operator+=(const PAdicNumber& o) {
  check_same_prime(o);
  long prec = std::min(prec_, o.prec_);
  long m = std::min(val_, o.val_);
  if (m >= prec) {
    *this = zero(p_, prec);
    return *this;
  }
  Integer a = is_zero() ? Integer(0) : unit_ * ppow(p_, val_ - m);
  Integer b = o.is_zero() ? Integer(0) : o.unit_ * ppow(p_, o.val_ - m);
  prec_ = prec;
  val_ = m;
  unit_ = a + b;
  normalize();
  return *this;
}

PAdicNumber& PAdicNumber::operator-=(const PAdicNumber& o) { return *this += -o; }

PAdicNumber& PAdicNumber::operator*=(const PAdicNumber& o) {
  check_same_prime(o);
  if (is_zero() || o.is_zero()) {
    *this = zero(p_, std::min(prec_ + o.val_, o.prec_ + val_));
    return *this;
  }
  long rel = std::min(relative_precision(), o.relative_precision());
  val_ += o.val_;
  prec_ = val_ + rel;
  unit_ = unit_ * o.unit_;
  normalize();
  return *this;
}

PAdicNumber PAdicNumber::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of a p-adic number indistinguishable from zero");
  long rel = relative_precision();
  return from_unit(p_, -val_, invert(unit_, ppow(p_, rel)), rel);
}

PAdicNumber& PAdicNumber::operator/=(const PAdicNumber& o) {
  check_same_prime(o);
  return *this *= o.inverse();
}

PAdicNumber PAdicNumber::pow(const Integer& e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) return PAdicNumber(p_, Integer(1), std::max(relative_precision(), 1L));
  if (is_zero()) {
    long n = prec_ > 0 ? prec_ * to_long(e) : prec_;
    return zero(p_, n);
  }
  long rel = relative_precision();
  long v = val_ == 0 ? 0 : val_ * to_long(e);
  return from_unit(p_, v, powm(unit_, e, ppow(p_, rel)), rel);
}

Verdict PAdicNumber::equals(const PAdicNumber& o) const {
  return (*this - o).is_zero() ? Verdict::indeterminate : Verdict::no;
}

bool PAdicNumber::congruent(const PAdicNumber& o) const { return (*this - o).is_zero(); }

std::string PAdicNumber::str() const {
  std::ostringstream os;
  if (is_zero())
    os << "O(" << p_ << "^" << prec_ << ")";
  else
    os << p_ << "^" << val_ << " * " << unit_.get_str() << " (mod " << p_ << "^" << prec_ << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PAdicNumber& x) { return os << x.str(); }

ValuationAndUnit val_and_unit(const PAdicNumber& x) {
  if (x.is_zero()) return {x.precision(), true, x};
  return {x.valuation(), false,
          PAdicNumber::from_unit(x.prime(), 0, x.unit(), x.relative_precision())};
}

PAdicNumber teichmueller(const PAdicNumber& x) {
  if (!x.is_unit()) throw std::domain_error("Teichmueller lift needs a p-adic unit");
  const long n = x.precision();
  const Integer m = ppow(x.prime(), n);
  const Integer P(x.prime());
  Integer y = mod(x.unit(), m);
  for (long i = 0; i <= n; ++i) {
    Integer next = powm(y, P, m);
    if (next == y) break;
    y = next;
  }
  return PAdicNumber(x.prime(), y, n);
}

PAdicNumber angle(const PAdicNumber& x) {
  if (!x.is_unit()) throw std::domain_error("<x> needs a p-adic unit");
  return x / teichmueller(x);
}

PAdicNumber plog(const PAdicNumber& x) {
  const long p = x.prime();
  if (!x.is_unit() || mod(x.unit() - 1, Integer(p)) != 0)
    throw std::domain_error("plog needs a 1-unit (x = 1 mod p)");
  const long n = x.precision();
  Pair y{mod(x.unit() - 1, ppow(p, n)), 0};
  Pair l = log_series(y, p, n, 0);
  return PAdicNumber(p, l.a, n);
}

PAdicNumber log_ratio(const PAdicNumber& u, const PAdicNumber& w) {
  PAdicNumber lu = plog(u);
  if (lu.is_zero()) throw PrecisionError("log(u) is indistinguishable from 0 at this precision");
  return plog(w) / lu;
}

// ---------------------------------------------------------- UnramifiedQuadElem

UnramifiedQuadElem::UnramifiedQuadElem(long p, const Integer& r, const Integer& a, const Integer& b,
                                       long precision)
    : p_(p), r_(r), prec_(precision) {
  check_prime(p);
  if (legendre(r, Integer(p)) != -1)
    throw UsageError("unramified quadratic model needs a non-residue r mod p");
  const Integer m = ppow(p, prec_);
  a_ = mod(a, m);
  b_ = mod(b, m);
}

void UnramifiedQuadElem::check_compatible(const UnramifiedQuadElem& o) const {
  if (p_ != o.p_ || r_ != o.r_) throw UsageError("incompatible unramified quadratic elements");
}

long UnramifiedQuadElem::valuation() const {
  const Integer P(p_);
  long va = a_ == 0 ? prec_ : std::min(iwlab::valuation(a_, P), prec_);
  long vb = b_ == 0 ? prec_ : std::min(iwlab::valuation(b_, P), prec_);
  return std::min(va, vb);
}

UnramifiedQuadElem UnramifiedQuadElem::with_precision(long prec) const {
  if (prec >= prec_) return *this;
  return UnramifiedQuadElem(p_, r_, a_, b_, prec);
}

UnramifiedQuadElem UnramifiedQuadElem::conj() const { return {p_, r_, a_, -b_, prec_}; }

PAdicNumber UnramifiedQuadElem::norm() const {
  return PAdicNumber(p_, Integer(a_ * a_ - r_ * b_ * b_), prec_);
}

PAdicNumber UnramifiedQuadElem::trace() const { return PAdicNumber(p_, Integer(2 * a_), prec_); }

UnramifiedQuadElem& UnramifiedQuadElem::operator+=(const UnramifiedQuadElem& o) {
  check_compatible(o);
  *this = UnramifiedQuadElem(p_, r_, a_ + o.a_, b_ + o.b_, std::min(prec_, o.prec_));
  return *this;
}

UnramifiedQuadElem& UnramifiedQuadElem::operator-=(const UnramifiedQuadElem& o) {
  check_compatible(o);
  *this = UnramifiedQuadElem(p_, r_, a_ - o.a_, b_ - o.b_, std::min(prec_, o.prec_));
  return *this;
}

UnramifiedQuadElem& UnramifiedQuadElem::operator*=(const UnramifiedQuadElem& o) {
  check_compatible(o);
  *this = UnramifiedQuadElem(p_, r_, a_ * o.a_ + r_ * b_ * o.b_, a_ * o.b_ + b_ * o.a_,
                             std::min(prec_, o.prec_));
  return *this;
}

UnramifiedQuadElem UnramifiedQuadElem::inverse() const {
  if (!is_unit()) throw std::domain_error("inverse of a non-unit in the unramified extension");
  const Integer m = ppow(p_, prec_);
  Integer ninv = invert(a_ * a_ - r_ * b_ * b_, m);
  return {p_, r_, a_ * ninv, -b_ * ninv, prec_};
}

UnramifiedQuadElem UnramifiedQuadElem::pow(const Integer& e_in) const {
  if (e_in < 0) return inverse().pow(-e_in);
  UnramifiedQuadElem result(p_, r_, 1, 0, prec_);
  UnramifiedQuadElem base = *this;
  Integer e = e_in;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

UnramifiedQuadElem UnramifiedQuadElem::divide_by_p_power(long k) const {
  if (k > valuation()) throw std::domain_error("element not divisible by the requested power of p");
  const Integer pk = ppow(p_, k);
  return {p_, r_, a_ / pk, b_ / pk, prec_ - k};
}

bool UnramifiedQuadElem::congruent(const UnramifiedQuadElem& o) const {
  return (*this - o).is_zero();
}

std::string UnramifiedQuadElem::str() const {
  std::ostringstream os;
  os << a_.get_str() << " + " << b_.get_str() << "*s (s^2=" << r_.get_str() << ", mod " << p_ << "^"
     << prec_ << ")";
  return os.str();
}

UnramifiedQuadElem teichmueller(const UnramifiedQuadElem& x) {
  if (!x.is_unit()) throw std::domain_error("Teichmueller lift needs a unit");
  const Integer q = Integer(x.prime()) * x.prime();
  UnramifiedQuadElem y = x;
  for (long i = 0; i <= x.precision(); ++i) {
    UnramifiedQuadElem next = y.pow(q);
    if (next.a_lift() == y.a_lift() && next.b_lift() == y.b_lift()) break;
    y = next;
  }
  return y;
}

UnramifiedQuadElem angle(const UnramifiedQuadElem& x) { return x * teichmueller(x).inverse(); }

UnramifiedQuadElem plog(const UnramifiedQuadElem& x) {
  const long p = x.prime();
  const Integer P(p);
  if (mod(x.a_lift() - 1, P) != 0 || mod(x.b_lift(), P) != 0)
    throw std::domain_error("plog needs a 1-unit (x = 1 mod p)");
  Pair l = log_series({x.a_lift() - 1, x.b_lift()}, p, x.precision(), x.nonresidue());
  return {p, x.nonresidue(), l.a, l.b, x.precision()};
}

}  // namespace iwlab
