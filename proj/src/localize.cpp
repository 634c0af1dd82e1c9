#include "iwlab/localize.hpp"

#include <algorithm>

namespace iwlab {

Integer Place::omega_image(long k) const {
  if (type == SplitType::rational) return 0;
  if (type != SplitType::split) throw UnsupportedError("omega has no image in Z_l at a non-split place");
  Integer n0 = (disc * disc - disc) / 4;
  return hensel_lift_quadratic(-disc, n0, prime.root, prime.ell, static_cast<unsigned>(k));
}

Integer Place::sqrt_d_image(long k) const {
  Integer m = pow(prime.ell, static_cast<unsigned long>(k));
  Integer s = disc == d ? 1 : 2;
  return mod((2 * omega_image(k) - disc) * invert(s, m), m);
}

std::string Place::str() const { return prime.ideal.str(); }

Place place_of(const QuadraticField& K, const PrimeIdeal& P) {
  Place v;
  v.prime = P;
  v.disc = K.disc();
  v.d = K.d();
  v.type = K.is_rational() ? SplitType::rational : factor_rational_prime(K, P.ell).type;
  return v;
}

std::vector<Place> completions_above_p(const QuadraticField& K, long p) {
  if (p < 3 || !is_prime(Integer(p))) throw UsageError("p must be an odd prime");
  auto rep = factor_rational_prime(K, p);
  if (rep.type == SplitType::ramified)
    throw UnsupportedError(std::to_string(p) + " ramifies in " + K.str());
  std::vector<Place> out;
  for (const auto& P : rep.primes) out.push_back(place_of(K, P));
  return out;
}

std::string LocalValue::str() const {
  std::string u = inert ? unit_ext.str() : unit.str();
  return "v=" + std::to_string(valuation) + ", u=" + u;
}

LocalValue embed(const Place& v, const FieldElement& x, long precision) {
  if (v.type == SplitType::ramified) throw UnsupportedError("ramified completions are not modelled");
  const long ell = v.ell();
  if (ell == 2) throw UnsupportedError("completions at 2 are not modelled");
  LocalValue out;
  out.valuation = valuation(v.prime, x);
  FieldElement y = x;
  if (out.valuation != 0) {
    Rational scale = out.valuation > 0
                         ? Rational(1, pow(Integer(ell), static_cast<unsigned long>(out.valuation)))
                         : Rational(pow(Integer(ell), static_cast<unsigned long>(-out.valuation)));
    y = y.scaled(scale);
  }
  switch (v.type) {
    case SplitType::rational:
      out.unit = PAdicNumber(ell, y.x(), precision);
      break;
    case SplitType::split: {
      Integer n = y.denominator();
      long k = iwlab::valuation(n, Integer(ell));
      Integer u = Rational(y.x() * n).get_num(), w = Rational(y.y() * n).get_num();
      Integer num = u + w * v.omega_image(precision + k);
      out.unit = (PAdicNumber(ell, num, precision + k) / PAdicNumber(ell, n, precision + k))
                     .with_precision(precision);
      break;
    }
    case SplitType::inert: {
      Rational s = v.disc == v.d ? 1 : 2;
      Rational a = y.x() + y.y() * v.disc / 2, b = y.y() * s / 2;
      out.inert = true;
      out.unit_ext = UnramifiedQuadElem(ell, v.d, PAdicNumber(ell, a, precision).lift(),
                                        PAdicNumber(ell, b, precision).lift(), precision);
      break;
    }
    default:
      break;
  }
  return out;
}

std::vector<PAdicNumber> log_coordinates(const LocalValue& lv) {
  if (lv.inert) {
    auto L = plog(angle(lv.unit_ext));
    return {L.a(), L.b()};
  }
  return {plog(angle(lv.unit))};
}

// ------------------------------------------------------------- S-unit products

SUnitProduct SUnitProduct::of(const FieldElement& x, long p, long precision) {
  SUnitProduct s;
  s.p = p;
  s.basis = {x};
  s.labels = {x.str()};
  s.exponents = {PAdicNumber(p, Integer(1), precision)};
  return s;
}

SUnitProduct SUnitProduct::operator*(const SUnitProduct& o) const {
  if (basis != o.basis || p != o.p) throw UsageError("S-unit products over different bases");
  SUnitProduct r = *this;
  for (std::size_t i = 0; i < exponents.size(); ++i) r.exponents[i] += o.exponents[i];
  return r;
}

SUnitProduct SUnitProduct::pow(const PAdicNumber& k) const {
  SUnitProduct r = *this;
  for (auto& e : r.exponents) e *= k;
  return r;
}

namespace {

long min_precision(const std::vector<PAdicNumber>& v) {
  long m = 0;
  bool first = true;
  for (const auto& x : v) {
    if (first || x.precision() < m) m = x.precision();
    first = false;
  }
  return m;
}

}  // namespace

PAdicNumber SUnitProduct::valuation(const PrimeIdeal& P) const {
  long prec = min_precision(exponents);
  Integer sum = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    long v = iwlab::valuation(P, basis[i]);
    if (v == 0) continue;
    if (exponents[i].valuation() < 0) throw UsageError("exponents must lie in Z_p");
    sum += exponents[i].lift() * v;
  }
  return PAdicNumber(p, sum, prec);
}

std::vector<PrimeIdeal> SUnitProduct::support(const QuadraticField& K) const {
  std::vector<PrimeIdeal> out;
  for (const auto& u : basis)
    for (const auto& P : iwlab::support(K, u))
      if (std::find(out.begin(), out.end(), P) == out.end()) out.push_back(P);
  std::sort(out.begin(), out.end());
  return out;
}

LocalImage loc(const Place& v, const SUnitProduct& x, long precision) {
  if (v.ell() != x.p) throw UsageError("loc is taken at places above p");
  LocalImage img;
  img.valuation = x.valuation(v.prime);
  std::size_t ncoords = v.type == SplitType::inert ? 2 : 1;
  img.log.assign(ncoords, PAdicNumber::zero(x.p, precision));
  for (std::size_t i = 0; i < x.basis.size(); ++i) {
    auto logs = log_coordinates(embed(v, x.basis[i], precision));
    for (std::size_t j = 0; j < ncoords; ++j) img.log[j] += x.exponents[i] * logs[j];
  }
  return img;
}

LocalImage loc(const Place& v, const FieldElement& x, long precision) {
  LocalValue lv = embed(v, x, precision);
  return {PAdicNumber(v.ell(), Integer(lv.valuation), precision), log_coordinates(lv)};
}

LocalValue loc_value(const Place& v, const SUnitProduct& x, long precision) {
  if (v.ell() != x.p) throw UsageError("loc is taken at places above p");
  LocalValue out;
  auto val = x.valuation(v.prime);
  out.valuation = val.is_zero() ? 0 : val.lift_symmetric().get_si();
  out.inert = v.type == SplitType::inert;
  if (out.inert)
    out.unit_ext = UnramifiedQuadElem(x.p, v.d, 1, 0, precision);
  else
    out.unit = PAdicNumber(x.p, Integer(1), precision);
  for (std::size_t i = 0; i < x.basis.size(); ++i) {
    if (x.exponents[i].valuation() < 0) throw UsageError("exponents must lie in Z_p");
    Integer b = x.exponents[i].is_zero() ? Integer(0) : x.exponents[i].lift();
    LocalValue lv = embed(v, x.basis[i], precision);
    if (out.inert)
      out.unit_ext *= angle(lv.unit_ext).pow(b);
    else
      out.unit *= angle(lv.unit).pow(b);
  }
  return out;
}

std::vector<LocalImage> loc_p(const QuadraticField& K, const SUnitProduct& x, long precision) {
  std::vector<LocalImage> out;
  for (const auto& v : completions_above_p(K, x.p)) out.push_back(loc(v, x, precision));
  return out;
}

Verdict is_loc_torsion(const FieldElement& x, const Place& v, long p, long N) {
  long val = valuation(v.prime, x);
  if (v.ell() != p) return val == 0 ? Verdict::yes : Verdict::no;
  if (val != 0) return Verdict::no;
  if ((x * x).is_one()) return Verdict::yes;
  for (const auto& c : log_coordinates(embed(v, x, N)))
    if (!c.is_zero()) return Verdict::no;
  return Verdict::indeterminate;
}

Verdict is_loc_torsion(const SUnitProduct& x, const Place& v, long p, long N) {
  if (v.ell() != p) {
    auto val = x.valuation(v.prime);
    if (!val.is_zero()) return Verdict::no;
    return val.precision() >= N ? Verdict::yes : Verdict::indeterminate;
  }
  LocalImage img = loc(v, x, N + 2);
  if (!img.valuation.is_zero()) return Verdict::no;
  bool enough = img.valuation.precision() >= N;
  for (const auto& c : img.log) {
    if (!c.with_precision(N).is_zero()) return Verdict::no;
    enough = enough && c.precision() >= N;
  }
  return enough ? Verdict::yes : Verdict::indeterminate;
}

bool eq_membership(const QuadraticField& K, const SUnitProduct& x, const std::vector<PrimeIdeal>& Q) {
  for (const auto& P : x.support(K)) {
    if (std::find(Q.begin(), Q.end(), P) != Q.end()) continue;
    if (!x.valuation(P).is_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Z_p ranks

long zp_rank(std::vector<std::vector<PAdicNumber>> rows) {
  long rank = 0;
  while (!rows.empty()) {
    std::size_t pi = rows.size(), pj = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        const auto& x = rows[i][j];
        if (x.is_zero()) continue;
        if (pi == rows.size() || x.valuation() < rows[pi][pj].valuation()) {
          pi = i;
          pj = j;
        }
      }
    if (pi == rows.size()) break;
    std::vector<PAdicNumber> piv = rows[pi];
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pi));
    for (auto& r : rows) {
      if (r[pj].is_zero()) continue;
      PAdicNumber f = r[pj] / piv[pj];
      for (std::size_t j = 0; j < r.size(); ++j) r[j] -= f * piv[j];
      r[pj] = PAdicNumber::zero(r[pj].prime(), r[pj].precision());
    }
    ++rank;
  }
  return rank;
}

RankReport inertia_rank(const QuadraticField& K, const std::vector<FieldElement>& T,
                        const std::vector<Place>& Q, long p, long N) {
  (void)K;
  auto build = [&](long M) {
    std::vector<std::vector<PAdicNumber>> rows;
    for (const auto& t : T) {
      std::vector<PAdicNumber> row;
      for (const auto& w : Q) {
        if (w.ell() == p) {
          LocalImage img = loc(w, t, M);
          row.push_back(img.valuation);
          for (auto& c : img.log) row.push_back(c);
        } else {
          row.emplace_back(p, Integer(valuation(w.prime, t)), M);
        }
      }
      rows.push_back(row);
    }
    return rows;
  };
  RankReport r;
  r.precision = N;
  r.rank = zp_rank(build(N));
  r.rank_high = zp_rank(build(N + 2));
  return r;
}

}  // namespace iwlab
