#include "iwlab/quadfield.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <regex>
#include <sstream>

namespace iwlab {

namespace {

Integer omega_norm_of(const Integer& D) { return (D * D - D) / 4; }

std::pair<Integer, Integer> mul_coords(const Integer& D, const Integer& x1, const Integer& y1,
                                       const Integer& x2, const Integer& y2) {
  Integer n0 = omega_norm_of(D);
  return {x1 * x2 - n0 * y1 * y2, x1 * y2 + x2 * y1 + D * y1 * y2};
}

// sign of A + B sqrt(D), D > 0 not a square
int sign_surd(const Rational& A, const Rational& B, const Integer& D) {
  int sa = sgn(A), sb = sgn(B);
  if (sb == 0 || D == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  Rational diff = A * A - B * B * D;
  return sa > 0 ? sgn(diff) : -sgn(diff);
}

}  // namespace

// ---------------------------------------------------------------- elements

FieldElement::FieldElement(const QuadraticField& K, const Rational& x, const Rational& y)
    : x_(x), y_(y), D_(K.disc()) {
  x_.canonicalize();
  y_.canonicalize();
  if (K.is_rational() && y_ != 0) throw UsageError("element of Q with an omega coordinate");
}

Integer FieldElement::denominator() const {
  Integer a = x_.get_den(), b = y_.get_den();
  return a / gcd(a, b) * b;
}

Rational FieldElement::norm() const {
  return x_ * x_ + Rational(D_) * x_ * y_ + Rational(omega_norm_of(D_)) * y_ * y_;
}

Rational FieldElement::trace() const {
  if (D_ == 0) return x_;
  return 2 * x_ + Rational(D_) * y_;
}

FieldElement FieldElement::conj() const {
  FieldElement r = *this;
  r.x_ = x_ + y_ * D_;
  r.y_ = -y_;
  return r;
}

int FieldElement::sign() const { return sign_surd(2 * x_ + y_ * D_, y_, D_); }

bool FieldElement::dominates_conjugate() const { return sgn(y_) * sgn(trace()) >= 0; }

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  r.x_ = -x_;
  r.y_ = -y_;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (D_ != o.D_) throw UsageError("elements of different fields");
  x_ += o.x_;
  y_ += o.y_;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  if (D_ != o.D_) throw UsageError("elements of different fields");
  x_ -= o.x_;
  y_ -= o.y_;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  if (D_ != o.D_) throw UsageError("elements of different fields");
  Rational n0 = omega_norm_of(D_);
  Rational x = x_ * o.x_ - n0 * y_ * o.y_;
  Rational y = x_ * o.y_ + o.x_ * y_ + Rational(D_) * y_ * o.y_;
  x_ = x;
  y_ = y;
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Rational n = norm();
  FieldElement c = conj();
  c.x_ /= n;
  c.y_ /= n;
  return c;
}

FieldElement FieldElement::scaled(const Rational& r) const {
  FieldElement c = *this;
  c.x_ *= r;
  c.y_ *= r;
  return c;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

FieldElement FieldElement::pow(long e) const {
  FieldElement base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  FieldElement r = *this;
  r.x_ = 1;
  r.y_ = 0;
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

std::string FieldElement::str() const {
  Rational a = x_, b = 0;
  Integer d = D_;
  if (D_ != 0) {
    Integer s = D_ % 4 == 0 ? Integer(2) : Integer(1);
    d = D_ / (s * s);
    a = x_ + y_ * D_ / 2;
    b = y_ * s / 2;
  }
  a.canonicalize();
  b.canonicalize();
  if (b == 0) return a.get_str();
  std::string out;
  if (a != 0) out = a.get_str() + (b > 0 ? " + " : " - ");
  else if (b < 0) out = "-";
  Rational ab = abs(b);
  if (ab != 1) out += ab.get_str() + "*";
  return out + "sqrt(" + d.get_str() + ")";
}

// ------------------------------------------------------------------ ideals

Ideal Ideal::span(const Integer& D, const std::vector<std::pair<Integer, Integer>>& gens) {
  Ideal I;
  I.D_ = D;
  if (D == 0) {
    Integer a = 0;
    for (const auto& [x, y] : gens) {
      if (y != 0) throw UsageError("ideal of Q with an omega coordinate");
      a = gcd(a, x);
    }
    if (a == 0) throw UsageError("zero ideal");
    I.a_ = a;
    I.b_ = 0;
    I.c_ = 1;
    return I;
  }
  std::pair<Integer, Integer> piv{0, 0};
  Integer a = 0;
  for (auto g : gens) {
    while (g.second != 0) {
      Integer q = fdiv(piv.second, g.second);
      piv.first -= q * g.first;
      piv.second -= q * g.second;
      std::swap(piv, g);
    }
    a = gcd(a, g.first);
  }
  if (piv.second < 0) {
    piv.first = -piv.first;
    piv.second = -piv.second;
  }
  if (a == 0 || piv.second == 0) throw UsageError("generators do not span a lattice of full rank");
  I.a_ = a;
  I.b_ = mod(piv.first, a);
  I.c_ = piv.second;
  return I;
}

Ideal Ideal::unit(const Integer& D) { return span(D, {{1, 0}, {0, D == 0 ? 0 : 1}}); }

Ideal Ideal::rational(const Integer& D, const Integer& n) {
  return span(D, {{n, 0}, {0, D == 0 ? Integer(0) : n}});
}

Ideal Ideal::principal(const FieldElement& alpha) {
  if (!alpha.is_integral()) throw UsageError("principal ideal of a non-integral element");
  if (alpha.is_zero()) throw UsageError("zero ideal");
  const Integer& D = alpha.disc();
  Integer u = alpha.x().get_num(), v = alpha.y().get_num();
  if (D == 0) return span(D, {{u, 0}});
  auto w = mul_coords(D, u, v, 0, 1);
  return span(D, {{u, v}, w});
}

Ideal Ideal::operator*(const Ideal& o) const {
  if (D_ != o.D_) throw UsageError("ideals of different fields");
  if (D_ == 0) return span(D_, {{a_ * o.a_, 0}});
  std::vector<std::pair<Integer, Integer>> g;
  g.emplace_back(a_ * o.a_, 0);
  g.emplace_back(a_ * o.b_, a_ * o.c_);
  g.emplace_back(o.a_ * b_, o.a_ * c_);
  g.push_back(mul_coords(D_, b_, c_, o.b_, o.c_));
  return span(D_, g);
}

Ideal Ideal::pow(unsigned long e) const {
  Ideal r = unit(D_), base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Ideal Ideal::conj() const {
  if (D_ == 0) return *this;
  return span(D_, {{a_, 0}, {b_ + c_ * D_, -c_}});
}

Ideal Ideal::divide(const Integer& n) const {
  if (D_ == 0) {
    if (a_ % n != 0) throw std::domain_error("ideal not divisible");
    return span(D_, {{a_ / n, 0}});
  }
  if (a_ % n != 0 || b_ % n != 0 || c_ % n != 0) throw std::domain_error("ideal not divisible");
  return span(D_, {{a_ / n, 0}, {b_ / n, c_ / n}});
}

bool Ideal::contains(const Integer& x, const Integer& y) const {
  if (D_ == 0) return y == 0 && x % a_ == 0;
  if (y % c_ != 0) return false;
  return (x - (y / c_) * b_) % a_ == 0;
}

bool Ideal::contains(const FieldElement& alpha) const {
  if (!alpha.is_integral()) return false;
  return contains(alpha.x().get_num(), alpha.y().get_num());
}

bool Ideal::is_contained_in(const Ideal& o) const {
  return o.contains(a_, 0) && (D_ == 0 || o.contains(b_, c_));
}

bool Ideal::operator<(const Ideal& o) const {
  Integer n1 = norm(), n2 = o.norm();
  if (n1 != n2) return n1 < n2;
  if (a_ != o.a_) return a_ < o.a_;
  if (b_ != o.b_) return b_ < o.b_;
  return c_ < o.c_;
}

std::string Ideal::str() const {
  if (D_ == 0) return "(" + a_.get_str() + ")";
  return "(" + a_.get_str() + "; " + b_.get_str() + "; " + c_.get_str() + ")";
}

std::string to_string(SplitType t) {
  switch (t) {
    case SplitType::split:
      return "split";
    case SplitType::inert:
      return "inert";
    case SplitType::ramified:
      return "ramified";
    default:
      return "rational";
  }
}

PrimeIdeal PrimeIdeal::conj() const {
  PrimeIdeal q = *this;
  q.ideal = ideal.conj();
  if (f == 1 && ideal.disc() != 0) q.root = mod(ideal.disc() - root, ell);
  return q;
}

std::string to_string(const PrimeIdeal& P) { return P.ideal.str(); }

// ------------------------------------------------------------------- field

struct QuadraticField::Cache {
  std::once_flag unit_once, class_once;
  FieldElement unit;
  ClassGroup classes;
};

QuadraticField QuadraticField::rational() {
  QuadraticField K(Integer(1));
  return K;
}

QuadraticField::QuadraticField(const Integer& d) : d_(d), cache_(std::make_shared<Cache>()) {
  if (d == 1) {
    D_ = 0;
    return;
  }
  if (d < 2 || !is_squarefree(d))
    throw UsageError("d must be a squarefree integer > 1, got " + d.get_str());
  D_ = mod(d, Integer(4)) == 1 ? d : 4 * d;
}

QuadraticField QuadraticField::parse(std::string_view spec) {
  std::string s;
  for (char ch : spec)
    if (ch != ' ') s += ch;
  if (s == "Q") return rational();
  static const std::regex re(R"(Q\(sqrt[\{\(]?(-?[0-9]+)[\}\)]?\))");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw UsageError("cannot parse field '" + std::string(spec) + "'");
  Integer d(m[1].str());
  if (d == 1) throw UsageError("Q(sqrt{1}) is Q; write Q");
  return QuadraticField(d);
}

std::string QuadraticField::str() const {
  return is_rational() ? "Q" : "Q(sqrt{" + d_.get_str() + "})";
}

FieldElement QuadraticField::from_sqrt_d(const Rational& a, const Rational& b) const {
  if (is_rational()) return element(a + 0 * b);
  Integer s = D_ == d_ ? 1 : 2;
  // sqrt d = (2 omega - D) / s
  return element(a - b * D_ / s, 2 * b / s);
}

// ------------------------------------------------------- splitting of primes

SplittingReport factor_rational_prime(const QuadraticField& K, const Integer& ell) {
  if (!is_prime(ell)) throw UsageError(ell.get_str() + " is not prime");
  const Integer& D = K.disc();
  SplittingReport rep;
  if (K.is_rational()) {
    rep.type = SplitType::rational;
    rep.primes.push_back({Ideal::rational(D, ell), ell, 1, 1, 0});
    return rep;
  }
  Integer n0 = K.omega_norm();
  auto prime_at = [&](const Integer& r, int e) {
    // P = (ell, omega - r)
    auto w = mul_coords(D, -r, 1, 0, 1);
    PrimeIdeal P{Ideal::span(D, {{ell, 0}, {0, ell}, {-r, 1}, w}), ell, e, 1, mod(r, ell)};
    return P;
  };
  std::vector<Integer> roots;
  if (ell == 2) {
    for (int t = 0; t < 2; ++t)
      if (mod(Integer(t * t) - D * t + n0, Integer(2)) == 0) roots.push_back(t);
  } else if (D % ell == 0) {
    roots.push_back(mod(D * invert(Integer(2), ell), ell));
  } else if (auto sq = sqrt_mod_prime(D, ell)) {
    Integer h = invert(Integer(2), ell);
    roots.push_back(mod((D + *sq) * h, ell));
    roots.push_back(mod((D - *sq) * h, ell));
  }
  if (D % ell == 0) {
    rep.type = SplitType::ramified;
    rep.primes.push_back(prime_at(roots.at(0), 2));
  } else if (roots.empty()) {
    rep.type = SplitType::inert;
    rep.primes.push_back({Ideal::rational(D, ell), ell, 1, 2, 0});
  } else {
    rep.type = SplitType::split;
    rep.primes.push_back(prime_at(roots[0], 1));
    rep.primes.push_back(prime_at(roots[1], 1));
    std::sort(rep.primes.begin(), rep.primes.end(),
              [](const PrimeIdeal& a, const PrimeIdeal& b) { return a.ideal.b() < b.ideal.b(); });
  }
  return rep;
}

long valuation(const PrimeIdeal& P, const Ideal& I) {
  if (I.disc() == 0) return iwlab::valuation(I.a(), P.ell);
  long v = 0;
  Ideal J = I;
  Ideal Pbar = P.ideal.conj();
  Integer n = P.norm();
  while (J.is_contained_in(P.ideal)) {
    J = (J * Pbar).divide(n);
    ++v;
  }
  return v;
}

long valuation(const PrimeIdeal& P, const FieldElement& x) {
  if (x.is_zero()) throw std::domain_error("valuation of zero");
  Integer n = x.denominator();
  Rational nx = x.x() * n, ny = x.y() * n;
  const Integer& D = x.disc();
  long vn = 0;
  if (D == 0) {
    vn = iwlab::valuation(abs(nx.get_num()), P.ell);
  } else {
    Integer u = nx.get_num(), w = ny.get_num();
    auto g = mul_coords(D, u, w, 0, 1);
    vn = valuation(P, Ideal::span(D, {{u, w}, g}));
  }
  return vn - P.e * iwlab::valuation(n, P.ell);
}

std::vector<std::pair<PrimeIdeal, long>> factor_ideal(const QuadraticField& K, const Ideal& I) {
  std::vector<std::pair<PrimeIdeal, long>> out;
  for (const auto& [ell, k] : factor(I.norm())) {
    (void)k;
    for (const auto& P : factor_rational_prime(K, ell).primes) {
      long v = valuation(P, I);
      if (v > 0) out.emplace_back(P, v);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<PrimeIdeal> support(const QuadraticField& K, const FieldElement& x) {
  if (x.is_zero()) throw std::domain_error("support of zero");
  Integer n = x.denominator();
  Rational N = x.norm() * n * n;
  Integer m = abs(N.get_num()) * n;
  std::vector<PrimeIdeal> out;
  if (m == 1) return out;
  for (const auto& [ell, k] : factor(m)) {
    (void)k;
    for (const auto& P : factor_rational_prime(K, ell).primes)
      if (valuation(P, x) != 0) out.push_back(P);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --------------------------------------------- continued-fraction reduction

namespace {

struct CycleResult {
  std::pair<Integer, Integer> key;  // minimal (Q, P) over the reduced cycle
  Ideal reduced;                    // primitive ideal of the minimal state
  std::optional<FieldElement> generator;
};

class CFWalker {
 public:
  explicit CFWalker(const QuadraticField& K) : K_(K), D_(K.disc()), s_(isqrt(K.disc())) {}

  bool reduced(const Integer& P, const Integer& Q) const {
    return Q > 0 && P <= s_ && P + Q > s_ && Q - P <= s_;
  }

  Integer floor_theta(const Integer& P, const Integer& Q) const {
    if (Q > 0) return fdiv(P + s_, Q);
    return -fdiv(P + s_, -Q) - 1;
  }

  // theta <- 1/(theta - q); returns the multiplier theta - q.
  FieldElement step(Integer& P, Integer& Q, bool track) const {
    Integer q = floor_theta(P, Q);
    Integer Pp = P - q * Q;
    FieldElement mult;
    if (track) mult = K_.element(Rational(Pp - D_, Q), Rational(2, Q));
    Integer Qn = (D_ - Pp * Pp) / Q;
    P = -Pp;
    Q = Qn;
    return mult;
  }

  Ideal ideal_of(const Integer& P, const Integer& Q) const {
    Integer a = abs(Q) / 2;
    Integer b = (P - D_) / 2;
    auto w = mul_coords(D_, b, 1, 0, 1);
    return Ideal::span(D_, {{a, 0}, {0, a}, {b, 1}, w});
  }

  CycleResult walk(const Ideal& I, bool track) const {
    const Integer& c = I.c();
    Integer a1 = I.a() / c, b1 = I.b() / c;
    Integer P = 2 * b1 + D_, Q = 2 * a1;
    FieldElement mu = K_.one();
    CycleResult res;
    auto note_principal = [&](const Integer& Qv) {
      if (track && !res.generator && abs(Qv) == 2) res.generator = K_.element(c * a1) * mu;
    };
    note_principal(Q);
    std::size_t limit = 64 + 8 * mpz_sizeinbase(I.norm().get_mpz_t(), 2) +
                        8 * mpz_sizeinbase(D_.get_mpz_t(), 2);
    std::size_t n = 0;
    while (!reduced(P, Q)) {
      FieldElement m = step(P, Q, track);
      if (track) mu *= m;
      note_principal(Q);
      if (++n > limit * 16) throw std::logic_error("continued fraction failed to reduce");
    }
    const Integer P0 = P, Q0 = Q;
    res.key = {Q, P};
    do {
      if (std::make_pair(Q, P) < res.key) res.key = {Q, P};
      FieldElement m = step(P, Q, track);
      if (track) mu *= m;
      note_principal(Q);
    } while (P != P0 || Q != Q0);
    res.reduced = ideal_of(res.key.second, res.key.first);
    return res;
  }

  // one period from the reduced principal state (P0 + sqrt D)/2
  FieldElement period_unit() const {
    Integer P0 = mod(s_ - D_, Integer(2)) == 0 ? s_ : s_ - 1;
    Integer P = P0, Q = 2;
    FieldElement mu = K_.one();
    do {
      mu *= step(P, Q, true);
    } while (P != P0 || Q != 2);
    return mu;
  }

 private:
  const QuadraticField& K_;
  Integer D_, s_;
};

}  // namespace

std::pair<Integer, Integer> class_key(const QuadraticField& K, const Ideal& I) {
  if (K.is_rational()) return {1, 0};
  return CFWalker(K).walk(I, false).key;
}

const FieldElement& QuadraticField::fundamental_unit() const {
  if (is_rational()) throw UsageError("Q has no fundamental unit");
  std::call_once(cache_->unit_once, [this] {
    FieldElement eps = CFWalker(*this).period_unit().inverse();
    if (eps.sign() < 0) eps = -eps;
    if (!eps.dominates_conjugate()) eps = eps.conj();
    cache_->unit = eps;
  });
  return cache_->unit;
}

const ClassGroup& QuadraticField::class_group() const {
  if (!cache_) throw std::logic_error("field without cache");
  std::call_once(cache_->class_once, [this] {
    ClassGroup& cl = cache_->classes;
    if (is_rational()) {
      cl.group = FiniteAbelianGroup::from_invariants({});
      cl.key_to_ambient[{1, 0}] = {};
      return;
    }
    Integer bound = isqrt(D_ / 4);
    for (Integer ell = 2; ell <= bound; ++ell) {
      if (!is_prime(ell)) continue;
      auto rep = factor_rational_prime(*this, ell);
      if (rep.type != SplitType::inert) cl.ambient_primes.push_back(rep.primes.front());
    }
    const std::size_t t = cl.ambient_primes.size();
    CFWalker walker(*this);
    struct Node {
      Ideal rep;
      std::vector<Integer> exps;
    };
    std::vector<Node> nodes;
    auto start = walker.walk(Ideal::unit(D_), false);
    nodes.push_back({start.reduced, std::vector<Integer>(t)});
    cl.key_to_ambient[start.key] = nodes[0].exps;
    IntMatrix relations(0, t);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (std::size_t j = 0; j < t; ++j) {
        auto r = walker.walk(nodes[i].rep * cl.ambient_primes[j].ideal, false);
        std::vector<Integer> v = nodes[i].exps;
        v[j] += 1;
        auto it = cl.key_to_ambient.find(r.key);
        if (it == cl.key_to_ambient.end()) {
          cl.key_to_ambient[r.key] = v;
          nodes.push_back({r.reduced, v});
        } else {
          std::vector<Integer> rel(t);
          bool nz = false;
          for (std::size_t k = 0; k < t; ++k) {
            rel[k] = v[k] - it->second[k];
            nz = nz || rel[k] != 0;
          }
          if (nz) relations.append_row(rel);
        }
      }
    }
    cl.group = smith_presentation(relations, t);
    if (!cl.group.is_finite()) throw std::logic_error("class group relations incomplete");
  });
  return cache_->classes;
}

GroupElement class_of(const QuadraticField& K, const Ideal& I) {
  const ClassGroup& cl = K.class_group();
  auto it = cl.key_to_ambient.find(class_key(K, I));
  if (it == cl.key_to_ambient.end()) throw std::logic_error("ideal class missing from the class table");
  return cl.group.from_ambient(it->second);
}

FieldElement normalize_generator(const QuadraticField& K, FieldElement g) {
  if (K.is_rational()) return g.sign() < 0 ? -g : g;
  const FieldElement& eps = K.fundamental_unit();
  FieldElement einv = eps.inverse();
  while (!g.dominates_conjugate()) g *= eps;
  while ((g * einv).dominates_conjugate()) g *= einv;
  if (g.sign() < 0) g = -g;
  if (g.norm() < 0 && eps.norm() < 0) g *= eps;
  return g;
}

std::optional<FieldElement> principal_generator(const QuadraticField& K, const Ideal& I) {
  if (K.is_rational()) return K.element(I.a());
  auto r = CFWalker(K).walk(I, true);
  if (!r.generator) return std::nullopt;
  return normalize_generator(K, *r.generator);
}

// ------------------------------------------------------------------ S-units

SUnitBasis s_unit_basis(const QuadraticField& K, const std::vector<PrimeIdeal>& Q) {
  for (std::size_t i = 0; i < Q.size(); ++i)
    for (std::size_t j = i + 1; j < Q.size(); ++j)
      if (Q[i] == Q[j]) throw UsageError("repeated prime in Q");
  SUnitBasis B;
  B.Q = Q;
  B.elements.push_back(K.element(-1));
  B.labels.push_back("-1");
  if (!K.is_rational()) {
    B.elements.push_back(K.fundamental_unit());
    B.labels.push_back("eps");
  }
  B.first_nonunit = B.elements.size();
  const std::size_t t = Q.size();
  if (t == 0) {
    B.valuation_lattice = IntMatrix(0, 0);
    return B;
  }
  const ClassGroup& cl = K.class_group();
  const auto& inv = cl.group.invariants();
  IntMatrix C(t, inv.size());
  for (std::size_t i = 0; i < t; ++i) {
    auto g = class_of(K, Q[i].ideal);
    for (std::size_t j = 0; j < inv.size(); ++j) C(i, j) = g.e[j];
  }
  IntMatrix L = inv.empty() ? IntMatrix::identity(t) : lattice_kernel(C, inv);
  B.valuation_lattice = L;
  for (std::size_t r = 0; r < L.rows(); ++r) {
    Ideal num = Ideal::unit(K.disc());
    Integer den = 1;
    for (std::size_t i = 0; i < t; ++i) {
      const Integer& e = L(r, i);
      if (e > 0) {
        num = num * Q[i].ideal.pow(e.get_ui());
      } else if (e < 0) {
        unsigned long k = Integer(-e).get_ui();
        num = num * Q[i].ideal.conj().pow(k);
        den *= pow(Q[i].norm(), k);
      }
    }
    auto g = principal_generator(K, num);
    if (!g) throw std::logic_error("lattice kernel produced a non-principal ideal");
    FieldElement gamma = *g / K.element(den);
    if (!K.is_rational()) gamma = normalize_generator(K, gamma);
    B.elements.push_back(gamma);
    B.labels.push_back(gamma.str());
  }
  return B;
}

PrimeIdeal parse_prime(const QuadraticField& K, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  if (s.empty()) throw UsageError("empty prime specification");
  if (s.front() == '(') {
    static const std::regex tri(R"(\((-?[0-9]+);(-?[0-9]+);(-?[0-9]+)\))");
    static const std::regex one(R"(\(([0-9]+)\))");
    std::smatch m;
    Ideal I;
    if (std::regex_match(s, m, tri)) {
      Integer a(m[1].str()), b(m[2].str()), c(m[3].str());
      if (K.is_rational()) throw UsageError("HNF triple given for an ideal of Q");
      if (a <= 0 || c <= 0) throw UsageError("HNF entries must be positive");
      I = Ideal::span(K.disc(), {{a, 0}, {b, c}});
    } else if (std::regex_match(s, m, one)) {
      I = Ideal::rational(K.disc(), Integer(m[1].str()));
    } else {
      throw UsageError("cannot parse ideal '" + s + "'");
    }
    Integer n = I.norm();
    auto f = factor(n);
    if (f.size() != 1) throw UsageError(I.str() + " is not a prime ideal");
    for (const auto& P : factor_rational_prime(K, f[0].first).primes)
      if (P.ideal == I) return P;
    throw UsageError(I.str() + " is not a prime ideal");
  }
  static const std::regex num(R"(([0-9]+)(:([12]))?)");
  std::smatch m;
  if (!std::regex_match(s, m, num)) throw UsageError("cannot parse prime '" + s + "'");
  Integer ell(m[1].str());
  if (!is_prime(ell)) throw UsageError(ell.get_str() + " is not prime");
  auto rep = factor_rational_prime(K, ell);
  std::size_t idx = m[3].matched ? std::stoul(m[3].str()) - 1 : 0;
  if (idx >= rep.primes.size())
    throw UsageError(ell.get_str() + " has only one prime above it in " + K.str());
  return rep.primes[idx];
}

}  // namespace iwlab

namespace iwlab {

FieldElement parse_element(const QuadraticField& K, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  if (s.empty()) throw UsageError("empty element");
  std::vector<std::string> terms;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= s.size(); ++i)
    if (i == s.size() || ((s[i] == '+' || s[i] == '-') && s[i - 1] != '*' && s[i - 1] != '/' && s[i - 1] != '(')) {
      terms.push_back(s.substr(start, i - start));
      start = i;
    }
  static const std::regex rat(R"([+-]?[0-9]+(/[0-9]+)?)");
  static const std::regex surd(R"(([+-]?)([0-9]+(/[0-9]+)?)?\*?sqrt[\{\(]?([0-9]+)[\}\)]?)");
  auto to_rational = [&](const std::string& str) {
    Rational r(str);
    if (r.get_den() == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
    r.canonicalize();
    return r;
  };
  Rational a = 0, b = 0;
  for (const auto& t : terms) {
    std::smatch m;
    if (std::regex_match(t, rat)) {
      a += to_rational(t[0] == '+' ? t.substr(1) : t);
    } else if (std::regex_match(t, m, surd)) {
      if (K.is_rational() || Integer(m[4].str()) != K.d())
        throw UsageError("'" + t + "' does not lie in " + K.str());
      Rational c = 1;
      if (m[2].matched) c = to_rational(m[2].str());
      if (m[1].str() == "-") c = -c;
      b += c;
    } else {
      throw UsageError("cannot parse element term '" + t + "'");
    }
  }
  return K.from_sqrt_d(a, b);
}

}  // namespace iwlab
