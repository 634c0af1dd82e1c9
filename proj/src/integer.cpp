#include "iwlab/integer.hpp"

#include <algorithm>
#include <stdexcept>

namespace iwlab {

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Integer powm(const Integer& base, const Integer& e, const Integer& m) {
  if (e < 0) return powm(invert(base, m), -e, m);
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer invert(const Integer& a, const Integer& m) {
  Integer r;
  if (m == 1) return 0;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("element not invertible modulo " + m.get_str());
  return r;
}

Bezout xgcd(const Integer& a, const Integer& b) {
  Bezout out;
  mpz_gcdext(out.g.get_mpz_t(), out.s.get_mpz_t(), out.t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return out;
}

long valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  Integer m = abs(n);
  long v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

Integer p_part(const Integer& n, const Integer& p) {
  return pow(p, static_cast<unsigned long>(valuation(n, p)));
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_squarefree(const Integer& n) {
  if (n == 0) return false;
  for (const auto& [q, e] : factor(abs(n)))
    if (e > 1) return false;
  return true;
}

namespace {

Integer pollard_rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto f = [&](const Integer& v) { return mod(v * v + c, n); };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = gcd(abs(x - y), n);
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factor(Integer n) {
  if (n == 0) throw std::domain_error("factor of zero");
  n = abs(n);
  std::vector<Integer> primes;
  for (unsigned long q = 2; q < 1000 && q * q <= n; ++q) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
      primes.emplace_back(q);
      n /= q;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Integer, unsigned>> out;
  for (const auto& q : primes) {
    if (!out.empty() && out.back().first == q)
      ++out.back().second;
    else
      out.emplace_back(q, 1);
  }
  return out;
}

int legendre(const Integer& a, const Integer& p) {
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

std::optional<Integer> sqrt_mod_prime(const Integer& a_in, const Integer& p) {
  Integer a = mod(a_in, p);
  if (a == 0) return Integer(0);
  if (p == 2) return a;
  if (legendre(a, p) != 1) return std::nullopt;
  // Tonelli-Shanks.
  Integer q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  Integer z = 2;
  while (legendre(z, p) != -1) ++z;
  Integer m = s, c = powm(z, q, p), t = powm(a, q, p), r = powm(a, (q + 1) / 2, p);
  while (t != 1) {
    unsigned long i = 0;
    Integer tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    Integer b = c;
    for (unsigned long j = 0; j + i + 1 < m.get_ui(); ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

Integer hensel_lift_quadratic(const Integer& b, const Integer& c, const Integer& r0,
                              const Integer& p, unsigned k) {
  Integer r = mod(r0, p);
  Integer pk = p;
  for (unsigned i = 1; i < k; ++i) {
    pk *= p;
    Integer f = r * r + b * r + c;
    Integer df = 2 * r + b;
    r = mod(r - f * invert(df, pk), pk);
  }
  return r;
}

long to_long(const Integer& n) {
  if (!n.fits_slong_p()) throw std::overflow_error("integer does not fit in long: " + n.get_str());
  return n.get_si();
}

}  // namespace iwlab
