#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace iwlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Nonnegative remainder of a modulo m (m > 0).
Integer mod(const Integer& a, const Integer& m);

/// Floor division.
Integer fdiv(const Integer& a, const Integer& b);

Integer pow(const Integer& base, unsigned long e);
Integer powm(const Integer& base, const Integer& e, const Integer& m);
Integer gcd(const Integer& a, const Integer& b);
Integer isqrt(const Integer& n);

/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
Integer invert(const Integer& a, const Integer& m);

/// Extended gcd: returns (g, s, t) with s*a + t*b = g >= 0.
struct Bezout {
  Integer g, s, t;
};
Bezout xgcd(const Integer& a, const Integer& b);

/// p-adic valuation of a nonzero integer.
long valuation(const Integer& n, const Integer& p);

/// Largest power of p dividing n (n != 0).
Integer p_part(const Integer& n, const Integer& p);

bool is_prime(const Integer& n);
bool is_squarefree(const Integer& n);

/// Trial division plus Pollard rho; ascending primes with multiplicity.
std::vector<std::pair<Integer, unsigned>> factor(Integer n);

/// Legendre symbol (a/p) for odd prime p.
int legendre(const Integer& a, const Integer& p);

/// Square root of a modulo an odd prime (Tonelli-Shanks), if a is a square.
std::optional<Integer> sqrt_mod_prime(const Integer& a, const Integer& p);

/// Root of a monic quadratic t^2 + b t + c modulo p^k lifted from a simple
/// root r0 modulo p (p odd or the derivative a unit).
Integer hensel_lift_quadratic(const Integer& b, const Integer& c, const Integer& r0,
                              const Integer& p, unsigned k);

long to_long(const Integer& n);

}  // namespace iwlab
