// Brute-force reference computations used to freeze expected values.
//
// Everything here works on machine integers with exhaustive enumeration and
// deliberately shares no code with the library: no SNF, no p-adic log series,
// no continued-fraction reduction. Keep moduli small.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

namespace oracle {

using i64 = long long;
using i128 = __int128;

inline i64 mod(i128 a, i64 m) {
  i128 r = a % m;
  return static_cast<i64>(r < 0 ? r + m : r);
}

inline i64 powmod(i64 b, i64 e, i64 m) {
  i128 r = 1 % m, x = mod(b, m);
  while (e > 0) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<i64>(r);
}

inline int vp(i64 n, i64 p) {
  if (n == 0) return 1000;
  int v = 0;
  n = n < 0 ? -n : n;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline i64 ppart(i64 n, i64 p) {
  i64 r = 1;
  n = n < 0 ? -n : n;
  while (n != 0 && n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

inline i64 ipow(i64 b, int e) {
  i64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

inline bool squarefree(i64 n) {
  for (i64 k = 2; k * k <= n; ++k)
    if (n % (k * k) == 0) return false;
  return true;
}

/// Modular inverse by exhaustive search.
inline i64 inverse_by_search(i64 a, i64 m) {
  for (i64 x = 1; x < m; ++x)
    if (mod(static_cast<i128>(a) * x, m) == 1) return x;
  throw std::domain_error("not invertible");
}

/// Teichmueller representative of n modulo p^k by iterating x -> x^p.
inline i64 teichmueller(i64 n, i64 p, int k) {
  i64 pk = ipow(p, k);
  i64 x = mod(n, pk);
  for (int i = 0; i < k + 1; ++i) x = powmod(x, p, pk);
  return x;
}

/// <n> = n / omega(n) modulo p^k.
inline i64 angle(i64 n, i64 p, int k) {
  i64 pk = ipow(p, k);
  return mod(static_cast<i128>(mod(n, pk)) * inverse_by_search(teichmueller(n, p, k), pk), pk);
}

/// Smallest a in [0, p^k) with <n1>^a <n2> == 1 mod p^(k+1).
inline i64 degree_zero_exponent(i64 n1, i64 n2, i64 p, int k) {
  i64 pk1 = ipow(p, k + 1);
  i64 u1 = angle(n1, p, k + 1), u2 = angle(n2, p, k + 1);
  i64 acc = u2;
  for (i64 a = 0; a < ipow(p, k); ++a) {
    if (acc == 1) return a;
    acc = mod(static_cast<i128>(acc) * u1, pk1);
  }
  throw std::domain_error("no degree-zero exponent");
}

/// Solve x^2 - d y^2 = +-1 (or +-4 when d = 1 mod 4) by increasing y.
/// Returns (X, Y, k) with epsilon = (X + Y sqrt d) / k.
struct PellSolution {
  i64 x, y, k;
};
inline PellSolution pell_brute(i64 d) {
  i64 k = (d % 4 == 1) ? 2 : 1;
  i64 target = k * k;
  for (i64 y = 1; y < 100000000; ++y) {
    i128 dy2 = static_cast<i128>(d) * y * y;
    for (int s : {-1, 1}) {
      i128 x2 = dy2 + s * target;
      if (x2 <= 0) continue;
      i64 x = static_cast<i64>(std::llround(std::sqrt(static_cast<long double>(x2))));
      for (i64 c = x - 2; c <= x + 2; ++c)
        if (c > 0 && static_cast<i128>(c) * c == x2) return {c, y, k};
    }
  }
  throw std::runtime_error("pell search exhausted");
}

/// Class number of Q(sqrt d) via the analytic class number formula
///   h log(eps) = -1/2 sum_{a=1}^{D-1} chi_D(a) log sin(pi a / D).
inline i64 kronecker(i64 D, i64 n);
inline i64 class_number_analytic(i64 d) {
  i64 D = (d % 4 == 1) ? d : 4 * d;
  long double sum = 0;
  const long double pi = 3.14159265358979323846264338327950288L;
  for (i64 a = 1; a < D; ++a) {
    i64 chi = kronecker(D, a);
    if (chi != 0) sum += chi * std::log(std::sin(pi * a / D));
  }
  PellSolution e = pell_brute(d);
  long double leps = std::log((e.x + e.y * std::sqrt(static_cast<long double>(d))) / e.k);
  return std::llround(-0.5L * sum / leps);
}

inline i64 jacobi(i64 a, i64 n) {
  a = mod(a, n);
  i64 t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      i64 r = n % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

inline i64 kronecker(i64 D, i64 n) {
  if (std::gcd(D, n) != 1) return 0;
  i64 t = 1;
  while (n % 2 == 0) {
    n /= 2;
    i64 r = mod(D, 8);
    if (r == 3 || r == 5) t = -t;
  }
  return t * jacobi(D, n);
}

/// Counts of reduced quadratic irrationals (b + sqrt D)/(2a) grouped into
/// continued-fraction cycles, plus how many cycles are closed under
/// theta -> -conj(theta) (the 2-torsion of the class group).
struct ReducedCycleCount {
  i64 cycles = 0;
  i64 self_inverse = 0;
};

inline ReducedCycleCount reduced_cycles(i64 d) {
  i64 D = (d % 4 == 1) ? d : 4 * d;
  long double s = std::sqrt(static_cast<long double>(D));
  // theta = (P + sqrt D)/Q, Q > 0 even, Q | D - P^2 with (D - P^2)/Q even.
  std::set<std::pair<i64, i64>> reduced;
  for (i64 Q = 2; Q < 2 * s + 2; Q += 2)
    for (i64 P = -Q; P < s + 1; ++P) {
      if (mod(D - P * P, 2 * Q) != 0) continue;
      long double th = (P + s) / Q, thc = (P - s) / Q;
      if (th > 1 && thc > -1 && thc < 0) reduced.insert({P, Q});
    }
  auto step = [&](std::pair<i64, i64> st) {
    auto [P, Q] = st;
    i64 a = static_cast<i64>(std::floor((P + s) / Q));
    i64 P1 = a * Q - P;
    i64 Q1 = (D - P1 * P1) / Q;
    return std::pair<i64, i64>{P1, Q1};
  };
  std::map<std::pair<i64, i64>, i64> cycle_of;
  i64 next = 0;
  for (auto st : reduced) {
    if (cycle_of.count(st)) continue;
    auto cur = st;
    do {
      cycle_of[cur] = next;
      cur = step(cur);
    } while (cur != st);
    ++next;
  }
  ReducedCycleCount out;
  out.cycles = next;
  // Inverse of the ideal class of aZ + (b+sqrt D)/2 Z is that of its conjugate,
  // whose lattice corresponds to (-P + sqrt D)/Q; reduce it by walking forward.
  std::set<i64> done;
  for (auto& [st, cyc] : cycle_of) {
    if (done.count(cyc)) continue;
    done.insert(cyc);
    std::pair<i64, i64> c{-st.first, st.second};
    for (int k = 0; k < 4096 && !reduced.count(c); ++k) {
      auto [P, Q] = c;
      i64 a = static_cast<i64>(std::floor((P + s) / Q));
      i64 P1 = a * Q - P;
      c = {P1, (D - P1 * P1) / Q};
    }
    if (cycle_of.at(c) == cyc) ++out.self_inverse;
  }
  return out;
}

/// O/m for O = Z[w] of Q(sqrt d) (w^2 = D w - (D^2-D)/4), or O = Z when
/// d == 1. The modulus is n * P^e with e in {0,1}, P = (ell, w - r) a degree-one
/// prime coprime to n.
class Residues {
 public:
  struct El {
    i64 x = 0, y = 0;
    bool operator==(const El&) const = default;
  };

  Residues(i64 d, i64 n, i64 ell = 1, i64 r = 0) : d_(d), n_(n), ell_(ell), r_(r) {
    rational_ = (d == 1);
    D_ = rational_ ? 0 : ((d % 4 == 1) ? d : 4 * d);
    cn_ = rational_ ? 0 : (D_ * D_ - D_) / 4;
    if (rational_) {
      a_ = n * ell;
      b_ = 0;
      c_ = 1;
    } else {
      // HNF of n * (ell; -r; 1).
      a_ = n * ell;
      b_ = n * mod(-r, ell);
      c_ = n;
    }
  }

  i64 size() const { return a_ * c_; }

  El reduce(i128 x, i128 y) const {
    if (rational_) return {mod(x, a_), 0};
    i128 k = y / c_;
    if (y - k * c_ < 0) --k;
    y -= k * c_;
    x -= k * b_;
    return {mod(x, a_), static_cast<i64>(y)};
  }

  El mul(El u, El v) const {
    if (rational_) return reduce(static_cast<i128>(u.x) * v.x, 0);
    i128 yy = static_cast<i128>(u.y) * v.y;
    i128 x = static_cast<i128>(u.x) * v.x - yy * cn_;
    i128 y = static_cast<i128>(u.x) * v.y + static_cast<i128>(u.y) * v.x + yy * D_;
    return reduce(x, y);
  }

  El pow(El u, i64 e) const {
    El r = reduce(1, 0);
    while (e > 0) {
      if (e & 1) r = mul(r, u);
      u = mul(u, u);
      e >>= 1;
    }
    return r;
  }

  i64 norm(El u) const {
    if (rational_) return u.x;
    return static_cast<i64>(static_cast<i128>(u.x) * u.x + static_cast<i128>(D_) * u.x * u.y +
                            static_cast<i128>(cn_) * u.y * u.y);
  }

  bool is_unit(El u) const {
    if (rational_) return std::gcd(u.x, a_) == 1;
    if (std::gcd(mod(norm(u), n_), n_) != 1) return false;
    if (ell_ > 1 && mod(static_cast<i128>(u.x) + static_cast<i128>(u.y) * r_, ell_) == 0)
      return false;
    return true;
  }

  i64 key(El u) const { return u.x * c_ + u.y; }

  std::vector<El> units() const {
    std::vector<El> out;
    for (i64 y = 0; y < c_; ++y)
      for (i64 x = 0; x < a_; ++x)
        if (is_unit({x, y})) out.push_back({x, y});
    return out;
  }

 private:
  i64 d_, n_, ell_, r_;
  bool rational_;
  i64 D_ = 0, cn_ = 0;
  i64 a_ = 1, b_ = 0, c_ = 1;
};

/// The quotient (O/m)^* / <generators> with its p-primary structure found by
/// counting elements killed by p^k.
struct QuotientGroup {
  const Residues* R;
  std::vector<Residues::El> units;
  std::unordered_set<i64> sub;  // keys of the subgroup
  i64 order = 0;                // |units| / |sub|

  QuotientGroup(const Residues& r, const std::vector<Residues::El>& gens) : R(&r) {
    units = r.units();
    std::vector<Residues::El> frontier{r.reduce(1, 0)};
    sub.insert(r.key(frontier[0]));
    while (!frontier.empty()) {
      std::vector<Residues::El> nxt;
      for (auto& f : frontier)
        for (auto& g : gens) {
          auto h = r.mul(f, r.reduce(g.x, g.y));
          if (sub.insert(r.key(h)).second) nxt.push_back(h);
        }
      frontier.swap(nxt);
    }
    order = static_cast<i64>(units.size()) / static_cast<i64>(sub.size());
  }

  bool in_sub(Residues::El u) const { return sub.count(R->key(u)) != 0; }

  /// Invariant factors (ascending) of the p-primary part.
  std::vector<i64> p_invariants(i64 p) const {
    i64 pp = ppart(order, p);
    std::vector<i64> killed{1};  // |{x : x^(p^k) in sub}| / |sub|
    for (int k = 1; killed.back() < pp; ++k) {
      i64 e = ipow(p, k);
      i64 c = 0;
      for (auto& u : units)
        if (in_sub(R->pow(u, e))) ++c;
      killed.push_back(c / static_cast<i64>(sub.size()));
    }
    // number of cyclic factors of order >= p^k is log_p(killed[k]/killed[k-1]).
    std::vector<int> ge;
    for (std::size_t k = 1; k < killed.size(); ++k) {
      i64 q = killed[k] / killed[k - 1];
      int c = 0;
      while (q > 1) {
        q /= p;
        ++c;
      }
      ge.push_back(c);
    }
    std::vector<i64> out;
    for (std::size_t k = 0; k < ge.size(); ++k) {
      int next = (k + 1 < ge.size()) ? ge[k + 1] : 0;
      for (int t = 0; t < ge[k] - next; ++t) out.push_back(ipow(p, static_cast<int>(k) + 1));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Order of the p-component of the class of u.
  i64 p_order(Residues::El u, i64 p) const {
    i64 t = order / ppart(order, p);
    auto v = R->pow(u, t);
    i64 ord = 1;
    while (!in_sub(v)) {
      v = R->pow(v, p);
      ord *= p;
    }
    return ord;
  }
};

/// Fundamental unit of Q(sqrt d) in w-coordinates (x + y w).
inline Residues::El unit_in_w_coords(i64 d) {
  PellSolution e = pell_brute(d);
  if (d % 4 == 1) return {(e.x - e.y * d) / 2, e.y};
  return {e.x - e.y * 2 * d, e.y};
}

/// Smallest element (in a box) of norm +-N lying in the degree-one prime
/// (ell, w - r); returned in w-coordinates.
inline Residues::El generator_of_prime(i64 d, i64 ell, i64 r, i64 box = 200) {
  i64 D = (d % 4 == 1) ? d : 4 * d;
  i64 cn = (D * D - D) / 4;
  for (i64 s = 0; s <= box; ++s)
    for (i64 y = -s; y <= s; ++y)
      for (i64 x = -s; x <= s; ++x) {
        if (std::max(std::llabs(x), std::llabs(y)) != s) continue;
        i64 nm = x * x + D * x * y + cn * y * y;
        if ((nm == ell || nm == -ell) && mod(x + y * r, ell) == 0) return {x, y};
      }
  throw std::runtime_error("no generator in box");
}

}  // namespace oracle
