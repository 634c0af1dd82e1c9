#include "iwlab/rayclass.hpp"

#include <algorithm>
#include <sstream>

namespace iwlab {

namespace {

// Residue field O/P as F_l (f = 1, value in a) or F_l[omega] (f = 2).
struct ResidueField {
  Integer ell, D, n0;
  int f = 1;

  struct El {
    Integer a, b;
    bool operator==(const El&) const = default;
  };

  El one() const { return {1, 0}; }

  El mul(const El& x, const El& y) const {
    if (f == 1) return {mod(x.a * y.a, ell), 0};
    Integer bd = x.b * y.b;
    return {mod(x.a * y.a - bd * n0, ell), mod(x.a * y.b + x.b * y.a + bd * D, ell)};
  }

  El pow(El x, Integer e) const {
    El r = one();
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }
};

Integer rational_mod(const Rational& x, const Integer& ell) {
  Integer den = x.get_den();
  if (gcd(den, ell) != 1) throw UsageError("element is not integral at " + ell.get_str());
  return mod(x.get_num() * invert(den, ell), ell);
}

ResidueField residue_field(const QuadraticField& K, const PrimeIdeal& P) {
  return {P.ell, K.disc(), K.omega_norm(), P.f};
}

ResidueField::El reduce(const ResidueField& F, const PrimeIdeal& P, const FieldElement& x) {
  Integer a = rational_mod(x.x(), F.ell), b = rational_mod(x.y(), F.ell);
  if (F.f == 1) return {mod(a + b * P.root, F.ell), 0};
  return {a, b};
}

// k with h^k = t in a cyclic group of order p^e generated by h.
Integer pohlig_hellman(const ResidueField& F, const ResidueField::El& h, const ResidueField::El& t,
                       long p, long e) {
  Integer P = p;
  auto gamma = F.pow(h, pow(P, static_cast<unsigned long>(e - 1)));
  Integer order = pow(P, static_cast<unsigned long>(e));
  Integer k = 0;
  for (long i = 0; i < e; ++i) {
    auto s = F.mul(t, F.pow(h, mod(-k, order)));
    s = F.pow(s, pow(P, static_cast<unsigned long>(e - 1 - i)));
    auto g = F.one();
    long digit = 0;
    while (!(g == s)) {
      if (++digit >= p) throw std::logic_error("discrete log outside the p-Sylow subgroup");
      g = F.mul(g, gamma);
    }
    k += digit * pow(P, static_cast<unsigned long>(i));
  }
  return k;
}

}  // namespace

// --------------------------------------------------------------------- modulus

Modulus Modulus::of(const QuadraticField& K, const Ideal& m) {
  Modulus M;
  M.factors = factor_ideal(K, m);
  return M;
}

Integer Modulus::norm() const {
  Integer n = 1;
  for (const auto& [P, k] : factors) n *= pow(P.norm(), static_cast<unsigned long>(k));
  return n;
}

bool Modulus::divisible_by(const Integer& ell) const {
  return std::any_of(factors.begin(), factors.end(), [&](const auto& f) { return f.first.ell == ell; });
}

std::string Modulus::str() const {
  if (factors.empty()) return "(1)";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << " * ";
    os << to_string(factors[i].first);
    if (factors[i].second > 1) os << "^" << factors[i].second;
  }
  return os.str();
}

// ------------------------------------------------------------------ ray class

RayClassGroup::RayClassGroup(const QuadraticField& K, const Ideal& m, long p)
    : K_(K), p_(p), m_(Modulus::of(K, m)) {
  if (p < 3 || !is_prime(Integer(p))) throw UsageError("p must be an odd prime");
  const Integer P = p;

  for (const auto& [Pr, k] : m_.factors) {
    Block b;
    b.prime = Pr;
    b.exponent = k;
    if (Pr.ell == P) {
      if (Pr.e == 2) throw UnsupportedError("ramified prime above p in the modulus");
      if (k < 2) continue;
      b.place = place_of(K, Pr);
      b.kind = K.is_rational() ? BlockKind::local_rational
               : Pr.f == 2     ? BlockKind::local_inert
                               : BlockKind::local_split;
      Integer q = pow(P, static_cast<unsigned long>(k - 1));
      b.orders.assign(b.kind == BlockKind::local_inert ? 2 : 1, q);
    } else {
      Integer q1 = Pr.norm() - 1;
      long e = iwlab::valuation(q1, P);
      if (e == 0) continue;
      b.kind = BlockKind::residue;
      b.cofactor = q1 / pow(P, static_cast<unsigned long>(e));
      auto F = residue_field(K, Pr);
      bool found = false;
      for (long z = 1; !found && z < 100000; ++z) {
        for (int s = 0; s < F.f && !found; ++s) {
          ResidueField::El cand{mod(Integer(z), F.ell), Integer(s)};
          auto h = F.pow(cand, b.cofactor);
          if (!(F.pow(h, pow(P, static_cast<unsigned long>(e - 1))) == F.one())) {
            b.residue_gen = h.a;
            b.residue_gen_y = h.b;
            found = true;
          }
        }
      }
      if (!found) throw std::logic_error("no generator of the residue p-Sylow subgroup");
      b.orders.assign(1, pow(P, static_cast<unsigned long>(e)));
    }
    for (const auto& o : b.orders) residue_orders_.push_back(o);
    blocks_.push_back(std::move(b));
  }

  std::vector<FieldElement> gammas;
  if (!K.is_rational()) {
    const ClassGroup& cl = K.class_group();
    const auto& inv = cl.group.invariants();
    cl_primes_.resize(inv.size());
    cl_orders_ = inv;
    std::vector<bool> have(inv.size(), false);
    std::size_t missing = inv.size();
    for (long ell = 2; missing > 0; ++ell) {
      if (ell > 100000) throw std::logic_error("class group generators not found among small primes");
      if (!is_prime(Integer(ell)) || m_.divisible_by(Integer(ell))) continue;
      auto rep = factor_rational_prime(K, ell);
      if (rep.type == SplitType::inert) continue;
      for (const auto& Q : rep.primes) {
        auto c = iwlab::class_of(K, Q.ideal);
        for (std::size_t j = 0; j < inv.size(); ++j)
          if (!have[j] && c == cl.group.generator(j)) {
            have[j] = true;
            cl_primes_[j] = Q;
            --missing;
          }
      }
    }
    for (std::size_t j = 0; j < inv.size(); ++j) {
      auto g = principal_generator(K, cl_primes_[j].ideal.pow(inv[j].get_ui()));
      if (!g) throw std::logic_error("power of a class generator is not principal");
      gammas.push_back(*g);
    }
  }

  const std::size_t R = residue_orders_.size(), J = cl_primes_.size(), n = R + J;
  IntMatrix rel(0, n);
  auto padded = [&](const std::vector<Integer>& local) {
    std::vector<Integer> row(n, 0);
    std::copy(local.begin(), local.end(), row.begin());
    return row;
  };
  for (std::size_t i = 0; i < R; ++i) {
    std::vector<Integer> row(n, 0);
    row[i] = residue_orders_[i];
    rel.append_row(row);
  }
  rel.append_row(padded(residue_coordinates(K.element(-1))));
  if (!K.is_rational()) rel.append_row(padded(residue_coordinates(K.fundamental_unit())));
  for (std::size_t j = 0; j < J; ++j) {
    auto row = padded(residue_coordinates(gammas[j]));
    for (std::size_t i = 0; i < R; ++i) row[i] = -row[i];
    row[R + j] = cl_orders_[j];
    rel.append_row(row);
  }
  G_ = smith_presentation(rel, n).p_part(P);
}

std::vector<Integer> RayClassGroup::residue_coordinates(const FieldElement& x) const {
  std::vector<Integer> out;
  const Integer P = p_;
  for (const auto& b : blocks_) {
    if (b.kind == BlockKind::residue) {
      auto F = residue_field(K_, b.prime);
      auto t = reduce(F, b.prime, x);
      if (t == ResidueField::El{0, 0}) throw UsageError("element is not a unit at " + to_string(b.prime));
      t = F.pow(t, b.cofactor);
      long e = iwlab::valuation(b.orders[0], P);
      out.push_back(pohlig_hellman(F, {b.residue_gen, b.residue_gen_y}, t, p_, e));
      continue;
    }
    const long k = b.exponent;
    LocalValue lv = embed(b.place, x, k + 2);
    if (lv.valuation != 0) throw UsageError("element is not a unit at " + to_string(b.prime));
    for (const auto& c : log_coordinates(lv)) {
      if (!c.is_zero() && c.valuation() < 1) throw std::logic_error("log of a 1-unit must be divisible by p");
      if (c.precision() < k) throw PrecisionError("local log lost too many digits");
      Integer v = c.is_zero() ? Integer(0) : c.with_precision(k).lift();
      out.push_back(mod(v / P, b.orders[0]));
    }
  }
  return out;
}

GroupElement RayClassGroup::image_of_residue(const FieldElement& x) const {
  auto loc = residue_coordinates(x);
  loc.resize(G_.ambient_rank(), 0);
  return G_.from_ambient(loc);
}

std::vector<Integer> RayClassGroup::ambient_of(const Ideal& A) const {
  for (const auto& [Pr, k] : m_.factors)
    if (valuation(Pr, A) > 0) throw UsageError("ideal " + A.str() + " is not coprime to the modulus");
  std::vector<Integer> out;
  if (K_.is_rational()) return residue_coordinates(K_.element(A.a()));
  GroupElement c = iwlab::class_of(K_, A);
  Ideal J = A;
  Integer den = 1;
  for (std::size_t j = 0; j < cl_primes_.size(); ++j) {
    Integer cj = mod(c.e[j], cl_orders_[j]);
    c.e[j] = cj;
    J = J * cl_primes_[j].ideal.conj().pow(cj.get_ui());
    den *= pow(cl_primes_[j].norm(), cj.get_ui());
  }
  auto g = principal_generator(K_, J);
  if (!g) throw std::logic_error("class reduction left a non-principal ideal");
  out = residue_coordinates(*g / K_.element(den));
  for (const auto& cj : c.e) out.push_back(cj);
  return out;
}

GroupElement RayClassGroup::class_of(const Ideal& A) const { return G_.from_ambient(ambient_of(A)); }

Integer RayClassGroup::residue_group_order() const {
  Integer n = 1;
  for (const auto& o : residue_orders_) n *= o;
  return n;
}

Integer RayClassGroup::unit_image_order() const {
  const std::size_t R = residue_orders_.size();
  IntMatrix rel(0, R);
  for (std::size_t i = 0; i < R; ++i) {
    std::vector<Integer> row(R, 0);
    row[i] = residue_orders_[i];
    rel.append_row(row);
  }
  auto H = smith_presentation(rel, R);
  std::vector<GroupElement> gens{H.from_ambient(residue_coordinates(K_.element(-1)))};
  if (!K_.is_rational()) gens.push_back(H.from_ambient(residue_coordinates(K_.fundamental_unit())));
  return subgroup_image_order(H, gens);
}

Integer RayClassGroup::class_group_p_order() const {
  if (K_.is_rational()) return 1;
  return p_part(K_.class_group().order(), Integer(p_));
}

}  // namespace iwlab
