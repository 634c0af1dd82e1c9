#include "iwlab/classfield.hpp"

namespace iwlab {

namespace {

Ideal p_power(const QuadraticField& K, long p, long M) {
  return Ideal::rational(K.disc(), pow(Integer(p), static_cast<unsigned long>(M)));
}

PAdicNumber log_one_plus_p(long p, long prec) { return plog(PAdicNumber(p, Integer(1 + p), prec)); }

}  // namespace

PAdicNumber norm_degree(const Integer& norm, long p, long N) {
  if (norm % p == 0) throw UsageError("norm divisible by p has no degree");
  PAdicNumber x(p, norm, N + 2);
  return log_ratio(PAdicNumber(p, Integer(1 + p), N + 2), angle(x)).with_precision(N);
}

GaloisGroupG::GaloisGroupG(const QuadraticField& K, long p, long N) : p_(p), N_(N) {
  if (N < 1) throw UsageError("precision N must be at least 1");
  if (!K.is_rational() && K.disc() % p == 0)
    throw UnsupportedError(std::to_string(p) + " ramifies in " + K.str());
  ray_ = std::make_shared<RayClassGroup>(K, p_power(K, p, N + 1), p);

  PAdicNumber L = log_one_plus_p(p, N + 2);
  PAdicNumber P(p, Integer(p), N + 2);
  PAdicNumber split = (P / L).with_precision(N);
  PAdicNumber zero = PAdicNumber::zero(p, N);
  for (const auto& b : ray_->blocks()) {
    switch (b.kind) {
      case RayClassGroup::BlockKind::residue:
        degrees_.push_back(zero);
        break;
      case RayClassGroup::BlockKind::local_split:
      case RayClassGroup::BlockKind::local_rational:
        degrees_.push_back(split);
        break;
      case RayClassGroup::BlockKind::local_inert:
        // log N(x) = trace(log x) = 2a for log x = a + b s
        degrees_.push_back((PAdicNumber(p, Integer(2), N) * split));
        degrees_.push_back(zero);
        break;
    }
  }
  for (const auto& q : ray_->class_generators()) degrees_.push_back(norm_degree(q.norm(), p, N));
}

PAdicNumber GaloisGroupG::degree(const GroupElement& g) const {
  auto x = group().to_ambient(g);
  PAdicNumber s = PAdicNumber::zero(p_, N_);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) s += PAdicNumber(p_, x[i], N_) * degrees_[i];
  return s.with_precision(N_);
}

GaloisGroupG group_G(const QuadraticField& K, long p, long N) { return GaloisGroupG(K, p, N); }

bool is_stable(const GaloisGroupG& G) {
  GaloisGroupG H(G.field(), G.prime(), G.precision() + 1);
  return H.group().order() == G.group().order() * G.prime();
}

FrobeniusImage frobenius_image(const GaloisGroupG& G, const PrimeIdeal& q) {
  if (q.ell == G.prime()) throw UsageError("Frobenius at a prime above p");
  const long p = G.prime();
  FrobeniusImage f{G.class_of(q.ideal), norm_degree(q.norm(), p, G.precision()), 0};
  f.degree_valuation = iwlab::valuation(pow(q.norm(), static_cast<unsigned long>(p - 1)) - 1, Integer(p)) - 1;
  return f;
}

Integer e_of_q(const PrimeIdeal& q, long p) {
  if (q.ell == p) throw UsageError("q lies above p");
  return p_part(q.norm() - 1, Integer(p));
}

EvenCriterionReport even_criterion(const QuadraticField& K, long p, const PrimeIdeal& q, long N) {
  if (N < 1) throw UsageError("precision N must be at least 1");
  EvenCriterionReport r;
  r.e_q = e_of_q(q, p);
  for (long M = N + 1; M <= N + 2; ++M) {
    Ideal pm = p_power(K, p, M);
    RayClassGroup with_q(K, pm * q.ideal, p), without(K, pm, p);
    r.ratios.emplace_back(M, with_q.order() / without.order());
  }
  if (r.ratios[0].second != r.ratios[1].second)
    r.pass = Verdict::indeterminate;
  else
    r.pass = r.ratios[0].second == r.e_q ? Verdict::yes : Verdict::no;
  return r;
}

}  // namespace iwlab
