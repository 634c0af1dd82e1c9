#include "iwlab/report.hpp"

namespace iwlab {

Json big(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

Json big(const Rational& q) {
  if (q.get_den() == 1) return big(Integer(q.get_num()));
  return q.get_str();
}

Json to_json(const PAdicNumber& x) {
  Json j;
  j["residue"] = x.valuation() < 0 ? Json(x.lift_rational().get_str()) : big(x.is_zero() ? Integer(0) : x.lift());
  j["valuation"] = x.valuation();
  j["precision"] = x.precision();
  j["text"] = x.str();
  return j;
}

Json to_json(const GroupElement& g) {
  Json a = Json::array();
  for (const auto& x : g.e) a.push_back(big(x));
  return a;
}

Json to_json(const FieldElement& x) { return x.str(); }

Json to_json(const PrimeIdeal& P) { return to_string(P); }

Json to_json(const FiniteAbelianGroup& G) {
  Json a = Json::array();
  for (const auto& x : G.invariants()) a.push_back(big(x));
  return a;
}

Json to_json(Verdict v) {
  if (v == Verdict::indeterminate) return "indeterminate";
  return v == Verdict::yes;
}

Json splitting_json(const QuadraticField& K, const Integer& ell, const SplittingReport& rep) {
  Json j;
  j["field"] = K.str();
  j["ell"] = big(ell);
  j["type"] = to_string(rep.type);
  Json ps = Json::array();
  for (const auto& P : rep.primes) {
    Json e;
    e["ideal"] = to_string(P);
    e["norm"] = big(P.norm());
    e["e"] = P.e;
    e["f"] = P.f;
    auto g = principal_generator(K, P.ideal);
    e["generator"] = g ? Json(g->str()) : Json(nullptr);
    ps.push_back(e);
  }
  j["primes"] = ps;
  return j;
}

Json class_group_json(const QuadraticField& K) {
  Json j;
  j["field"] = K.str();
  if (K.is_rational()) {
    j["class_number"] = 1;
    j["invariant_factors"] = Json::array();
    return j;
  }
  const ClassGroup& cl = K.class_group();
  j["class_number"] = big(cl.order());
  j["invariant_factors"] = to_json(cl.group);
  Json reps = Json::array();
  for (const auto& P : cl.ambient_primes) {
    Json e;
    e["ideal"] = to_string(P);
    e["class"] = to_json(class_of(K, P.ideal));
    reps.push_back(e);
  }
  j["prime_classes"] = reps;
  return j;
}

Json unit_json(const QuadraticField& K) {
  Json j;
  j["field"] = K.str();
  const FieldElement& e = K.fundamental_unit();
  j["fundamental_unit"] = e.str();
  j["norm"] = big(e.norm());
  return j;
}

Json ray_class_json(const RayClassGroup& R) {
  Json j;
  j["field"] = R.field().str();
  j["modulus"] = R.modulus().str();
  j["p"] = R.prime();
  j["invariant_factors"] = to_json(R.group());
  j["order"] = big(R.order());
  j["residue_group_order"] = big(R.residue_group_order());
  j["unit_image_order"] = big(R.unit_image_order());
  j["class_group_p_order"] = big(R.class_group_p_order());
  return j;
}

Json galois_json(const GaloisGroupG& G, const std::vector<PrimeIdeal>& qs) {
  Json j;
  j["field"] = G.field().str();
  j["p"] = G.prime();
  j["N"] = G.precision();
  j["invariant_factors"] = to_json(G.group());
  Json fr = Json::array();
  for (const auto& q : qs) {
    auto f = frobenius_image(G, q);
    Json e;
    e["q"] = to_string(q);
    e["class"] = to_json(f.cls);
    e["degree"] = big(f.degree.is_zero() ? Integer(0) : f.degree.lift());
    e["degree_precision"] = f.degree.precision();
    e["degree_valuation"] = f.degree_valuation;
    fr.push_back(e);
  }
  j["frobenius"] = fr;
  return j;
}

Json mq_json(const QuadraticField& K, const FrobeniusModuleReport& r) {
  Json j;
  j["field"] = K.str();
  j["p"] = r.p;
  j["N"] = r.N;
  j["Q"] = Json::array({to_string(r.q1), to_string(r.q2)});
  j["a1"] = to_json(r.a1);
  j["a2"] = 1;
  j["invariant_factors"] = Json::array();
  for (const auto& x : r.invariants) j["invariant_factors"].push_back(big(x));
  j["element"] = to_json(r.element);
  j["degree"] = to_json(r.degree);
  j["m_Q"] = big(r.m_Q);
  j["m_Q_at_N_plus_2"] = big(r.m_Q_high);
  j["stable"] = r.stable;
  return j;
}

Json leopoldt_json(const QuadraticField& K, long p, const LeopoldtReport& r) {
  Json j;
  j["field"] = K.str();
  j["p"] = p;
  j["delta"] = r.delta;
  j["unit_rank"] = r.unit_rank;
  j["regulator_valuation"] = r.regulator_valuation ? Json(*r.regulator_valuation) : Json(nullptr);
  j["precision"] = r.precision;
  j["certified"] = r.certified;
  j["standing_assumption"] = r.standing_assumption;
  return j;
}

Json scan_entry_json(const ScanEntry& e) {
  Json j;
  j["d"] = e.d;
  j["p"] = e.p;
  j["delta"] = e.report.delta;
  j["regulator_valuation"] = e.report.regulator_valuation ? Json(*e.report.regulator_valuation) : Json(nullptr);
  j["precision"] = e.report.precision;
  j["status"] = e.status;
  return j;
}

Json scan_json(const ScanReport& s) {
  Json j;
  Json es = Json::array();
  for (const auto& e : s.entries) es.push_back(scan_entry_json(e));
  j["entries"] = es;
  Json sk = Json::array();
  for (const auto& [d, p] : s.skipped) sk.push_back({{"d", d}, {"p", p}});
  j["skipped"] = sk;
  j["violations"] = s.violations;
  j["indeterminate"] = s.indeterminate;
  return j;
}

Json even_json(const QuadraticField& K, long p, const PrimeIdeal& q, const EvenCriterionReport& r) {
  Json j;
  j["field"] = K.str();
  j["p"] = p;
  j["q"] = to_string(q);
  j["e_q"] = big(r.e_q);
  Json rs = Json::array();
  for (const auto& [M, ratio] : r.ratios) rs.push_back({{"M", M}, {"ratio", big(ratio)}});
  j["ratios"] = rs;
  j["inertia_order"] = big(r.inertia_order());
  j["pass"] = to_json(r.pass);
  return j;
}

Json certificate_json(const KummerCertificate& c) {
  Json j;
  Json basis = Json::array(), exps = Json::array();
  for (std::size_t i = 0; i < c.alpha.basis.size(); ++i) {
    basis.push_back(c.alpha.basis[i].str());
    exps.push_back(to_json(c.alpha.exponents[i]));
  }
  j["alpha"] = {{"basis", basis}, {"exponents", exps}};
  j["Q"] = Json::array({to_string(c.q1), to_string(c.q2)});
  Json vals = Json::array();
  for (const auto& v : c.valuations) vals.push_back(to_json(v));
  j["valuations"] = vals;
  bool torsion = !c.loc_p_torsion.empty();
  for (const auto& [place, v] : c.loc_p_torsion) torsion = torsion && v == Verdict::yes;
  j["loc_p_torsion"] = torsion;
  j["loc_p_trivial"] = c.loc_p_trivial;
  j["a_exponent"] = c.a_exponent < 0 ? Json(nullptr) : Json(c.a_exponent);
  j["predicted_degree"] = c.a_exponent < 0 ? Json(nullptr) : big(c.predicted_degree());
  j["m_Q"] = c.m_Q == 0 ? Json(nullptr) : big(c.m_Q);
  j["m"] = c.m;
  Json tr = Json::array();
  for (const auto& t : c.truncations) tr.push_back(big(t));
  j["truncations"] = tr;
  j["status"] = c.status == Verdict::yes ? "accepted" : c.status == Verdict::no ? "rejected" : "indeterminate";
  if (!c.failed_clause.empty()) {
    j["failed_clause"] = c.failed_clause;
    j["reason"] = c.reason;
  }
  return j;
}

}  // namespace iwlab
