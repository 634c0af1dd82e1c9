#pragma once

#include "json.hpp"

#include "iwlab/kummer.hpp"

namespace iwlab {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become numbers, larger ones strings.
Json big(const Integer& n);
Json big(const Rational& q);
Json to_json(const PAdicNumber& x);
Json to_json(const GroupElement& g);
Json to_json(const FieldElement& x);
Json to_json(const PrimeIdeal& P);
Json to_json(const FiniteAbelianGroup& G);
Json to_json(Verdict v);

Json splitting_json(const QuadraticField& K, const Integer& ell, const SplittingReport& rep);
Json class_group_json(const QuadraticField& K);
Json unit_json(const QuadraticField& K);
Json ray_class_json(const RayClassGroup& R);
Json galois_json(const GaloisGroupG& G, const std::vector<PrimeIdeal>& qs);
Json mq_json(const QuadraticField& K, const FrobeniusModuleReport& r);
Json leopoldt_json(const QuadraticField& K, long p, const LeopoldtReport& r);
Json scan_entry_json(const ScanEntry& e);
Json scan_json(const ScanReport& s);
Json even_json(const QuadraticField& K, long p, const PrimeIdeal& q, const EvenCriterionReport& r);
Json certificate_json(const KummerCertificate& c);

}  // namespace iwlab
