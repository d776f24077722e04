#include "semiring/payloads.hpp"

namespace semiring {

using json = nlohmann::ordered_json;

json element_set_json(const ElementSet& e) {
  json a = json::array();
  for (elem x : e.elements()) a.push_back(x);
  return a;
}

json classification_json(const FiniteSemiring& s) {
  const auto c = classify_all(s);
  const auto f = structure_flags(s);
  json j;
  j["order"] = s.order();
  j["units"] = element_set_json(c.units);
  j["zero_divisors"] = element_set_json(c.zero_divisors);
  j["nilpotents"] = element_set_json(c.nilpotents);
  j["cancellative"] = element_set_json(c.cancellative);
  j["flags"] = {{"ring", f.is_ring},
                {"proper", f.is_proper},
                {"entire", f.is_entire},
                {"additively_idempotent", f.is_add_idempotent},
                {"multiplicatively_idempotent", f.is_mult_idempotent}};
  auto& props = j["properties"] = json::object();
  for (Property p : kAllProperties) props[std::string(property_name(p))] = decide(p, s).holds;
  auto& el = j["elements"] = json::array();
  for (const auto& p : c.profiles) {
    json e;
    e["element"] = p.element;
    e["label"] = s.label(p.element);
    e["unit"] = p.is_unit;
    if (p.inverse) e["inverse"] = *p.inverse;
    e["zero_divisor"] = p.is_zero_divisor;
    if (p.annihilated) e["annihilated"] = *p.annihilated;
    e["nilpotent"] = p.is_nilpotent;
    if (p.nilpotency_exponent) e["nilpotency_exponent"] = *p.nilpotency_exponent;
    e["cancellative"] = p.is_cancellative;
    el.push_back(std::move(e));
  }
  return j;
}

json verdict_json(const PropertyVerdict& v) {
  json j;
  j["property"] = std::string(property_name(v.property));
  j["holds"] = v.holds;
  auto& ws = j["witnesses"] = json::array();
  for (const auto& w : v.witnesses) ws.push_back({{"element", w.element}, {"kind", w.kind}, {"values", w.values}});
  return j;
}

json lattice_json(const IdealLattice& lat, const OrderProps& props) {
  json j;
  auto& ideals = j["ideals"] = json::array();
  for (const auto& i : lat.ideals) ideals.push_back(element_set_json(i.elements));
  j["primes"] = lat.primes;
  j["maximals"] = lat.maximals;
  j["nil"] = element_set_json(lat.nil);
  j["complete"] = lat.complete;
  j["uniserial"] = props.uniserial;
  j["local"] = props.local;
  j["pis"] = props.pis;
  j["krull_dimension"] = props.krull_dimension;
  return j;
}

json localization_json(const LocalizedSemiring& l) {
  json j;
  j["order"] = l.quotient.order();
  j["canonical_map"] = l.canonical_map;
  auto& reps = j["class_reps"] = json::array();
  for (const auto& [a, t] : l.class_reps) reps.push_back({a, t});
  return j;
}

}  // namespace semiring
