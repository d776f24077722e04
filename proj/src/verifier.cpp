#include "semiring/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <thread>

#include "semiring/census.hpp"
#include "semiring/codec.hpp"
#include "semiring/constructions.hpp"
#include "semiring/deciders.hpp"
#include "semiring/ideals.hpp"
#include "semiring/localization.hpp"
#include "semiring/semimodules.hpp"

namespace semiring {

namespace {

using json = nlohmann::ordered_json;

struct Named {
  std::string name;
  FiniteSemiring s;
};

constexpr std::size_t kFailureWitnessCap = 8;
constexpr std::size_t kExampleWitnessCap = 6;

const std::vector<Claim> kRegistry = {
    {"C1", "a pi-regular semiring has every element a unit or multiplicatively non-cancellative",
     "census + constructions", Expectation::verify},
    {"C2", "every finite semiring is pi-regular", "census + constructions", Expectation::verify},
    {"C3", "chains of length >= 3 are not classical but satisfy condition (3)", "chain(k), 3 <= k <= 8",
     Expectation::verify},
    {"C4", "Hu's, LaGrassa's and X_n are finite proper non-classical semirings",
     "Hu, LaGrassa, X_1..X_5", Expectation::verify},
    {"C5", "B(n,i) is a classical semiring", "both interpretations, 2 <= n <= 8, 0 <= i < n",
     Expectation::report_only},
    {"C6", "a product of classical semirings is classical", "pairs and triples of classical census classes",
     Expectation::verify},
    {"C7", "complemented semirings are classical; Boolean algebras are nilpotent-free classical",
     "B^k (k <= 4) + complemented census classes", Expectation::verify},
    {"C8", "a product of nilpotent-free classical semirings is nilpotent-free classical",
     "pairs from the C7 set and Z_p", Expectation::verify},
    {"C9", "generalized dual numbers over a classical ring form a classical ring",
     "dual_numbers(R, k), R in {Z_2, Z_4, Z_6, F_2[x]/(x^2)}, k <= 2", Expectation::verify},
    {"C10",
     "every element unit or nilpotent <=> Nil(S) is the only prime <=> Nil(S) is maximal",
     "census classes of order >= 2", Expectation::verify},
    {"C11", "Krull dimension zero implies classical", "census classes of order >= 2", Expectation::verify},
    {"C12", "for uniserial S: classical <=> AnnAnn(b) = (b) for all b",
     "uniserial census classes + Z_4, Z_8, Z_9", Expectation::verify},
    {"C13",
     "if V(M) = M: S classical => S (+) M classical; S completely primary <=> S (+) M completely primary",
     "(S, M) with V(M) = M, |S|, |M| <= 4", Expectation::verify},
    {"C14", "S entire implies Q(S) entire", "entire census classes + adjoin_zero instances",
     Expectation::verify},
    {"C15", "adjoining a zero to a ring with zero-divisors gives Q(S) = S not classical",
     "adjoin_zero(Z_4), adjoin_zero(Z_6), adjoin_zero(Z_2 x Z_2)", Expectation::verify},
    {"C16", "classical implies S = Q(S)", "classical census classes", Expectation::verify},
    {"C17", "MC(S) = {1} and S = Q(S) while S is not classical", "Hu, LaGrassa", Expectation::verify},
    {"C18",
     "Id(S) classical => S classical; S classical and PIS => Id(S) classical",
     "census classes with <= 24 ideals", Expectation::verify},
    {"C19", "truncated polynomial rings and nilpotent-monoid semirings are completely primary",
     "trunc_poly and nilpotent_monoid instances", Expectation::verify},
    {"C20", "a product of >= 2 completely primary semirings is classical, not completely primary",
     "pairs of completely primary census classes", Expectation::verify},
    {"C21", "Hu's and LaGrassa's semirings are local and Artinian but not completely primary",
     "Hu, LaGrassa", Expectation::verify},
    {"C22", "every element of a finite semialgebra is a unit or multiplicatively non-cancellative",
     "semialgebra instances", Expectation::verify},
    {"C23",
     "Id(S) completely primary => S completely primary; S completely primary and PIS => Id(S) "
     "completely primary",
     "census classes with <= 24 ideals", Expectation::verify},
    {"C24", "finite rings are classical", "ring census classes + Z_n, n <= 16", Expectation::verify},
};

json set_json(const ElementSet& e) {
  json a = json::array();
  for (elem x : e.elements()) a.push_back(x);
  return a;
}

// ---- instance sets ----

std::vector<Named> census_upto(std::size_t max_order) {
  std::vector<Named> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    const auto& cls = census_classes(n);
    for (std::size_t k = 0; k < cls.size(); ++k)
      out.push_back({"census:" + std::to_string(n) + "#" + std::to_string(k), cls[k]});
  }
  return out;
}

FiniteSemiring boolean_power(std::size_t k) {
  return direct_product(std::vector<FiniteSemiring>(k, boolean_semiring()));
}

FiniteSemiring f2_dual() {
  const std::size_t e[] = {2};
  return trunc_poly_ring(2, e);
}

std::vector<Named> trunc_poly_instances() {
  const std::vector<std::pair<std::size_t, std::vector<std::size_t>>> params = {
      {2, {2}}, {2, {3}}, {2, {4}}, {3, {2}}, {3, {3}}, {5, {2}}, {2, {2, 2}}, {2, {2, 3}}, {3, {2, 2}},
  };
  std::vector<Named> out;
  for (const auto& [p, ex] : params) {
    std::string name = "trunc_poly(" + std::to_string(p) + ";";
    for (std::size_t k = 0; k < ex.size(); ++k) name += (k ? "," : "") + std::to_string(ex[k]);
    out.push_back({name + ")", trunc_poly_ring(p, ex)});
  }
  return out;
}

MonoidTable chain_monoid(std::size_t k) {
  MonoidTable m{k, 0, std::vector<elem>(k * k)};
  for (elem a = 0; a < k; ++a)
    for (elem b = 0; b < k; ++b) m.table[a * k + b] = std::max(a, b);
  return m;
}

std::vector<Named> nilpotent_monoid_instances() {
  std::vector<Named> out;
  for (std::size_t k = 1; k <= 3; ++k)
    out.push_back({"nilpotent_monoid(free_semilattice:" + std::to_string(k) + ")",
                   nilpotent_monoid_semiring(free_semilattice(k))});
  for (std::size_t k = 3; k <= 5; ++k)
    out.push_back({"nilpotent_monoid(chain:" + std::to_string(k) + ")",
                   nilpotent_monoid_semiring(chain_monoid(k))});
  return out;
}

std::vector<Named> dual_number_instances() {
  std::vector<Named> out;
  const std::vector<Named> rings = {{"zn:2", zn(2)}, {"zn:4", zn(4)}, {"zn:6", zn(6)},
                                    {"trunc_poly(2;2)", f2_dual()}};
  for (const auto& r : rings)
    for (std::size_t k = 1; k <= 2; ++k)
      out.push_back({"dual_numbers(" + r.name + "," + std::to_string(k) + ")", dual_numbers(r.s, k)});
  return out;
}

std::vector<Named> adjoin_zero_instances() {
  return {{"adjoin_zero(zn:2)", adjoin_zero(zn(2))},
          {"adjoin_zero(zn:3)", adjoin_zero(zn(3))},
          {"adjoin_zero(zn:4)", adjoin_zero(zn(4))},
          {"adjoin_zero(zn:6)", adjoin_zero(zn(6))},
          {"adjoin_zero(zn:2 x zn:2)", adjoin_zero(direct_product(zn(2), zn(2)))}};
}

std::vector<Named> hu_lagrassa() { return {{"hu", hu_semiring()}, {"lagrassa", lagrassa_semiring()}}; }

std::vector<Named> construction_instances() {
  std::vector<Named> out = {{"boolean", boolean_semiring()}};
  for (std::size_t k = 2; k <= 8; ++k) out.push_back({"chain:" + std::to_string(k), chain(k)});
  for (auto& x : hu_lagrassa()) out.push_back(std::move(x));
  for (std::size_t k = 1; k <= 5; ++k) out.push_back({"xn:" + std::to_string(k), xn(k)});
  for (std::size_t k = 2; k <= 16; ++k) out.push_back({"zn:" + std::to_string(k), zn(k)});
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::size_t i = 0; i < n; ++i)
      out.push_back({"bni:" + std::to_string(n) + "," + std::to_string(i) + ",canonical",
                     bni(n, i, BniInterpretation::canonical_congruence)});
  for (std::size_t k = 2; k <= 4; ++k)
    out.push_back({"boolean^" + std::to_string(k), boolean_power(k)});
  out.push_back({"boolean x zn:4", direct_product(boolean_semiring(), zn(4))});
  for (auto& x : adjoin_zero_instances()) out.push_back(std::move(x));
  for (auto& x : dual_number_instances()) out.push_back(std::move(x));
  for (auto& x : trunc_poly_instances()) out.push_back(std::move(x));
  for (auto& x : nilpotent_monoid_instances()) out.push_back(std::move(x));
  return out;
}

// ---- witnesses ----

json base_witness(const char* kind, const Named& n) { return witness_base(kind, n.name, n.s); }
json property_witness(const Named& n, Property p) { return witness_property(n.name, n.s, p); }
json product_witness(const Named& prod, const std::vector<const Named*>& factors) {
  std::vector<std::pair<std::string, FiniteSemiring>> fs;
  for (const auto* f : factors) fs.emplace_back(f->name, f->s);
  return witness_product(prod.name, prod.s, fs);
}
json ideal_facts_witness(const Named& n, const IdealLattice& lat) {
  return witness_ideal_facts(n.name, n.s, lat);
}
json ideal_semiring_witness(const Named& n, const IdealSemiring& id) {
  return witness_ideal_semiring(n.name, n.s, id);
}
json total_quotient_witness(const Named& n, const TotalQuotient& q) {
  return witness_total_quotient(n.name, n.s, q);
}
json ann_ann_witness(const Named& n, const AnnAnnEntry& e) { return witness_ann_ann(n.name, n.s, e); }

// ---- claim accumulation ----

class Acc {
 public:
  Acc(std::string id, Expectation expected) : expected_(expected) { r_.id = std::move(id); }

  void pass() { ++r_.instances_checked; }
  void fail(std::vector<json> ws) {
    ++r_.instances_checked;
    ++failures_;
    if (failures_ <= kFailureWitnessCap || expected_ == Expectation::report_only)
      for (auto& w : ws) r_.witnesses.push_back(std::move(w));
  }
  void check(bool ok, const std::function<std::vector<json>()>& ws) {
    if (ok) pass();
    else fail(ws());
  }
  /// Dossier row: counted either way and always kept.
  void row(bool ok, json w) {
    ++r_.instances_checked;
    if (!ok) ++failures_;
    r_.witnesses.push_back(std::move(w));
  }
  /// Illustrative witness attached to a passing instance.
  void example(json w) {
    if (examples_++ < kExampleWitnessCap) r_.witnesses.push_back(std::move(w));
  }
  void note(std::string s) { r_.notes.push_back(std::move(s)); }

  ClaimReport finish() {
    if (failures_ == 0) r_.status = ClaimStatus::verified;
    else if (expected_ == Expectation::report_only && failures_ < r_.instances_checked)
      r_.status = ClaimStatus::mixed;
    else r_.status = ClaimStatus::counterexample;
    if (failures_ > 0)
      r_.notes.push_back(std::to_string(failures_) + " of " + std::to_string(r_.instances_checked) +
                         " instances fail");
    return std::move(r_);
  }

 private:
  ClaimReport r_;
  Expectation expected_;
  std::size_t failures_ = 0;
  std::size_t examples_ = 0;
};

bool holds(Property p, const FiniteSemiring& s) { return decide(p, s).holds; }

std::vector<Named> census_and_constructions(const ScaleConfig& sc) {
  auto v = census_upto(sc.max_order);
  for (auto& x : construction_instances()) v.push_back(std::move(x));
  return v;
}

std::vector<Named> select(std::vector<Named> v, const std::function<bool(const Named&)>& keep) {
  std::erase_if(v, [&](const Named& n) { return !keep(n); });
  return v;
}

Named product_of(const std::vector<const Named*>& fs) {
  std::string name;
  std::vector<FiniteSemiring> ss;
  for (const auto* f : fs) {
    name += (name.empty() ? "" : " x ") + f->name;
    ss.push_back(f->s);
  }
  return {name, direct_product(ss)};
}

// ---- claims ----

void c1(Acc& a, const ScaleConfig& sc) {
  for (const auto& n : census_and_constructions(sc)) {
    const bool ok = !holds(Property::pi_regular, n.s) || holds(Property::condition3, n.s);
    a.check(ok, [&] {
      return std::vector{property_witness(n, Property::pi_regular),
                         property_witness(n, Property::condition3)};
    });
  }
}

void c2(Acc& a, const ScaleConfig& sc) {
  for (const auto& n : census_and_constructions(sc)) {
    const auto v = decide(Property::pi_regular, n.s);
    a.check(v.holds && replay(n.s, v), [&] { return std::vector{property_witness(n, Property::pi_regular)}; });
  }
}

void c3(Acc& a, const ScaleConfig&) {
  for (std::size_t k = 3; k <= 8; ++k) {
    const Named n{"chain:" + std::to_string(k), chain(k)};
    const bool ok = !holds(Property::classical, n.s) && holds(Property::condition3, n.s);
    a.check(ok, [&] {
      return std::vector{property_witness(n, Property::classical),
                         property_witness(n, Property::condition3)};
    });
    if (ok) a.example(property_witness(n, Property::classical));
  }
}

void c4(Acc& a, const ScaleConfig&) {
  auto v = hu_lagrassa();
  for (std::size_t k = 1; k <= 5; ++k) v.push_back({"xn:" + std::to_string(k), xn(k)});
  for (const auto& n : v) {
    const bool ok = !holds(Property::classical, n.s) && structure_flags(n.s).is_proper;
    a.check(ok, [&] { return std::vector{property_witness(n, Property::classical)}; });
    if (ok) a.example(property_witness(n, Property::classical));
  }
}


void c5(Acc& a, const ScaleConfig&) {
  for (auto interp : {BniInterpretation::literal_mod, BniInterpretation::canonical_congruence}) {
    const std::string iname = interp == BniInterpretation::literal_mod ? "literal" : "canonical";
    std::size_t invalid = 0, nonclassical = 0, classical = 0;
    for (std::size_t n = 2; n <= 8; ++n)
      for (std::size_t i = 0; i < n; ++i) {
        const Named inst{"bni:" + std::to_string(n) + "," + std::to_string(i) + "," + iname,
                         bni(n, i, interp)};
        json w = base_witness("bni_instance", inst);
        w["n"] = n;
        w["i"] = i;
        w["interpretation"] = iname;
        const auto ax = verify_axioms(inst.s, 1);
        w["axioms_ok"] = ax.ok;
        bool ok = false;
        if (!ax.ok) {
          ++invalid;
          w["violation"] = {{"axiom", ax.violations.front().axiom},
                            {"tuple", ax.violations.front().witness}};
        } else {
          const auto v = decide(Property::classical, inst.s);
          w["classical"] = v.holds;
          if (v.holds) {
            ++classical;
            ok = true;
          } else {
            ++nonclassical;
            w["element"] = v.witnesses.front().element;
          }
        }
        a.row(ok, std::move(w));
      }
    a.note(iname + ": " + std::to_string(invalid) + " fail the axioms, " +
           std::to_string(nonclassical) + " are valid but not classical, " +
           std::to_string(classical) + " are classical");
  }
}

void c6(Acc& a, const ScaleConfig& sc) {
  const auto cls = select(census_upto(sc.max_order),
                          [](const Named& n) { return holds(Property::classical, n.s); });
  auto run = [&](const std::vector<const Named*>& fs) {
    const Named p = product_of(fs);
    a.check(holds(Property::classical, p.s), [&] {
      std::vector<json> ws{product_witness(p, fs), property_witness(p, Property::classical)};
      for (const auto* f : fs) ws.push_back(property_witness(*f, Property::classical));
      return ws;
    });
  };
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = i; j < cls.size(); ++j) {
      run({&cls[i], &cls[j]});
      for (std::size_t k = j; k < cls.size(); ++k) run({&cls[i], &cls[j], &cls[k]});
    }
}

std::vector<Named> c7_set(const ScaleConfig& sc) {
  std::vector<Named> v;
  for (std::size_t k = 1; k <= 4; ++k) v.push_back({"boolean^" + std::to_string(k), boolean_power(k)});
  for (auto& n : select(census_upto(sc.max_order),
                        [](const Named& n) { return holds(Property::complemented, n.s); }))
    v.push_back(std::move(n));
  return v;
}

void c7(Acc& a, const ScaleConfig& sc) {
  for (const auto& n : c7_set(sc)) {
    const bool boolean_algebra = n.name.starts_with("boolean^");
    bool ok = !holds(Property::complemented, n.s) || holds(Property::classical, n.s);
    if (boolean_algebra)
      ok = ok && holds(Property::complemented, n.s) && holds(Property::nilpotent_free, n.s) &&
           holds(Property::classical, n.s);
    a.check(ok, [&] {
      return std::vector{property_witness(n, Property::complemented),
                         property_witness(n, Property::nilpotent_free),
                         property_witness(n, Property::classical)};
    });
  }
}

void c8(Acc& a, const ScaleConfig& sc) {
  auto set = c7_set(sc);
  for (std::size_t p : {2, 3, 5, 7}) set.push_back({"zn:" + std::to_string(p), zn(p)});
  set = select(std::move(set), [](const Named& n) {
    return n.s.order() > 1 && holds(Property::nilpotent_free, n.s) && holds(Property::classical, n.s);
  });
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i; j < set.size(); ++j) {
      const std::vector<const Named*> fs{&set[i], &set[j]};
      const Named p = product_of(fs);
      a.check(holds(Property::nilpotent_free, p.s) && holds(Property::classical, p.s), [&] {
        return std::vector{product_witness(p, fs), property_witness(p, Property::nilpotent_free),
                           property_witness(p, Property::classical)};
      });
    }
}

void c9(Acc& a, const ScaleConfig&) {
  for (const auto& n : dual_number_instances()) {
    const bool ok = structure_flags(n.s).is_ring && holds(Property::classical, n.s);
    a.check(ok, [&] { return std::vector{property_witness(n, Property::classical)}; });
  }
}

std::vector<Named> nontrivial_census(const ScaleConfig& sc) {
  return select(census_upto(sc.max_order), [](const Named& n) { return n.s.order() > 1; });
}

void c10(Acc& a, const ScaleConfig& sc) {
  for (const auto& n : nontrivial_census(sc)) {
    const auto lat = all_ideals(n.s);
    const ElementSet nil = classify_all(n.s).nilpotents;
    const bool every = holds(Property::completely_primary, n.s);
    const bool only_prime = lat.primes.size() == 1 && lat.ideals[lat.primes[0]].elements == nil;
    bool nil_maximal = false;
    for (auto k : lat.maximals) nil_maximal = nil_maximal || lat.ideals[k].elements == nil;
    a.check(every == only_prime && only_prime == nil_maximal, [&] {
      return std::vector{ideal_facts_witness(n, lat), property_witness(n, Property::completely_primary)};
    });
  }
}

void c11(Acc& a, const ScaleConfig& sc) {
  std::size_t dim0 = 0;
  for (const auto& n : nontrivial_census(sc)) {
    const auto lat = all_ideals(n.s);
    const auto props = order_props(n.s, lat);
    if (props.krull_dimension == 0) ++dim0;
    a.check(props.krull_dimension != 0 || holds(Property::classical, n.s), [&] {
      return std::vector{ideal_facts_witness(n, lat), property_witness(n, Property::classical)};
    });
  }
  a.note(std::to_string(dim0) + " instances have Krull dimension zero");
}

void c12(Acc& a, const ScaleConfig& sc) {
  auto set = select(census_upto(sc.max_order), [](const Named& n) { return order_props(n.s).uniserial; });
  for (std::size_t k : {4, 8, 9}) set.push_back({"zn:" + std::to_string(k), zn(k)});
  for (const auto& n : set) {
    const auto crit = ann_ann_criterion(n.s);
    a.check(holds(Property::classical, n.s) == crit.all_equal, [&] {
      std::vector<json> ws{property_witness(n, Property::classical)};
      for (const auto& e : crit.entries)
        if (!e.equal) {
          ws.push_back(ann_ann_witness(n, e));
          break;
        }
      return ws;
    });
    if (n.name == "zn:4")
      for (const auto& e : crit.entries) a.example(ann_ann_witness(n, e));
  }
}

// All homomorphisms s -> t by exhaustive search over maps fixing 0 and 1.
std::vector<std::vector<elem>> homomorphisms(const FiniteSemiring& s, const FiniteSemiring& t) {
  std::vector<std::vector<elem>> out;
  std::vector<elem> map(s.order(), 0);
  std::function<void(elem)> go = [&](elem a) {
    if (a == s.order()) {
      if (is_homomorphism(s, t, map)) out.push_back(map);
      return;
    }
    if (a == s.zero() || a == s.one()) {
      map[a] = a == s.zero() ? t.zero() : t.one();
      go(a + 1);
      return;
    }
    for (elem v = 0; v < t.order(); ++v) {
      map[a] = v;
      go(a + 1);
    }
  };
  go(0);
  return out;
}

void c13(Acc& a, const ScaleConfig& sc) {
  const std::vector<Named> rings = {{"zn:2", zn(2)},
                                    {"zn:3", zn(3)},
                                    {"zn:4", zn(4)},
                                    {"zn:2 x zn:2", direct_product(zn(2), zn(2))},
                                    {"trunc_poly(2;2)", f2_dual()}};
  std::size_t proper_nontrivial = 0;
  std::string first_proper;
  for (const auto& s : census_upto(std::min<std::size_t>(sc.max_order, 4))) {
    std::vector<std::pair<std::string, FiniteSemimodule>> mods{{"{0}", trivial_module(s.s)}};
    for (const auto& t : rings)
      for (const auto& phi : homomorphisms(s.s, t.s)) {
        std::string name = t.name + " via [";
        for (std::size_t k = 0; k < phi.size(); ++k) name += (k ? "," : "") + std::to_string(phi[k]);
        mods.emplace_back(name + "]", restrict_scalars(t.s, s.s, phi));
      }
    for (const auto& [mname, m] : mods) {
      if (!verify_semimodule(m, 1).ok || v_set(m).size() != m.order()) continue;
      const Named e{"expectation(" + s.name + ", " + mname + ")", expectation_semiring(s.s, m)};
      if (m.order() > 1 && !structure_flags(s.s).is_ring && ++proper_nontrivial == 1) first_proper = e.name;
      const bool valid = verify_axioms(e.s, 1).ok;
      const bool s_cl = holds(Property::classical, s.s), e_cl = valid && holds(Property::classical, e.s);
      const bool s_cp = holds(Property::completely_primary, s.s);
      const bool e_cp = valid && holds(Property::completely_primary, e.s);
      bool units_ok = valid;
      if (valid) {
        const auto cs = classify_all(s.s), ce = classify_all(e.s);
        for (elem x = 0; x < e.s.order(); ++x) {
          const elem base = static_cast<elem>(x / m.order());
          units_ok = units_ok && ce.units.contains(x) == cs.units.contains(base) &&
                     ce.nilpotents.contains(x) == cs.nilpotents.contains(base);
        }
      }
      a.check(valid && (!s_cl || e_cl) && s_cp == e_cp && units_ok, [&] {
        return std::vector{property_witness(s, Property::classical), property_witness(e, Property::classical),
                           property_witness(s, Property::completely_primary),
                           property_witness(e, Property::completely_primary)};
      });
    }
  }
  a.note(std::to_string(proper_nontrivial) +
         " instances have S not a ring and V(M) = M nontrivial" +
         (first_proper.empty() ? "" : "; first: " + first_proper));
}

void c14(Acc& a, const ScaleConfig& sc) {
  auto set = select(census_upto(sc.max_order), [](const Named& n) { return holds(Property::entire, n.s); });
  for (auto& x : adjoin_zero_instances()) set.push_back(std::move(x));
  for (const auto& n : set) {
    const auto q = total_quotient(n.s);
    const Named qn{"Q(" + n.name + ")", q.localized.quotient};
    a.check(holds(Property::entire, n.s) && holds(Property::entire, qn.s), [&] {
      return std::vector{total_quotient_witness(n, q), property_witness(qn, Property::entire)};
    });
  }
}

void c15(Acc& a, const ScaleConfig&) {
  for (const auto& n : adjoin_zero_instances()) {
    if (n.name == "adjoin_zero(zn:2)" || n.name == "adjoin_zero(zn:3)") continue;
    const auto q = total_quotient(n.s);
    const Named qn{"Q(" + n.name + ")", q.localized.quotient};
    const bool iso = is_isomorphism(n.s, qn.s, q.localized.canonical_map);
    const bool ok = iso && !holds(Property::classical, qn.s);
    a.check(ok, [&] {
      return std::vector{total_quotient_witness(n, q), property_witness(qn, Property::classical)};
    });
    if (ok) {
      a.example(total_quotient_witness(n, q));
      a.example(property_witness(qn, Property::classical));
    }
  }
}

void c16(Acc& a, const ScaleConfig& sc) {
  for (const auto& n :
       select(census_upto(sc.max_order), [](const Named& n) { return holds(Property::classical, n.s); })) {
    const auto q = total_quotient(n.s);
    a.check(is_isomorphism(n.s, q.localized.quotient, q.localized.canonical_map),
            [&] { return std::vector{total_quotient_witness(n, q)}; });
  }
}

void c17(Acc& a, const ScaleConfig&) {
  for (const auto& n : hu_lagrassa()) {
    const auto q = total_quotient(n.s);
    const bool mc_one = classify_all(n.s).cancellative == ElementSet::of(n.s.order(), {n.s.one()});
    const bool ok = mc_one && is_isomorphism(n.s, q.localized.quotient, q.localized.canonical_map) &&
                    !holds(Property::classical, n.s);
    a.check(ok, [&] {
      return std::vector{total_quotient_witness(n, q), property_witness(n, Property::classical)};
    });
    if (ok) {
      a.example(total_quotient_witness(n, q));
      a.example(property_witness(n, Property::classical));
    }
  }
}

void id_transfer(Acc& a, const ScaleConfig& sc, Property p) {
  std::size_t without_pis = 0, not_pis = 0;
  for (const auto& n : census_upto(sc.max_order)) {
    const auto lat = all_ideals(n.s);
    if (lat.ideals.size() > kDefaultIdealOrderCap) continue;
    const auto id = ideal_semiring(n.s);
    const Named idn{"Id(" + n.name + ")", id.semiring};
    const bool pis = order_props(n.s, lat).pis;
    const bool s_p = holds(p, n.s), id_p = holds(p, idn.s);
    if (!pis) ++not_pis;
    if (s_p && !pis && !id_p) ++without_pis;
    a.check((!id_p || s_p) && (!(s_p && pis) || id_p), [&] {
      return std::vector{ideal_semiring_witness(n, id), property_witness(n, p), property_witness(idn, p)};
    });
  }
  a.note(std::to_string(not_pis) + " instances are not PIS; " + std::to_string(without_pis) +
         " of them have S " + std::string(property_name(p)) + " and Id(S) not");
}

void c18(Acc& a, const ScaleConfig& sc) { id_transfer(a, sc, Property::classical); }
void c23(Acc& a, const ScaleConfig& sc) { id_transfer(a, sc, Property::completely_primary); }

void c19(Acc& a, const ScaleConfig&) {
  for (const auto& n : trunc_poly_instances())
    a.check(structure_flags(n.s).is_ring && holds(Property::completely_primary, n.s),
            [&] { return std::vector{property_witness(n, Property::completely_primary)}; });
  for (const auto& n : nilpotent_monoid_instances())
    a.check(structure_flags(n.s).is_proper && holds(Property::completely_primary, n.s),
            [&] { return std::vector{property_witness(n, Property::completely_primary)}; });
}

void c20(Acc& a, const ScaleConfig& sc) {
  const auto cp = select(nontrivial_census(sc),
                         [](const Named& n) { return holds(Property::completely_primary, n.s); });
  for (std::size_t i = 0; i < cp.size(); ++i)
    for (std::size_t j = i; j < cp.size(); ++j) {
      const std::vector<const Named*> fs{&cp[i], &cp[j]};
      const Named p = product_of(fs);
      const bool ok = holds(Property::classical, p.s) && !holds(Property::completely_primary, p.s);
      a.check(ok, [&] {
        return std::vector{product_witness(p, fs), property_witness(p, Property::classical),
                           property_witness(p, Property::completely_primary)};
      });
      if (ok) a.example(property_witness(p, Property::completely_primary));
    }
}

void c21(Acc& a, const ScaleConfig&) {
  for (const auto& n : hu_lagrassa()) {
    const auto lat = all_ideals(n.s);
    const bool ok = lat.maximals.size() == 1 && !holds(Property::completely_primary, n.s);
    a.check(ok, [&] {
      return std::vector{ideal_facts_witness(n, lat), property_witness(n, Property::completely_primary)};
    });
    if (ok) {
      a.example(ideal_facts_witness(n, lat));
      a.example(property_witness(n, Property::completely_primary));
    }
  }
  a.note("Artinian holds for every finite semiring: ideal chains are bounded by the order");
}

void c22(Acc& a, const ScaleConfig& sc) {
  std::vector<std::pair<std::string, FiniteSemialgebra>> algs;
  auto over_self = [&](const Named& n) {
    std::vector<elem> id(n.s.order());
    for (elem x = 0; x < id.size(); ++x) id[x] = x;
    algs.emplace_back(n.name + " over itself", semiring_as_algebra(n.s, n.s, id));
  };
  for (const auto& n : census_upto(sc.max_order)) over_self(n);
  for (const auto& n : hu_lagrassa()) over_self(n);
  for (std::size_t k = 3; k <= 5; ++k) over_self({"chain:" + std::to_string(k), chain(k)});
  for (std::size_t k = 1; k <= 3; ++k) over_self({"xn:" + std::to_string(k), xn(k)});
  for (std::size_t k : {4, 6, 8}) over_self({"zn:" + std::to_string(k), zn(k)});
  const FiniteSemiring z2 = zn(2);
  for (const auto& n : trunc_poly_instances()) {
    if (n.s.order() > 16 || n.name.find("(2;") == std::string::npos) continue;
    const std::vector<elem> phi{0, 1};
    algs.emplace_back(n.name + " over zn:2", semiring_as_algebra(n.s, z2, phi));
  }
  const FiniteSemiring z4 = zn(4);
  const std::vector<elem> reduce{0, 1, 0, 1};
  algs.emplace_back("zn:2 over zn:4", semiring_as_algebra(z2, z4, reduce));
  for (const auto& [name, alg] : algs) {
    const auto scan = subsemimodule_scan(alg);
    const bool ok = verify_semialgebra(alg, 1).ok && scan.unit_or_noncancellative &&
                    !scan.has_proper_iso_copy && scan.jonsson;
    a.check(ok, [&] {
      const Named n{name, FiniteSemiring(alg.module.order(), alg.module.zero(), alg.one,
                                         std::vector<elem>(alg.module.add_table().begin(),
                                                           alg.module.add_table().end()),
                                         alg.mul)};
      return std::vector{property_witness(n, Property::condition3)};
    });
  }
}

void c24(Acc& a, const ScaleConfig& sc) {
  auto set = select(census_upto(sc.max_order), [](const Named& n) { return structure_flags(n.s).is_ring; });
  for (std::size_t k = 2; k <= 16; ++k) set.push_back({"zn:" + std::to_string(k), zn(k)});
  for (const auto& n : set)
    a.check(holds(Property::classical, n.s), [&] { return std::vector{property_witness(n, Property::classical)}; });
}

using Checker = void (*)(Acc&, const ScaleConfig&);

const std::map<std::string, Checker, std::less<>> kCheckers = {
    {"C1", c1},   {"C2", c2},   {"C3", c3},   {"C4", c4},   {"C5", c5},   {"C6", c6},
    {"C7", c7},   {"C8", c8},   {"C9", c9},   {"C10", c10}, {"C11", c11}, {"C12", c12},
    {"C13", c13}, {"C14", c14}, {"C15", c15}, {"C16", c16}, {"C17", c17}, {"C18", c18},
    {"C19", c19}, {"C20", c20}, {"C21", c21}, {"C22", c22}, {"C23", c23}, {"C24", c24},
};

json observations(const ScaleConfig& sc) {
  std::size_t checked = 0;
  std::vector<std::string> maximal_not_prime, prime_not_in_maximal, no_maximal, correspondence;
  for (const auto& n : nontrivial_census(sc)) {
    ++checked;
    const auto lat = all_ideals(n.s);
    if (lat.maximals.empty()) no_maximal.push_back(n.name);
    for (auto m : lat.maximals)
      if (std::find(lat.primes.begin(), lat.primes.end(), m) == lat.primes.end()) {
        maximal_not_prime.push_back(n.name);
        break;
      }
    for (auto p : lat.primes) {
      bool inside = false;
      for (auto m : lat.maximals) inside = inside || lat.is_subset(p, m);
      if (!inside) {
        prime_not_in_maximal.push_back(n.name);
        break;
      }
    }
    for (auto p : lat.primes) {
      const auto loc = localize_at_prime(n.s, lat.ideals[p].elements);
      std::size_t below = 0;
      for (auto q : lat.primes) below += lat.is_subset(q, p) ? 1 : 0;
      if (all_ideals(loc.localized.quotient).primes.size() != below || loc.is_local != true) {
        correspondence.push_back(n.name + " at ideal " + std::to_string(p));
      }
    }
  }
  json o;
  o["instances"] = checked;
  o["maximal_ideal_not_prime"] = maximal_not_prime;
  o["prime_not_inside_a_maximal"] = prime_not_in_maximal;
  o["no_maximal_ideal"] = no_maximal;
  o["localization_prime_count_mismatch"] = correspondence;
  return o;
}

unsigned worker_count(unsigned jobs) {
  return jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;
}

}  // namespace

std::string_view to_string(Expectation e) {
  return e == Expectation::verify ? "verify" : "report_only";
}

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::verified: return "verified";
    case ClaimStatus::counterexample: return "counterexample";
    case ClaimStatus::mixed: return "mixed";
  }
  return "verified";
}

const std::vector<Claim>& claim_registry() { return kRegistry; }

const Claim& find_claim(std::string_view id) {
  for (const auto& c : kRegistry)
    if (c.id == id) return c;
  throw input_error("claims: unknown claim id '" + std::string(id) + "'");
}

json instance_json(const std::string& name, const FiniteSemiring& s) {
  return {{"name", name}, {"semiring", to_json(s)}};
}

json witness_base(const char* kind, const std::string& name, const FiniteSemiring& s) {
  json w;
  w["kind"] = kind;
  w["instance"] = instance_json(name, s);
  return w;
}

json witness_property(const std::string& name, const FiniteSemiring& s, Property p) {
  const auto v = decide(p, s);
  json w = witness_base(v.holds ? "property_holds" : "property_fails", name, s);
  w["property"] = std::string(property_name(p));
  if (!v.holds) w["element"] = v.witnesses.front().element;
  return w;
}

json witness_axiom_violation(const std::string& name, const FiniteSemiring& s,
                             const AxiomViolation& v) {
  json w = witness_base("axiom_violation", name, s);
  w["axiom"] = v.axiom;
  w["tuple"] = v.witness;
  return w;
}

json witness_isomorphism(const std::string& name, const FiniteSemiring& s,
                         const std::string& target_name, const FiniteSemiring& target,
                         std::span<const elem> map) {
  json w = witness_base("isomorphism", name, s);
  w["target"] = instance_json(target_name, target);
  w["map"] = std::vector<elem>(map.begin(), map.end());
  return w;
}

json witness_product(const std::string& name, const FiniteSemiring& product,
                     const std::vector<std::pair<std::string, FiniteSemiring>>& factors) {
  json w = witness_base("direct_product", name, product);
  auto& f = w["factors"] = json::array();
  for (const auto& [fname, fs] : factors) f.push_back(instance_json(fname, fs));
  return w;
}

json witness_ideal_facts(const std::string& name, const FiniteSemiring& s, const IdealLattice& lat) {
  json w = witness_base("ideal_facts", name, s);
  w["ideal_count"] = lat.ideals.size();
  auto& p = w["primes"] = json::array();
  for (auto k : lat.primes) p.push_back(set_json(lat.ideals[k].elements));
  auto& m = w["maximals"] = json::array();
  for (auto k : lat.maximals) m.push_back(set_json(lat.ideals[k].elements));
  w["nilpotents"] = set_json(classify_all(s).nilpotents);
  return w;
}

json witness_ideal_semiring(const std::string& name, const FiniteSemiring& s, const IdealSemiring& id) {
  json w = witness_base("ideal_semiring", name, s);
  w["target"] = instance_json("Id(" + name + ")", id.semiring);
  auto& list = w["ideals"] = json::array();
  for (const auto& i : id.lattice.ideals) list.push_back(set_json(i.elements));
  return w;
}

json witness_total_quotient(const std::string& name, const FiniteSemiring& s, const TotalQuotient& q) {
  json w = witness_base("total_quotient", name, s);
  w["mc"] = set_json(classify_all(s).cancellative);
  w["target"] = instance_json("Q(" + name + ")", q.localized.quotient);
  w["map"] = q.localized.canonical_map;
  return w;
}

json witness_ann_ann(const std::string& name, const FiniteSemiring& s, const AnnAnnEntry& e) {
  json w = witness_base("ann_ann", name, s);
  w["element"] = e.element;
  w["ann_ann"] = set_json(e.ann_ann.elements);
  w["principal"] = set_json(e.principal.elements);
  w["equal"] = e.equal;
  return w;
}

ClaimReport run_claim(std::string_view id, const ScaleConfig& scale) {
  const Claim& c = find_claim(id);
  if (scale.max_order < 1 || scale.max_order > kCensusDefaultMaxOrder)
    throw input_error("max-order: must be between 1 and " + std::to_string(kCensusDefaultMaxOrder));
  Acc a(c.id, c.expected);
  kCheckers.find(c.id)->second(a, scale);
  return a.finish();
}

SuiteResult run_suite(const SuiteConfig& cfg) {
  std::vector<std::string> ids;
  if (cfg.claims) {
    for (const auto& id : *cfg.claims) ids.push_back(find_claim(id).id);
  } else {
    for (const auto& c : kRegistry) ids.push_back(c.id);
  }
  if (cfg.scale.max_order < 1 || cfg.scale.max_order > kCensusDefaultMaxOrder)
    throw input_error("max-order: must be between 1 and " + std::to_string(kCensusDefaultMaxOrder));

  SuiteResult r;
  r.reports.resize(ids.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < ids.size();) r.reports[k] = run_claim(ids[k], cfg.scale);
  };
  const unsigned jobs = std::min<std::size_t>(worker_count(cfg.scale.jobs), std::max<std::size_t>(ids.size(), 1));
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work);
  }
  for (const auto& rep : r.reports) {
    switch (rep.status) {
      case ClaimStatus::verified: ++r.verified; break;
      case ClaimStatus::counterexample: ++r.counterexamples; break;
      case ClaimStatus::mixed: ++r.mixed; break;
    }
    if (rep.status == ClaimStatus::counterexample && find_claim(rep.id).expected == Expectation::verify)
      ++r.expected_verify_failures;
  }
  r.observations = ids.empty() ? json::object() : observations(cfg.scale);
  return r;
}

json to_json(const ClaimReport& r) {
  const Claim& c = find_claim(r.id);
  json j;
  j["id"] = r.id;
  j["statement"] = c.statement;
  j["instance_set"] = c.instances;
  j["expected"] = std::string(to_string(c.expected));
  j["status"] = std::string(to_string(r.status));
  j["instances_checked"] = r.instances_checked;
  j["witnesses"] = r.witnesses;
  j["notes"] = r.notes;
  return j;
}

json to_json(const SuiteResult& r, const SuiteConfig& cfg) {
  json j;
  j["summary"] = {{"claims", r.reports.size()},
                  {"verified", r.verified},
                  {"counterexample", r.counterexamples},
                  {"mixed", r.mixed},
                  {"expected_verify_failures", r.expected_verify_failures},
                  {"max_order", cfg.scale.max_order}};
  auto& cl = j["claims"] = json::array();
  for (const auto& rep : r.reports) cl.push_back(to_json(rep));
  j["observations"] = r.observations;
  return j;
}

}  // namespace semiring
