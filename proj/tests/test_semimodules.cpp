#include <doctest.h>

#include "oracles.hpp"
#include "semiring/constructions.hpp"
#include "semiring/deciders.hpp"
#include "semiring/semimodules.hpp"

using namespace semiring;

namespace {

std::set<elem> as_set(const ElementSet& e) {
  const auto v = e.elements();
  return {v.begin(), v.end()};
}

// Subsets containing zero and closed under addition and the action.
std::set<std::set<elem>> subset_submodules(const FiniteSemimodule& m) {
  std::set<std::set<elem>> out;
  const auto k = m.order();
  for (oracle::Mask mask = 1; mask < (oracle::Mask{1} << k); ++mask) {
    bool ok = oracle::in(mask, m.zero());
    for (elem x = 0; x < k && ok; ++x) {
      if (!oracle::in(mask, x)) continue;
      for (elem y = 0; y < k && ok; ++y)
        if (oracle::in(mask, y)) ok = oracle::in(mask, m.add(x, y));
      for (elem s = 0; s < m.base().order() && ok; ++s) ok = oracle::in(mask, m.act(s, x));
    }
    if (ok) out.insert(oracle::members(mask, k));
  }
  return out;
}

FiniteSemiring f2_dual() { return trunc_poly_ring(2, std::vector<std::size_t>{2}); }

}  // namespace

TEST_SUITE("semimodules") {
  TEST_CASE("shape errors") {
    const auto b = boolean_semiring();
    CHECK_THROWS_AS(FiniteSemimodule(b, 2, 0, {0, 1, 1}, {0, 0, 0, 1}), input_error);
    CHECK_THROWS_AS(FiniteSemimodule(b, 2, 0, {0, 1, 1, 0}, {0, 0, 0, 2}), input_error);
    CHECK_THROWS_AS(FiniteSemimodule(b, 2, 2, {0, 1, 1, 0}, {0, 0, 0, 1}), input_error);
  }

  TEST_CASE("semimodule axioms") {
    for (const auto& s : {zn(4), hu_semiring(), xn(2), boolean_semiring()}) {
      CHECK(verify_semimodule(regular_module(s)).ok);
      CHECK(verify_semimodule(trivial_module(s)).ok);
    }
    // Z_2 with the Boolean semiring acting by 1.m = m and 0.m = 0
    const FiniteSemimodule bad(boolean_semiring(), 2, 0, {0, 1, 1, 0}, {0, 0, 0, 1});
    const auto r = verify_semimodule(bad);
    REQUIRE_FALSE(r.ok);
    const AxiomViolation expected{"scalar_add", {1, 1, 1}};
    CHECK(r.violations.front() == expected);
  }

  TEST_CASE("additively invertible elements") {
    CHECK(v_set(regular_module(zn(4))).size() == 4);
    CHECK(as_set(v_set(regular_module(boolean_semiring()))) == std::set<elem>{0});
    CHECK(v_set(trivial_module(hu_semiring())).size() == 1);
  }

  TEST_CASE("expectation semirings") {
    const auto z2 = zn(2);
    const auto e = expectation_semiring(z2, regular_module(z2));
    CHECK(e.order() == 4);
    CHECK(find_isomorphism(e, f2_dual()));
    for (const auto& s : {hu_semiring(), zn(4), chain(3)})
      CHECK(find_isomorphism(expectation_semiring(s, trivial_module(s)), s));

    const auto z4 = zn(4);
    const auto ez = expectation_semiring(z4, regular_module(z4));
    CHECK(oracle::is_semiring(ez));
    CHECK(decide(Property::classical, ez).holds);
    std::set<elem> want;
    for (elem u : {1, 3})
      for (elem x = 0; x < 4; ++x) want.insert(u * 4 + x);
    CHECK(oracle::units(ez) == want);
    CHECK_THROWS_AS(expectation_semiring(z4, regular_module(z2)), input_error);
    CHECK_THROWS_AS(expectation_semiring(z4, regular_module(z4), 8), size_error);
  }

  TEST_CASE("restriction of scalars") {
    // F_2[x]/(x^2) over Z_2 through the inclusion 0 -> 0, 1 -> 1
    const std::vector<elem> incl{0, 1};
    const auto a = semiring_as_algebra(f2_dual(), zn(2), incl);
    CHECK(verify_semialgebra(a).ok);
    const auto scan = subsemimodule_scan(a);
    CHECK_FALSE(scan.has_proper_iso_copy);
    CHECK(scan.jonsson);
    CHECK(scan.unit_or_noncancellative);

    // Z_4 admits no Z_2-action through a unital map: 1+1 = 0 in Z_2 but 1+1 = 2 in Z_4.
    const auto z4_over_z2 = restrict_scalars(zn(4), zn(2), incl);
    CHECK_FALSE(verify_semimodule(z4_over_z2).ok);
    // Reduction Z_4 -> Z_2 makes Z_2 a Z_4-algebra.
    const std::vector<elem> reduce{0, 1, 0, 1};
    CHECK(verify_semialgebra(semiring_as_algebra(zn(2), zn(4), reduce)).ok);
  }

  TEST_CASE("Hu and the trivial algebra") {
    const auto hu = hu_semiring();
    const std::vector<elem> id{0, 1, 2};
    const auto scan = subsemimodule_scan(semiring_as_algebra(hu, hu, id));
    CHECK(scan.unit_or_noncancellative);
    const auto& u = scan.elements.at(1);
    CHECK_FALSE(u.is_unit);
    REQUIRE(u.cancellation_failure);
    CHECK(hu.mul(1, u.cancellation_failure->first) == hu.mul(1, u.cancellation_failure->second));

    const FiniteSemiring trivial(1, 0, 0, {0}, {0});
    const std::vector<elem> zero{0};
    const auto t = subsemimodule_scan(semiring_as_algebra(trivial, trivial, zero));
    CHECK(t.jonsson);
    CHECK_FALSE(t.has_proper_iso_copy);
    CHECK(t.unit_or_noncancellative);
  }

  TEST_CASE("subsemimodule scan agrees with subset enumeration") {
    std::vector<FiniteSemialgebra> algs;
    for (const auto& s : {zn(4), hu_semiring(), chain(4), xn(2), f2_dual(), zn(6)}) {
      std::vector<elem> id(s.order());
      for (elem a = 0; a < s.order(); ++a) id[a] = a;
      algs.push_back(semiring_as_algebra(s, s, id));
    }
    const std::vector<elem> incl{0, 1};
    algs.push_back(semiring_as_algebra(f2_dual(), zn(2), incl));
    algs.push_back(semiring_as_algebra(direct_product(zn(2), zn(2)), zn(2), std::vector<elem>{0, 3}));
    for (const auto& a : algs) {
      REQUIRE(verify_semialgebra(a).ok);
      const auto scan = subsemimodule_scan(a);
      std::set<std::set<elem>> got;
      for (const auto& e : scan.subsemimodules) got.insert(as_set(e));
      CHECK(got == subset_submodules(a.module));
      CHECK(scan.jonsson);
      CHECK(scan.unit_or_noncancellative);
    }
  }

  TEST_CASE("semimodule isomorphism and generation") {
    const auto z4 = zn(4);
    const auto m = regular_module(z4);
    const auto f = find_semimodule_isomorphism(m, m);
    REQUIRE(f);
    CHECK(*f == std::vector<elem>{0, 1, 2, 3});
    CHECK_FALSE(find_semimodule_isomorphism(m, trivial_module(z4)));
    CHECK(as_set(subsemimodule_generated_by(m, ElementSet::of(4, {2}))) == std::set<elem>{0, 2});
    // Z_2 x Z_2 over Z_2: swapping the factors is a module automorphism
    const auto v = restrict_scalars(direct_product(zn(2), zn(2)), zn(2), std::vector<elem>{0, 3});
    CHECK(find_semimodule_isomorphism(v, v));
  }

  TEST_CASE("semimodule file form round trip") {
    const auto m = regular_module(hu_semiring());
    const auto back = semimodule_from_json(nlohmann::json::parse(to_json(m).dump()));
    CHECK(back.base() == m.base());
    CHECK(std::vector<elem>(back.action_table().begin(), back.action_table().end()) ==
          std::vector<elem>(m.action_table().begin(), m.action_table().end()));
    auto j = nlohmann::json::parse(to_json(m).dump());
    j["action"][1][2] = 7;
    CHECK_THROWS_WITH_AS(semimodule_from_json(j), doctest::Contains("action[1][2]"), input_error);
  }
}
