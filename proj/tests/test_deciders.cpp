#include <doctest.h>

#include "oracles.hpp"
#include "semiring/census.hpp"
#include "semiring/constructions.hpp"
#include "semiring/deciders.hpp"

using namespace semiring;

namespace {

// Reference verdict computed from the definition by exhaustive scans.
bool reference(Property p, const FiniteSemiring& s) {
  const auto n = s.order();
  const auto u = oracle::units(s), z = oracle::zero_divisors(s), nil = oracle::nilpotents(s),
             mc = oracle::cancellative(s);
  auto pw = [&](elem a, std::size_t k) {
    elem r = s.one();
    for (std::size_t i = 0; i < k; ++i) r = s.mul(r, a);
    return r;
  };
  for (elem a = 0; a < n; ++a) {
    bool ok = false;
    switch (p) {
      case Property::classical: ok = u.contains(a) || z.contains(a); break;
      case Property::completely_primary: ok = u.contains(a) || nil.contains(a); break;
      case Property::pi_regular:
        for (std::size_t k = 1; k <= 2 * n && !ok; ++k)
          for (elem t = 0; t < n && !ok; ++t) ok = s.mul(pw(a, k + 1), t) == pw(a, k);
        break;
      case Property::periodic:
        for (std::size_t m = 1; m <= n + 1 && !ok; ++m)
          for (std::size_t k = m + 1; k <= n + 1 && !ok; ++k) ok = pw(a, m) == pw(a, k);
        break;
      case Property::simply_periodic:
        for (std::size_t k = 2; k <= n + 1 && !ok; ++k) ok = pw(a, k) == a;
        break;
      case Property::mult_idempotent: ok = s.mul(a, a) == a; break;
      case Property::complemented:
        for (elem t = 0; t < n && !ok; ++t) ok = s.mul(a, t) == s.zero() && s.add(a, t) == s.one();
        break;
      case Property::nilpotent_free: ok = a == s.zero() || !nil.contains(a); break;
      case Property::condition3: ok = u.contains(a) || !mc.contains(a); break;
      case Property::entire: ok = a == s.zero() || !z.contains(a); break;
    }
    if (!ok) return false;
  }
  return true;
}

std::vector<FiniteSemiring> census_upto4() {
  std::vector<FiniteSemiring> all;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& s : census_classes(n)) all.push_back(s);
  return all;
}

const Evidence& evidence_for(const PropertyVerdict& v, elem e) {
  for (const auto& w : v.witnesses)
    if (w.element == e) return w;
  FAIL("no evidence for element " << e);
  return v.witnesses.front();
}

}  // namespace

TEST_SUITE("deciders") {
  TEST_CASE("property names") {
    for (auto p : kAllProperties) CHECK(parse_property(property_name(p)) == p);
    CHECK(parse_property("condition3") == Property::condition3);
    CHECK_THROWS_AS(parse_property("noetherian"), input_error);
  }

  TEST_CASE("chains are condition3 but not classical") {
    for (std::size_t k = 3; k <= 8; ++k) {
      const auto c = chain(k);
      const auto v = decide(Property::classical, c);
      CHECK_FALSE(v.holds);
      REQUIRE(v.witnesses.size() == 1);
      CHECK(v.witnesses.front().element == 1);
      CHECK(decide(Property::condition3, c).holds);
      CHECK(replay(c, v));
    }
  }

  TEST_CASE("complements in B x B") {
    const auto b = boolean_semiring();
    const auto bb = direct_product(b, b);
    const auto v = decide(Property::complemented, bb);
    REQUIRE(v.holds);
    for (elem a = 0; a < 4; ++a) {
      const auto& w = evidence_for(v, a);
      CHECK(w.kind == "complement");
      // mixed radix: index 2x + y is (x, y); the complement flips both bits
      CHECK(w.values == std::vector<std::int64_t>{3 - a});
    }
  }

  TEST_CASE("completely primary examples") {
    for (std::size_t n : {2, 3, 4, 8, 9, 16, 25, 27}) CHECK(decide(Property::completely_primary, zn(n)).holds);
    const auto v = decide(Property::completely_primary, hu_semiring());
    CHECK_FALSE(v.holds);
    CHECK(v.witnesses.front().element == 1);
    CHECK_FALSE(decide(Property::completely_primary, zn(6)).holds);
  }

  TEST_CASE("pi-regular witness in X_2") {
    const auto x2 = xn(2);
    const auto v = decide(Property::pi_regular, x2);
    REQUIRE(v.holds);
    // element 1 is index 2; the identity 0 is index 1
    const auto& w = evidence_for(v, 2);
    CHECK(w.kind == "pi_regular");
    CHECK(w.values == std::vector<std::int64_t>{2, 1});
    CHECK(replay(x2, v));
  }

  TEST_CASE("classical products") {
    CHECK(decide(Property::classical, direct_product(zn(4), boolean_semiring())).holds);
    CHECK(decide(Property::classical, boolean_semiring()).holds);
    for (std::size_t n = 1; n <= 16; ++n) CHECK(decide(Property::classical, zn(n)).holds);
    for (const auto& s : {hu_semiring(), lagrassa_semiring(), xn(1), xn(5)})
      CHECK_FALSE(decide(Property::classical, s).holds);
  }

  TEST_CASE("holds_at matches the verdict") {
    for (const auto& s : {hu_semiring(), xn(3), zn(12), chain(4), adjoin_zero(zn(4))})
      for (auto p : kAllProperties) {
        const auto v = decide(p, s);
        bool all = true;
        for (elem a = 0; a < s.order(); ++a) all = all && holds_at(p, s, a);
        CHECK(all == v.holds);
        if (!v.holds) CHECK_FALSE(holds_at(p, s, v.witnesses.front().element));
      }
  }

  TEST_CASE("tampered evidence fails replay") {
    const auto z6 = zn(6);
    auto v = decide(Property::classical, z6);
    REQUIRE(v.holds);
    CHECK(replay(z6, v));
    for (auto& w : v.witnesses)
      if (w.kind == "unit") {
        w.values = {0};
        break;
      }
    CHECK_FALSE(replay(z6, v));
    auto f = decide(Property::classical, hu_semiring());
    f.witnesses.front().element = 2;
    CHECK_FALSE(replay(hu_semiring(), f));
  }

  TEST_CASE("verdicts agree with the definitions across the census") {
    for (const auto& s : census_upto4())
      for (auto p : kAllProperties) {
        const auto v = decide(p, s);
        CHECK(v.holds == reference(p, s));
        CHECK(replay(s, v));
      }
  }

  TEST_CASE("implication chains across the census") {
    for (const auto& s : census_upto4()) {
      auto h = [&](Property p) { return decide(p, s).holds; };
      if (h(Property::completely_primary)) CHECK(h(Property::classical));
      if (h(Property::classical)) CHECK(h(Property::condition3));
      if (h(Property::mult_idempotent)) CHECK(h(Property::simply_periodic));
      if (h(Property::simply_periodic)) CHECK(h(Property::periodic));
      if (h(Property::periodic)) CHECK(h(Property::pi_regular));
      if (h(Property::pi_regular)) CHECK(h(Property::condition3));
      CHECK(h(Property::pi_regular));
      const auto c = classify_all(s);
      CHECK(h(Property::classical) == ((c.units | c.zero_divisors) == ElementSet::full(s.order())));
    }
  }

  TEST_CASE("non-reversibility witnesses") {
    const auto c3 = chain(3);
    CHECK(decide(Property::condition3, c3).holds);
    CHECK_FALSE(decide(Property::classical, c3).holds);
    const auto p = direct_product(zn(4), zn(9));
    CHECK(decide(Property::classical, p).holds);
    CHECK_FALSE(decide(Property::completely_primary, p).holds);
  }
}
