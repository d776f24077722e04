#include <doctest.h>

#include "oracles.hpp"
#include "semiring/census.hpp"
#include "semiring/codec.hpp"
#include "semiring/constructions.hpp"
#include "semiring/core.hpp"

using namespace semiring;

namespace {

std::set<elem> as_set(const ElementSet& e) {
  const auto v = e.elements();
  return {v.begin(), v.end()};
}

std::vector<FiniteSemiring> census_upto4() {
  std::vector<FiniteSemiring> all;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& s : census_classes(n)) all.push_back(s);
  return all;
}

}  // namespace

TEST_SUITE("core") {
  TEST_CASE("table shape errors name the offending cell") {
    CHECK_THROWS_WITH_AS(FiniteSemiring(2, 0, 1, {0, 1, 1}, {0, 0, 0, 1}), doctest::Contains("add"),
                         input_error);
    CHECK_THROWS_WITH_AS(FiniteSemiring(3, 0, 1, {0, 1, 2, 1, 1, 3, 2, 2, 2}, std::vector<elem>(9, 0)),
                         doctest::Contains("add[1][2]"), input_error);
    CHECK_THROWS_AS(FiniteSemiring(2, 2, 1, {0, 1, 1, 1}, {0, 0, 0, 1}), input_error);
    CHECK_THROWS_AS(FiniteSemiring(0, 0, 0, {}, {}), input_error);
  }

  TEST_CASE("axioms accept Hu and the trivial semiring") {
    CHECK(verify_axioms(hu_semiring()).ok);
    const FiniteSemiring trivial(1, 0, 0, {0}, {0});
    CHECK(verify_axioms(trivial).ok);
  }

  TEST_CASE("literal B(3,1) fails add associativity at (1,1,2)") {
    const auto s = bni(3, 1, BniInterpretation::literal_mod);
    const auto r = verify_axioms(s);
    REQUIRE_FALSE(r.ok);
    const AxiomViolation expected{"add_associative", {1, 1, 2}};
    CHECK(r.violations.front() == expected);
    CHECK(violation_reproduces(s, expected));
    CHECK_FALSE(oracle::is_semiring(s));
  }

  TEST_CASE("violation cap truncates") {
    const FiniteSemiring bad(3, 0, 1, std::vector<elem>(9, 0), std::vector<elem>(9, 0));
    const auto r = verify_axioms(bad, 2);
    CHECK_FALSE(r.ok);
    CHECK(r.violations.size() == 2);
    CHECK(r.truncated);
    for (const auto& v : r.violations) CHECK(violation_reproduces(bad, v));
  }

  TEST_CASE("verify_axioms agrees with the brute-force oracle on the order 3 table space") {
    // Every pair of tables with forced identity rows; includes many invalid ones.
    std::size_t agree = 0, checked = 0;
    const std::size_t n = 3;
    std::vector<elem> add(9), mul(9);
    for (elem a = 0; a < n; ++a) {
      add[a] = add[a * n] = a;
      mul[n + a] = mul[a * n + 1] = a;
    }
    for (int code = 0; code < 81 * 81; code += 7) {
      int c = code;
      for (std::size_t cell : {4, 5, 7, 8}) {
        add[cell] = static_cast<elem>(c % 3);
        c /= 3;
      }
      for (std::size_t cell : {0, 2, 6, 8}) {
        mul[cell] = static_cast<elem>(c % 3);
        c /= 3;
      }
      const FiniteSemiring s(n, 0, 1, add, mul);
      ++checked;
      if (verify_axioms(s).ok == oracle::is_semiring(s)) ++agree;
    }
    CHECK(agree == checked);
  }

  TEST_CASE("classify_all on Z_6 and X_2") {
    const auto z6 = classify_all(zn(6));
    CHECK(as_set(z6.units) == std::set<elem>{1, 5});
    CHECK(as_set(z6.zero_divisors) == std::set<elem>{0, 2, 3, 4});
    CHECK(as_set(z6.nilpotents) == std::set<elem>{0});
    const auto x2s = xn(2);
    const auto x2 = classify_all(x2s);
    // index 0 is -inf, index 1 is the element 0
    CHECK(as_set(x2.units) == std::set<elem>{1});
    CHECK(as_set(x2.zero_divisors) == std::set<elem>{0});
    CHECK(x2s.label(1) == "0");
    CHECK(x2s.label(0) == "-inf");
  }

  TEST_CASE("Hu: u is neither unit nor zero-divisor") {
    const auto c = classify_all(hu_semiring());
    CHECK_FALSE(c.units.contains(1));
    CHECK_FALSE(c.zero_divisors.contains(1));
  }

  TEST_CASE("structure flags") {
    const auto b = structure_flags(boolean_semiring());
    CHECK_FALSE(b.is_ring);
    CHECK(b.is_add_idempotent);
    CHECK(b.is_entire);
    const auto z4 = structure_flags(zn(4));
    CHECK(z4.is_ring);
    CHECK_FALSE(z4.is_entire);
    const auto az = structure_flags(adjoin_zero(zn(4)));
    CHECK(az.is_entire);
    CHECK_FALSE(az.is_ring);
  }

  TEST_CASE("isomorphism search") {
    const auto b = boolean_semiring();
    const auto id = find_isomorphism(b, b);
    REQUIRE(id);
    CHECK(*id == std::vector<elem>{0, 1});
    CHECK(find_isomorphism(bni(2, 1, BniInterpretation::canonical_congruence), b));
    CHECK_FALSE(find_isomorphism(zn(2), b));
    CHECK(find_isomorphism(direct_product(zn(2), zn(3)), zn(6)));
  }

  TEST_CASE("find_isomorphism matches the permutation oracle on census pairs") {
    const auto& c3 = census_classes(3);
    const auto& c4 = census_classes(4);
    for (const auto* cls : {&c3, &c4})
      for (std::size_t i = 0; i < cls->size(); ++i)
        for (std::size_t j = 0; j < cls->size(); ++j) {
          const auto f = find_isomorphism((*cls)[i], (*cls)[j]);
          CHECK(f.has_value() == oracle::isomorphism((*cls)[i], (*cls)[j]).has_value());
          if (f) {
            CHECK(is_isomorphism((*cls)[i], (*cls)[j], *f));
            std::vector<elem> inv(f->size());
            for (elem a = 0; a < f->size(); ++a) inv[(*f)[a]] = a;
            CHECK(is_isomorphism((*cls)[j], (*cls)[i], inv));
          }
        }
  }

  TEST_CASE("relabel yields an isomorphic copy") {
    const auto s = xn(3);
    const std::vector<elem> perm{4, 2, 0, 1, 3};
    const auto r = relabel(s, perm);
    CHECK(is_isomorphism(s, r, perm));
    CHECK(verify_axioms(r).ok);
  }

  TEST_CASE("encode of the Boolean semiring") {
    const FiniteSemiring b(2, 0, 1, {0, 1, 1, 1}, {0, 0, 0, 1});
    CHECK(encode(b) == R"({"order":2,"zero":0,"one":1,"add":[[0,1],[1,1]],"mul":[[0,0],[0,1]]})");
  }

  TEST_CASE("encode round trip") {
    for (const auto& s : {hu_semiring(), lagrassa_semiring(), xn(3), zn(5), chain(4)}) {
      const auto text = encode(s);
      const auto back = decode(text);
      CHECK(back == s);
      CHECK(encode(back) == text);
    }
  }

  TEST_CASE("decode gives positioned diagnostics") {
    CHECK_THROWS_WITH_AS(
        decode(R"({"order":3,"zero":0,"one":1,"add":[[0,1,2],[1,1,3],[2,2,2]],"mul":[[0,0,0],[0,1,2],[0,2,2]]})"),
        doctest::Contains("add[1][2]"), input_error);
    CHECK_THROWS_WITH_AS(decode(R"({"order":2,"zero":0,"one":1,"add":[[0,1],[1]],"mul":[[0,0],[0,1]]})"),
                         doctest::Contains("add[1]"), input_error);
    CHECK_THROWS_WITH_AS(decode(R"({"order":2,"zero":0,"one":1,"add":[[0,1],[1,1]]})"),
                         doctest::Contains("mul"), input_error);
    CHECK_THROWS_AS(decode("{not json"), input_error);
  }

  TEST_CASE("classification agrees with brute force over the order <= 4 census") {
    for (const auto& s : census_upto4()) {
      const auto c = classify_all(s);
      CHECK(as_set(c.units) == oracle::units(s));
      CHECK(as_set(c.zero_divisors) == oracle::zero_divisors(s));
      CHECK(as_set(c.nilpotents) == oracle::nilpotents(s));
      CHECK(as_set(c.cancellative) == oracle::cancellative(s));
      // disjoint, and cancellative elements are exactly the units
      CHECK((c.units & c.zero_divisors).empty());
      CHECK(c.cancellative == c.units);
      for (const auto& p : c.profiles) {
        CHECK(p.is_zero_divisor == !p.is_regular);
        CHECK_FALSE((p.is_unit && p.is_zero_divisor));
        if (p.is_nilpotent && s.order() > 1) CHECK(p.is_zero_divisor);
        if (p.is_cancellative) CHECK(p.is_regular);
        std::size_t inverses = 0;
        for (elem t = 0; t < s.order(); ++t) inverses += s.mul(p.element, t) == s.one() ? 1 : 0;
        CHECK(inverses == (p.is_unit ? 1u : 0u));
        if (p.inverse) CHECK(s.mul(p.element, *p.inverse) == s.one());
        if (p.annihilated) CHECK(s.mul(p.element, *p.annihilated) == s.zero());
        if (p.nilpotency_exponent) CHECK(s.power(p.element, *p.nilpotency_exponent) == s.zero());
        if (p.cancellation_failure)
          CHECK(s.mul(p.element, p.cancellation_failure->first) ==
                s.mul(p.element, p.cancellation_failure->second));
      }
    }
  }
}
