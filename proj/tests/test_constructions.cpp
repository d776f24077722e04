#include <doctest.h>

#include "oracles.hpp"
#include "semiring/constructions.hpp"
#include "semiring/deciders.hpp"

using namespace semiring;

namespace {

std::set<elem> as_set(const ElementSet& e) {
  const auto v = e.elements();
  return {v.begin(), v.end()};
}

// Reduction of a natural number into B(n,i) under the quotient of N by i ~ n.
std::size_t fold(std::size_t x, std::size_t n, std::size_t i) {
  return x < n ? x : i + (x - i) % (n - i);
}

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("family spec parsing") {
    const auto spec = parse_family_spec("bni:4,1,literal");
    CHECK(spec.family == Family::bni);
    CHECK(spec.params == std::vector<long>{4, 1});
    CHECK(spec.bni_interpretation == BniInterpretation::literal_mod);
    CHECK(parse_family_spec("bni:4,1").bni_interpretation == BniInterpretation::canonical_congruence);
    CHECK(parse_family_spec("hu").family == Family::hu);
    CHECK(parse_family_spec(to_string(parse_family_spec("chain:5"))).params == std::vector<long>{5});
    CHECK_THROWS_AS(parse_family_spec("frobnicate:2"), input_error);
    CHECK_THROWS_AS(parse_family_spec("zn:x"), input_error);
    CHECK_THROWS_AS(parse_family_spec("bni:4,1,weird"), input_error);
    CHECK_THROWS_AS(construct_named(parse_family_spec("bni:3,3")), input_error);
    CHECK_THROWS_AS(construct_named(parse_family_spec("zn:5000")), size_error);
    CHECK_THROWS_AS(construct_named(parse_family_spec("zn:10"), 8), size_error);
  }

  TEST_CASE("named families satisfy the axioms") {
    for (const char* text : {"boolean", "hu", "lagrassa", "chain:2", "chain:8", "xn:1", "xn:5", "zn:1", "zn:64",
                             "bni:8,3"}) {
      const auto c = construct_named(parse_family_spec(text));
      INFO(text);
      CHECK(c.axioms.ok);
      CHECK(oracle::is_semiring(c.semiring));
    }
  }

  TEST_CASE("literal B(n,i) failure is data") {
    const auto c = construct_named(parse_family_spec("bni:3,1,literal"));
    CHECK_FALSE(c.axioms.ok);
    CHECK(c.axioms.violations.front().axiom == "add_associative");
  }

  TEST_CASE("B(n,0) is Z_n") {
    for (std::size_t n = 2; n <= 8; ++n) {
      CHECK(find_isomorphism(bni(n, 0, BniInterpretation::canonical_congruence), zn(n)));
      CHECK(find_isomorphism(bni(n, 0, BniInterpretation::literal_mod), zn(n)));
    }
  }

  TEST_CASE("canonical B(n,i) matches the congruence quotient of N") {
    for (std::size_t n = 2; n <= 8; ++n)
      for (std::size_t i = 0; i < n; ++i) {
        const auto s = bni(n, i, BniInterpretation::canonical_congruence);
        CHECK(oracle::is_semiring(s));
        for (elem a = 0; a < n; ++a)
          for (elem b = 0; b < n; ++b) {
            CHECK(s.add(a, b) == fold(a + b, n, i));
            CHECK(s.mul(a, b) == fold(a * b, n, i));
          }
      }
    const auto b31 = bni(3, 1, BniInterpretation::canonical_congruence);
    CHECK(b31.mul(2, 2) == 2);
  }

  TEST_CASE("Hu tables") {
    const auto h = hu_semiring();
    CHECK(h.order() == 3);
    CHECK(h.zero() == 0);
    CHECK(h.one() == 2);
    CHECK(h.add(2, 2) == 1);
    CHECK(h.add(1, 2) == 2);
    CHECK(h.mul(1, 2) == 1);
    CHECK(h.mul(1, 1) == 1);
  }

  TEST_CASE("direct products") {
    const auto b = boolean_semiring();
    const auto bb = direct_product(b, b);
    CHECK(bb.order() == 4);
    CHECK(decide(Property::complemented, bb).holds);
    CHECK(decide(Property::classical, bb).holds);
    const auto f = find_isomorphism(direct_product(zn(2), zn(3)), zn(6));
    REQUIRE(f);
    CHECK(is_isomorphism(direct_product(zn(2), zn(3)), zn(6), *f));
    const std::vector<FiniteSemiring> one{hu_semiring()};
    CHECK(find_isomorphism(direct_product(one), hu_semiring()));
    const std::vector<FiniteSemiring> many(13, b);
    CHECK_THROWS_AS(direct_product(many), size_error);
    CHECK(direct_product(zn(2), zn(3)).label(5) == "(1,2)");
  }

  TEST_CASE("adjoin_zero") {
    const auto s = adjoin_zero(zn(4));
    CHECK(s.order() == 5);
    CHECK(s.zero() == 4);
    CHECK(oracle::is_semiring(s));
    CHECK(structure_flags(s).is_entire);
    CHECK_FALSE(oracle::units(s).contains(2));
    CHECK_FALSE(oracle::zero_divisors(s).contains(2));
    const auto c = classify_all(adjoin_zero(zn(2)));
    CHECK(as_set(c.units) == std::set<elem>{1});
    CHECK_THROWS_AS(adjoin_zero(boolean_semiring()), input_error);
  }

  TEST_CASE("dual numbers over Z_4") {
    const auto s = dual_numbers(zn(4), 1);
    CHECK(s.order() == 16);
    CHECK(oracle::is_semiring(s));
    CHECK(decide(Property::classical, s).holds);
    // 1 + 2e is index 1*4 + 2
    const elem x = 6;
    CHECK(s.mul(x, x) == s.one());
    CHECK(dual_numbers(zn(2), 2).order() == 8);
    CHECK_THROWS_AS(dual_numbers(boolean_semiring(), 1), input_error);
  }

  TEST_CASE("truncated polynomial rings") {
    const std::vector<std::size_t> e1{2};
    const auto f2x = trunc_poly_ring(2, e1);
    CHECK(f2x.order() == 4);
    CHECK(oracle::units(f2x) == std::set<elem>{1, 3});
    CHECK(f2x.label(3) == "1+x");
    const std::vector<std::size_t> e22{2, 2};
    const auto r = trunc_poly_ring(2, e22);
    CHECK(r.order() == 16);
    CHECK(oracle::is_semiring(r));
    CHECK(decide(Property::completely_primary, r).holds);
    const std::vector<std::size_t> e0{1};
    for (std::size_t p : {2, 3, 5, 7}) CHECK(find_isomorphism(trunc_poly_ring(p, e0), zn(p)));
    const std::vector<std::size_t> e3{3};
    CHECK(find_isomorphism(trunc_poly_ring(3, e1), dual_numbers(zn(3), 1)));
    CHECK(trunc_poly_ring(2, std::vector<std::size_t>{8}).order() == 256);
    CHECK(oracle::is_semiring(trunc_poly_ring(2, e3)));
    CHECK_THROWS_AS(trunc_poly_ring(4, e1), input_error);
  }

  TEST_CASE("nilpotent monoid semirings") {
    const auto s0 = nilpotent_monoid_semiring(free_semilattice(0));
    CHECK(find_isomorphism(s0, boolean_semiring()));
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto s = nilpotent_monoid_semiring(free_semilattice(k));
      CHECK(s.order() == (std::size_t{1} << k) + 1);
      CHECK(oracle::is_semiring(s));
      CHECK(decide(Property::completely_primary, s).holds);
      CHECK_FALSE(structure_flags(s).is_ring);
      for (elem p = 0; p + 1 < s.order(); ++p) CHECK(s.mul(p, p) == s.zero());
    }
    MonoidTable bad{2, 0, {0, 1, 1, 0}};
    CHECK_THROWS_AS(nilpotent_monoid_semiring(bad), input_error);
  }
}
