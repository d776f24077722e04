#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "semiring/census.hpp"
#include "semiring/codec.hpp"
#include "semiring/constructions.hpp"
#include "semiring/deciders.hpp"

using namespace semiring;

namespace {

// Commutative associative tables on {0..n-1} with the given identity (and absorbing element).
std::vector<std::vector<elem>> brute_monoid_tables(std::size_t n, elem id, std::optional<elem> absorbing) {
  std::vector<elem> t(n * n);
  std::vector<std::size_t> free;
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b) {
      if (a == id) t[a * n + b] = b;
      else if (b == id) t[a * n + b] = a;
      else if (absorbing && (a == *absorbing || b == *absorbing)) t[a * n + b] = *absorbing;
      else free.push_back(a * n + b);
    }
  std::vector<std::vector<elem>> out;
  const auto cells = free.size();
  std::size_t total = 1;
  for (std::size_t k = 0; k < cells; ++k) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (auto cell : free) {
      t[cell] = static_cast<elem>(c % n);
      c /= n;
    }
    bool ok = true;
    for (elem a = 0; a < n && ok; ++a)
      for (elem b = 0; b < n && ok; ++b) {
        ok = t[a * n + b] == t[b * n + a];
        for (elem d = 0; d < n && ok; ++d) ok = t[t[a * n + b] * n + d] == t[a * n + t[b * n + d]];
      }
    if (ok) out.push_back(t);
  }
  return out;
}

std::size_t brute_monoids(std::size_t n, elem id, std::optional<elem> absorbing) {
  return brute_monoid_tables(n, id, absorbing).size();
}

std::filesystem::path scratch(const char* name) {
  auto dir = std::filesystem::temp_directory_path() / "semiring_census_test";
  std::filesystem::create_directories(dir);
  auto p = dir / name;
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST_SUITE("census") {
  TEST_CASE("order bounds") {
    CHECK_THROWS_AS(enumerate_semirings(0), input_error);
    CHECK_THROWS_AS(enumerate_semirings(6), size_error);
    CensusOptions o;
    CHECK_THROWS_AS(enumerate_semirings(5, o), size_error);
  }

  TEST_CASE("monoid enumeration matches brute force") {
    for (std::size_t n = 1; n <= 4; ++n) {
      CHECK(enumerate_comm_monoids(n, 0, std::nullopt).size() == brute_monoids(n, 0, std::nullopt));
      if (n >= 2) CHECK(enumerate_comm_monoids(n, 1, elem{0}).size() == brute_monoids(n, 1, elem{0}));
    }
  }

  TEST_CASE("orders 1 and 2") {
    CHECK(enumerate_semirings(1).size() == 1);
    CensusOptions iso;
    iso.up_to_iso = true;
    const auto two = enumerate_semirings(2, iso);
    REQUIRE(two.size() == 2);
    const bool zb = find_isomorphism(two[0], zn(2)) && find_isomorphism(two[1], boolean_semiring());
    const bool bz = find_isomorphism(two[1], zn(2)) && find_isomorphism(two[0], boolean_semiring());
    CHECK((zb || bz));
    const auto rec = census_stats(2);
    CHECK(rec.iso_classes == 2);
    CHECK(rec.per_property.at("classical") == 2);
    CHECK(rec.per_property.at("completely_primary") == 2);
    const auto r1 = census_stats(1);
    for (const auto& [name, count] : r1.per_property) CHECK(count == 1);
  }

  TEST_CASE("pruned enumerator agrees with the naive full scan for n <= 3") {
    for (std::size_t n = 1; n <= 3; ++n) {
      INFO("order " << n);
      CHECK(enumerate_semirings(n).size() == oracle::naive_census_count(n));
    }
    CHECK(oracle::naive_census_count(3) == 6);
  }

  TEST_CASE("order 4 raw count from brute-force monoids and the full axiom oracle") {
    const auto adds = brute_monoid_tables(4, 0, std::nullopt);
    const auto muls = brute_monoid_tables(4, 1, elem{0});
    std::size_t count = 0;
    for (const auto& a : adds)
      for (const auto& m : muls) count += oracle::is_semiring(4, 0, 1, a, m) ? 1 : 0;
    CHECK(count == 69);
    CHECK(enumerate_semirings(4).size() == count);
  }

  TEST_CASE("every raw table passes the axioms and has zero 0, one 1") {
    for (std::size_t n = 2; n <= 4; ++n)
      for (const auto& s : enumerate_semirings(n)) {
        CHECK(s.zero() == 0);
        CHECK(s.one() == 1);
        CHECK(oracle::is_semiring(s));
      }
  }

  TEST_CASE("golden counts") {
    const auto r3 = census_stats(3);
    CHECK(r3.total_tables == 6);
    CHECK(r3.iso_classes == 6);
    const std::map<std::string, std::size_t> g3{
        {"classical", 2},     {"complemented", 0},       {"completely_primary", 2}, {"condition3_unit_or_noncancellative", 6},
        {"entire", 5},        {"mult_idempotent", 4},    {"nilpotent_free", 5},     {"periodic", 6},
        {"pi_regular", 6},    {"simply_periodic", 5}};
    CHECK(r3.per_property == g3);

    const auto r4 = census_stats(4);
    CHECK(r4.total_tables == 69);
    CHECK(r4.iso_classes == 36);
    const std::map<std::string, std::size_t> g4{
        {"classical", 10},    {"complemented", 3},       {"completely_primary", 5}, {"condition3_unit_or_noncancellative", 36},
        {"entire", 21},       {"mult_idempotent", 15},   {"nilpotent_free", 24},    {"periodic", 36},
        {"pi_regular", 36},   {"simply_periodic", 19}};
    CHECK(r4.per_property == g4);
    CHECK(r4.representatives.size() == 36);
  }

  TEST_CASE("golden per-property counts match an independent recount") {
    for (std::size_t n = 2; n <= 4; ++n) {
      const auto rec = census_stats(n);
      for (auto p : kAllProperties) {
        std::size_t c = 0;
        for (const auto& s : rec.representatives) c += decide(p, s).holds ? 1 : 0;
        CHECK(rec.per_property.at(std::string(property_name(p))) == c);
      }
    }
  }

  TEST_CASE("dedup is sound and complete") {
    for (std::size_t n = 2; n <= 4; ++n) {
      const auto& reps = census_classes(n);
      for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(oracle::isomorphism(reps[i], reps[j]));
      for (const auto& s : enumerate_semirings(n)) {
        std::size_t matches = 0;
        for (const auto& r : reps) matches += find_isomorphism(s, r) ? 1 : 0;
        CHECK(matches == 1);
        CHECK(canonical_key(s) == canonical_key(canonical_form(s)));
      }
    }
  }

  TEST_CASE("canonical key is invariant under relabeling") {
    for (const auto& s : census_classes(4)) {
      const std::vector<elem> swap{0, 1, 3, 2};
      CHECK(canonical_key(relabel(s, swap)) == canonical_key(s));
    }
    CHECK_THROWS_AS(canonical_key(hu_semiring()), input_error);
  }

  TEST_CASE("filters select by property") {
    CensusOptions o;
    o.up_to_iso = true;
    o.filter = Property::classical;
    const auto cls = enumerate_semirings(3, o);
    CHECK(cls.size() == 2);
    for (const auto& s : cls) CHECK(decide(Property::classical, s).holds);
  }

  TEST_CASE("output is independent of the worker count") {
    CensusOptions one, many;
    one.jobs = 1;
    many.jobs = 4;
    for (bool iso : {false, true}) {
      one.up_to_iso = many.up_to_iso = iso;
      const auto a = enumerate_semirings(4, one), b = enumerate_semirings(4, many);
      REQUIRE(a.size() == b.size());
      for (std::size_t k = 0; k < a.size(); ++k) CHECK(encode(a[k]) == encode(b[k]));
    }
    CHECK(to_json(census_stats(4, one)).dump() == to_json(census_stats(4, many)).dump());
  }

  TEST_CASE("checkpoint and resume") {
    const auto path = scratch("n4.json");
    CensusOptions o;
    o.jobs = 2;
    o.checkpoint = path;
    o.checkpoint_every = 3;
    const auto full = enumerate_semirings(4, o);
    REQUIRE(std::filesystem::exists(path));
    auto j = nlohmann::json::parse(read_text_file(path));
    CHECK(j.at("order") == 4);
    CHECK(j.at("partial_counts").at("total_tables") == 69);
    const auto cursor_end = j.at("prefix_cursor").get<std::size_t>();

    // cut the state back to an interrupted run and resume from it
    const std::size_t cut = cursor_end / 2;
    nlohmann::json kept = nlohmann::json::array();
    for (const auto& p : j.at("pairs"))
      if (p.at(0).get<std::size_t>() < cut) kept.push_back(p);
    j["prefix_cursor"] = cut;
    j["pairs"] = kept;
    j["partial_counts"]["total_tables"] = kept.size();
    write_text_file(path, j.dump());
    const auto resumed = enumerate_semirings(4, o);
    REQUIRE(resumed.size() == full.size());
    for (std::size_t k = 0; k < full.size(); ++k) CHECK(resumed[k] == full[k]);

    j["order"] = 3;
    write_text_file(path, j.dump());
    CHECK_THROWS_AS(enumerate_semirings(4, o), input_error);
    j["order"] = 4;
    j["partial_counts"]["total_tables"] = 999;
    write_text_file(path, j.dump());
    CHECK_THROWS_AS(enumerate_semirings(4, o), input_error);
    std::filesystem::remove(path);
  }

  TEST_CASE("census record json") {
    const auto j = to_json(census_stats(2));
    CHECK(j.at("order") == 2);
    CHECK(j.at("iso_classes") == 2);
    CHECK(j.at("representatives").size() == 2);
  }
}
