#include "semiring/localization.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace semiring {

MultiplicativeSet::MultiplicativeSet(const FiniteSemiring& s, ElementSet members)
    : members_(std::move(members)) {
  if (members_.universe() != s.order())
    throw input_error("multiplicative set: universe does not match the semiring order");
  if (!members_.contains(s.one())) throw input_error("multiplicative set: must contain one");
  const auto e = members_.elements();
  for (elem a : e)
    for (elem b : e)
      if (!members_.contains(s.mul(a, b)))
        throw input_error("multiplicative set: not closed, " + std::to_string(a) + "*" +
                          std::to_string(b) + " missing");
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    // the smaller root wins so that a class root is its minimal pair
    if (a < b) parent[b] = a;
    else if (b < a) parent[a] = b;
  }
};

}  // namespace

LocalizedSemiring localize(const FiniteSemiring& s, const MultiplicativeSet& mset) {
  const auto n = static_cast<elem>(s.order());
  const auto t = mset.elements().elements();
  const std::size_t tn = t.size();
  // pair (a, t[k]) has id a*tn + k; ids are increasing in (a, s) lexicographic order
  const std::size_t pairs = n * tn;
  UnionFind uf(pairs);
  for (std::size_t p = 0; p < pairs; ++p) {
    const elem a = static_cast<elem>(p / tn), sa = t[p % tn];
    for (std::size_t q = p + 1; q < pairs; ++q) {
      if (uf.find(p) == uf.find(q)) continue;
      const elem b = static_cast<elem>(q / tn), sb = t[q % tn];
      const elem lhs = s.mul(a, sb), rhs = s.mul(b, sa);
      for (elem u : t)
        if (s.mul(u, lhs) == s.mul(u, rhs)) {
          uf.unite(p, q);
          break;
        }
    }
  }
  std::map<std::size_t, elem> class_of_root;
  std::vector<std::pair<elem, elem>> reps;
  for (std::size_t p = 0; p < pairs; ++p) {
    const std::size_t r = uf.find(p);
    if (!class_of_root.contains(r)) {
      class_of_root.emplace(r, static_cast<elem>(reps.size()));
      reps.emplace_back(static_cast<elem>(r / tn), t[r % tn]);
    }
  }
  std::vector<std::size_t> t_index(n, 0);
  for (std::size_t k = 0; k < tn; ++k) t_index[t[k]] = k;
  auto cls = [&](elem a, elem den) { return class_of_root.at(uf.find(a * tn + t_index[den])); };

  const std::size_t m = reps.size();
  std::vector<elem> add(m * m), mul(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      const auto [a, sa] = reps[x];
      const auto [b, sb] = reps[y];
      const elem den = s.mul(sa, sb);
      add[x * m + y] = cls(s.add(s.mul(a, sb), s.mul(b, sa)), den);
      mul[x * m + y] = cls(s.mul(a, b), den);
    }
  std::vector<std::string> labels;
  for (const auto& [a, den] : reps) labels.push_back(s.label(a) + "/" + s.label(den));
  std::vector<elem> canonical(n);
  for (elem a = 0; a < n; ++a) canonical[a] = cls(a, s.one());

  LocalizedSemiring out{FiniteSemiring(m, cls(s.zero(), s.one()), cls(s.one(), s.one()),
                                       std::move(add), std::move(mul), std::move(labels)),
                        std::move(canonical), std::move(reps)};
  if (!is_homomorphism(s, out.quotient, out.canonical_map))
    throw std::logic_error("localize: canonical map is not a homomorphism");
  return out;
}

TotalQuotient total_quotient(const FiniteSemiring& s) {
  const auto c = classify_all(s);
  TotalQuotient q{localize(s, MultiplicativeSet(s, c.cancellative)), std::nullopt};
  const auto& map = q.localized.canonical_map;
  if (is_isomorphism(s, q.localized.quotient, map)) q.isomorphism = map;
  else q.isomorphism = find_isomorphism(s, q.localized.quotient);
  return q;
}

PrimeLocalization localize_at_prime(const FiniteSemiring& s, const ElementSet& prime) {
  if (prime.universe() != s.order() || !is_prime_ideal(s, prime))
    throw input_error("localize_at_prime: argument is not a prime ideal");
  PrimeLocalization out{localize(s, MultiplicativeSet(s, prime.complement())), std::nullopt,
                        std::nullopt};
  const auto& q = out.localized.quotient;
  if (q.order() > kDefaultIdealOrderCap) return out;
  const IdealLattice lat = all_ideals(q);
  out.is_local = lat.maximals.size() == 1;
  ElementSet image(q.order());
  for (elem a : prime.elements()) image.insert(out.localized.canonical_map[a]);
  const Ideal extended = ideal_generated_by(q, image);
  out.maximal_is_extended_prime =
      lat.maximals.size() == 1 && lat.ideals[lat.maximals.front()].elements == extended.elements;
  return out;
}

}  // namespace semiring
