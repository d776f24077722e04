#include "semiring/ideals.hpp"

#include <algorithm>
#include <unordered_set>

namespace semiring {

namespace {

// Additive closure of `gen` together with zero.
ElementSet additive_closure(const FiniteSemiring& s, const ElementSet& gen) {
  ElementSet out(s.order());
  out.insert(s.zero());
  std::vector<elem> members{s.zero()};
  std::vector<elem> frontier;
  for (elem g : gen.elements())
    if (out.insert(g)) {
      members.push_back(g);
      frontier.push_back(g);
    }
  while (!frontier.empty()) {
    const elem x = frontier.back();
    frontier.pop_back();
    for (std::size_t k = 0; k < members.size(); ++k) {
      const elem y = s.add(x, members[k]);
      if (out.insert(y)) {
        members.push_back(y);
        frontier.push_back(y);
      }
    }
  }
  return out;
}

}  // namespace

Ideal ideal_generated_by(const FiniteSemiring& s, const ElementSet& seed) {
  // S*seed is closed under outer multiplication; sums of such products stay
  // closed by distributivity, so the ideal is the additive closure.
  ElementSet products(s.order());
  const auto n = static_cast<elem>(s.order());
  for (elem g : seed.elements())
    for (elem x = 0; x < n; ++x) products.insert(s.mul(x, g));
  Ideal out{additive_closure(s, products), std::nullopt};
  if (seed.size() == 1) out.generator_hint = seed.elements().front();
  return out;
}

Ideal principal_ideal(const FiniteSemiring& s, elem generator) {
  return ideal_generated_by(s, ElementSet::of(s.order(), {generator}));
}

bool is_ideal(const FiniteSemiring& s, const ElementSet& members) {
  if (!members.contains(s.zero())) return false;
  const auto elems = members.elements();
  const auto n = static_cast<elem>(s.order());
  for (elem a : elems) {
    for (elem b : elems)
      if (!members.contains(s.add(a, b))) return false;
    for (elem x = 0; x < n; ++x)
      if (!members.contains(s.mul(x, a))) return false;
  }
  return true;
}

bool is_prime_ideal(const FiniteSemiring& s, const ElementSet& members) {
  if (!is_ideal(s, members) || members.size() == s.order()) return false;
  const auto n = static_cast<elem>(s.order());
  for (elem a = 0; a < n; ++a) {
    if (members.contains(a)) continue;
    for (elem b = 0; b < n; ++b)
      if (!members.contains(b) && members.contains(s.mul(a, b))) return false;
  }
  return true;
}

std::optional<std::size_t> IdealLattice::index_of(const ElementSet& members) const {
  for (std::size_t k = 0; k < ideals.size(); ++k)
    if (ideals[k].elements == members) return k;
  return std::nullopt;
}

IdealLattice all_ideals(const FiniteSemiring& s, const IdealOptions& opts) {
  const auto n = static_cast<elem>(s.order());
  const bool generated_only = n > opts.order_cap;
  if (generated_only && !opts.allow_generated_only)
    throw size_error("all_ideals: order " + std::to_string(n) + " exceeds ideal enumeration cap " +
                     std::to_string(opts.order_cap) + "; use generated-only mode");

  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Ideal> found;
  auto add = [&](Ideal i) {
    if (seen.insert(i.elements).second) {
      if (found.size() >= opts.count_cap)
        throw size_error("all_ideals: more than " + std::to_string(opts.count_cap) + " ideals");
      found.push_back(std::move(i));
      return true;
    }
    return false;
  };
  add(ideal_generated_by(s, ElementSet(n)));
  for (elem a = 0; a < n; ++a) add(principal_ideal(s, a));
  const std::size_t principal_count = found.size();

  // Every ideal is the join of the principal ideals of its members, and the
  // join of two ideals is their elementwise sum.
  auto join = [&](const Ideal& i, const Ideal& j) {
    return Ideal{additive_closure(s, i.elements | j.elements), std::nullopt};
  };
  if (generated_only) {
    for (std::size_t a = 0; a < principal_count; ++a)
      for (std::size_t b = a + 1; b < principal_count; ++b) add(join(found[a], found[b]));
  } else {
    std::size_t frontier_begin = 0;
    while (frontier_begin < found.size()) {
      const std::size_t frontier_end = found.size();
      for (std::size_t a = frontier_begin; a < frontier_end; ++a)
        for (std::size_t b = 0; b < principal_count; ++b) add(join(found[a], found[b]));
      frontier_begin = frontier_end;
    }
  }
  // Keep a generator hint only where the ideal is principal.
  for (auto& i : found) {
    if (i.generator_hint) continue;
    for (elem a : i.elements.elements())
      if (principal_ideal(s, a).elements == i.elements) {
        i.generator_hint = a;
        break;
      }
  }
  std::sort(found.begin(), found.end(), [](const Ideal& x, const Ideal& y) {
    return size_then_lex_less(x.elements, y.elements);
  });

  IdealLattice lat;
  lat.complete = !generated_only;
  lat.ideals = std::move(found);
  const std::size_t m = lat.ideals.size();
  lat.nil = ElementSet::full(n);
  for (std::size_t k = 0; k < m; ++k) {
    const auto& e = lat.ideals[k].elements;
    if (e.size() == n) continue;
    if (is_prime_ideal(s, e)) {
      lat.primes.push_back(k);
      lat.nil = lat.nil & e;
    }
    bool maximal = true;
    for (std::size_t j = 0; j < m && maximal; ++j) {
      const auto& f = lat.ideals[j].elements;
      if (j != k && f.size() != n && f.size() > e.size() && e.is_subset_of(f)) maximal = false;
    }
    if (maximal) lat.maximals.push_back(k);
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && lat.ideals[i].size() < lat.ideals[j].size() && lat.is_subset(i, j))
        lat.inclusion.emplace_back(i, j);
  return lat;
}

Ideal annihilator(const FiniteSemiring& s, const ElementSet& b) {
  if (b.empty()) throw input_error("annihilator: B must be nonempty");
  const auto n = static_cast<elem>(s.order());
  const auto members = b.elements();
  ElementSet out(n);
  for (elem x = 0; x < n; ++x)
    if (std::all_of(members.begin(), members.end(),
                    [&](elem y) { return s.mul(x, y) == s.zero(); }))
      out.insert(x);
  return Ideal{std::move(out), std::nullopt};
}

OrderProps order_props(const FiniteSemiring& s, const IdealLattice& lat) {
  OrderProps p;
  const std::size_t m = lat.ideals.size();
  p.uniserial = true;
  for (std::size_t i = 0; i < m && p.uniserial; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!lat.is_subset(i, j) && !lat.is_subset(j, i)) {
        p.uniserial = false;
        break;
      }
  p.local = lat.maximals.size() == 1;
  p.pis = std::all_of(lat.ideals.begin(), lat.ideals.end(), [&](const Ideal& i) {
    if (i.generator_hint) return true;
    for (elem a : i.elements.elements())
      if (principal_ideal(s, a).elements == i.elements) return true;
    return false;
  });
  // longest chain of primes, by size order (a strict superset is strictly larger)
  std::vector<int> longest(lat.primes.size(), 0);
  for (std::size_t a = 0; a < lat.primes.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      const auto pa = lat.primes[a], pb = lat.primes[b];
      if (lat.ideals[pb].size() < lat.ideals[pa].size() && lat.is_subset(pb, pa))
        longest[a] = std::max(longest[a], longest[b] + 1);
    }
    p.krull_dimension = std::max(p.krull_dimension, longest[a]);
  }
  return p;
}

OrderProps order_props(const FiniteSemiring& s) { return order_props(s, all_ideals(s)); }

IdealSemiring ideal_semiring(const FiniteSemiring& s, const IdealOptions& opts,
                             std::size_t size_cap) {
  IdealLattice lat = all_ideals(s, opts);
  if (!lat.complete) throw size_error("ideal_semiring: needs the complete ideal lattice");
  const std::size_t m = lat.ideals.size();
  if (m > size_cap)
    throw size_error("ideal_semiring: " + std::to_string(m) + " ideals exceed size cap");
  const auto n = static_cast<elem>(s.order());

  auto lookup = [&](const ElementSet& e) -> elem {
    auto k = lat.index_of(e);
    if (!k) throw std::logic_error("ideal_semiring: operation left the ideal lattice");
    return static_cast<elem>(*k);
  };
  std::vector<elem> add(m * m), mul(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      const auto ei = lat.ideals[i].elements.elements();
      const auto ej = lat.ideals[j].elements.elements();
      ElementSet sum(n), prod(n);
      for (elem a : ei)
        for (elem b : ej) {
          sum.insert(s.add(a, b));
          prod.insert(s.mul(a, b));
        }
      if (!is_ideal(s, sum)) throw std::logic_error("ideal_semiring: I+J is not an ideal");
      add[i * m + j] = add[j * m + i] = lookup(sum);
      mul[i * m + j] = mul[j * m + i] = lookup(ideal_generated_by(s, prod).elements);
    }
  std::vector<std::string> labels;
  for (const auto& i : lat.ideals) {
    std::string l = "{";
    bool first = true;
    for (elem e : i.elements.elements()) {
      if (!first) l += ",";
      l += s.label(e);
      first = false;
    }
    labels.push_back(l + "}");
  }
  // zero ideal is first in size order; the whole carrier is last
  FiniteSemiring id(m, 0, static_cast<elem>(m - 1), std::move(add), std::move(mul),
                    std::move(labels));
  return {std::move(id), std::move(lat)};
}

AnnAnnReport ann_ann_criterion(const FiniteSemiring& s) {
  AnnAnnReport r;
  const auto n = static_cast<elem>(s.order());
  for (elem b = 0; b < n; ++b) {
    Ideal ann = annihilator(s, ElementSet::of(n, {b}));
    Ideal ann_ann = annihilator(s, ann.elements);
    Ideal principal = principal_ideal(s, b);
    const bool eq = ann_ann.elements == principal.elements;
    r.all_equal = r.all_equal && eq;
    r.entries.push_back({b, std::move(ann_ann), std::move(principal), eq});
  }
  return r;
}

}  // namespace semiring
