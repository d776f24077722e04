#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "semiring/core.hpp"

namespace semiring {

/// Nonempty subset closed under + and under multiplication by any element.
struct Ideal {
  ElementSet elements;
  std::optional<elem> generator_hint;

  bool contains(elem e) const { return elements.contains(e); }
  std::size_t size() const { return elements.size(); }
};

inline constexpr std::size_t kDefaultIdealOrderCap = 24;
inline constexpr std::size_t kDefaultIdealCountCap = 1u << 16;

struct IdealLattice {
  /// Sorted by size, then lexicographically by members.
  std::vector<Ideal> ideals;
  std::vector<std::size_t> primes;
  std::vector<std::size_t> maximals;
  /// Intersection of all primes (the whole carrier when there are none).
  ElementSet nil;
  /// Strict inclusions (i, j): ideals[i] is a proper subset of ideals[j].
  std::vector<std::pair<std::size_t, std::size_t>> inclusion;
  /// False only in generated-only mode: principal ideals and their pairwise
  /// joins, which need not be every ideal.
  bool complete = true;

  std::optional<std::size_t> index_of(const ElementSet& members) const;
  bool is_subset(std::size_t i, std::size_t j) const {
    return ideals[i].elements.is_subset_of(ideals[j].elements);
  }
};

struct IdealOptions {
  std::size_t order_cap = kDefaultIdealOrderCap;
  std::size_t count_cap = kDefaultIdealCountCap;
  /// Above order_cap, return a possibly incomplete lattice instead of throwing.
  bool allow_generated_only = false;
};

/// Least ideal containing `seed` (the zero ideal for an empty seed).
Ideal ideal_generated_by(const FiniteSemiring& s, const ElementSet& seed);
Ideal principal_ideal(const FiniteSemiring& s, elem generator);

bool is_ideal(const FiniteSemiring& s, const ElementSet& members);
bool is_prime_ideal(const FiniteSemiring& s, const ElementSet& members);

/// Every ideal, found as joins of principal ideals until no new ideal appears.
IdealLattice all_ideals(const FiniteSemiring& s, const IdealOptions& opts = {});

/// {s : s*b = 0 for all b in B}. Throws input_error for an empty B.
Ideal annihilator(const FiniteSemiring& s, const ElementSet& b);

struct OrderProps {
  bool uniserial = false;
  bool local = false;
  bool pis = false;
  /// Longest strict chain of primes minus one; -1 when there is no prime.
  int krull_dimension = -1;
};

OrderProps order_props(const FiniteSemiring& s, const IdealLattice& lattice);
OrderProps order_props(const FiniteSemiring& s);

struct IdealSemiring {
  /// Element k of `semiring` is lattice.ideals[k].
  FiniteSemiring semiring;
  IdealLattice lattice;
};

/// Id(S): ideals under I+J = {a+b} and IJ = ideal generated by products.
IdealSemiring ideal_semiring(const FiniteSemiring& s, const IdealOptions& opts = {},
                             std::size_t size_cap = kDefaultSizeCap);

struct AnnAnnEntry {
  elem element = 0;
  Ideal ann_ann;
  Ideal principal;
  bool equal = false;
};

struct AnnAnnReport {
  std::vector<AnnAnnEntry> entries;
  bool all_equal = true;
};

AnnAnnReport ann_ann_criterion(const FiniteSemiring& s);

}  // namespace semiring
