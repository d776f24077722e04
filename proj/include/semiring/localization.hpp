#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "semiring/core.hpp"
#include "semiring/ideals.hpp"

namespace semiring {

/// Contains one and is closed under multiplication.
class MultiplicativeSet {
 public:
  /// Throws input_error if `members` is not multiplicatively closed or lacks one.
  MultiplicativeSet(const FiniteSemiring& s, ElementSet members);

  const ElementSet& elements() const noexcept { return members_; }

 private:
  ElementSet members_;
};

struct LocalizedSemiring {
  FiniteSemiring quotient;
  /// canonical_map[a] = class of a/1.
  std::vector<elem> canonical_map;
  /// Minimal (numerator, denominator) pair of each class.
  std::vector<std::pair<elem, elem>> class_reps;
};

/// Fractions a/s (s in T) modulo (a,s) ~ (b,t) iff u*a*t = u*b*s for some u in T.
/// Classes are ordered by their minimal (a, s) pair. Throws std::logic_error if
/// the canonical map fails to be a homomorphism.
LocalizedSemiring localize(const FiniteSemiring& s, const MultiplicativeSet& t);

struct TotalQuotient {
  LocalizedSemiring localized;
  /// Isomorphism S -> Q(S): the canonical map when it is bijective, else a searched one.
  std::optional<std::vector<elem>> isomorphism;
};

/// Localization at the multiplicatively cancellative elements.
TotalQuotient total_quotient(const FiniteSemiring& s);

struct PrimeLocalization {
  LocalizedSemiring localized;
  /// Set only when the quotient is small enough for ideal enumeration.
  std::optional<bool> is_local;
  /// The unique maximal ideal equals the ideal generated by the image of p.
  std::optional<bool> maximal_is_extended_prime;
};

/// Localization at S \ p. Throws input_error if p is not a prime ideal.
PrimeLocalization localize_at_prime(const FiniteSemiring& s, const ElementSet& prime);

}  // namespace semiring
