#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semiring/core.hpp"

namespace semiring {

enum class Property {
  classical,
  completely_primary,
  pi_regular,
  periodic,
  simply_periodic,
  mult_idempotent,
  complemented,
  nilpotent_free,
  condition3,
  entire,
};

inline constexpr std::array<Property, 10> kAllProperties = {
    Property::classical,       Property::completely_primary, Property::pi_regular,
    Property::periodic,        Property::simply_periodic,    Property::mult_idempotent,
    Property::complemented,    Property::nilpotent_free,     Property::condition3,
    Property::entire,
};

std::string_view property_name(Property p);
/// Accepts the names from property_name plus the alias "condition3".
/// Throws input_error for an unknown name.
Property parse_property(std::string_view name);

/// Evidence about one element. `kind` says how to read `values`:
///   unit {inverse}            zero_divisor {x with s*x = 0, x != 0}
///   nilpotent {exponent}      pi_regular {n, t with s^(n+1) t = s^n}
///   periodic {m, n, m < n}    simply_periodic {n > 1 with s^n = s}
///   idempotent {}             complement {s* with s s* = 0, s + s* = 1}
///   non_cancellative {x1, x2} not_nilpotent {}   regular {}
///   counterexample {...}      the element violates the property; for
///                             entire the values hold the partner b.
struct Evidence {
  elem element = 0;
  std::string kind;
  std::vector<std::int64_t> values;
  bool operator==(const Evidence&) const = default;
};

struct PropertyVerdict {
  Property property = Property::classical;
  bool holds = false;
  /// When holds: one entry per element it is about. Otherwise: the single
  /// smallest-index offending element.
  std::vector<Evidence> witnesses;
};

PropertyVerdict decide(Property p, const FiniteSemiring& s);

/// Re-checks every witness of a verdict by direct table scans, independently
/// of the search that produced it.
bool replay(const FiniteSemiring& s, const PropertyVerdict& v);

/// Checks the property at a single element by direct scan.
bool holds_at(Property p, const FiniteSemiring& s, elem e);

}  // namespace semiring
