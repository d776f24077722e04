#include "semiring/deciders.hpp"

#include <stdexcept>

namespace semiring {

namespace {

constexpr std::array<std::string_view, 10> kNames = {
    "classical",       "completely_primary", "pi_regular",     "periodic",
    "simply_periodic", "mult_idempotent",    "complemented",   "nilpotent_free",
    "condition3_unit_or_noncancellative",    "entire",
};

std::optional<elem> find_inverse(const FiniteSemiring& s, elem a) {
  for (elem x = 0; x < s.order(); ++x)
    if (s.mul(a, x) == s.one()) return x;
  return std::nullopt;
}

std::optional<elem> find_annihilated(const FiniteSemiring& s, elem a) {
  for (elem x = 0; x < s.order(); ++x)
    if (x != s.zero() && s.mul(a, x) == s.zero()) return x;
  return std::nullopt;
}

std::optional<std::size_t> nilpotency(const FiniteSemiring& s, elem a) {
  elem p = a;
  for (std::size_t k = 1; k <= s.order(); ++k) {
    if (p == s.zero()) return k;
    p = s.mul(p, a);
  }
  return std::nullopt;
}

std::optional<std::pair<elem, elem>> cancellation_failure(const FiniteSemiring& s, elem a) {
  const auto n = static_cast<elem>(s.order());
  for (elem x1 = 0; x1 < n; ++x1)
    for (elem x2 = x1 + 1; x2 < n; ++x2)
      if (s.mul(a, x1) == s.mul(a, x2)) return std::pair{x1, x2};
  return std::nullopt;
}

// Evidence that the property holds at `a`, or nullopt if it fails there.
std::optional<Evidence> evidence_at(Property p, const FiniteSemiring& s, elem a) {
  const auto n = s.order();
  using V = std::vector<std::int64_t>;
  switch (p) {
    case Property::classical:
      if (auto inv = find_inverse(s, a)) return Evidence{a, "unit", V{*inv}};
      if (auto x = find_annihilated(s, a)) return Evidence{a, "zero_divisor", V{*x}};
      return std::nullopt;
    case Property::completely_primary:
      if (auto inv = find_inverse(s, a)) return Evidence{a, "unit", V{*inv}};
      if (auto k = nilpotency(s, a)) return Evidence{a, "nilpotent", V{static_cast<std::int64_t>(*k)}};
      return std::nullopt;
    case Property::condition3:
      if (auto inv = find_inverse(s, a)) return Evidence{a, "unit", V{*inv}};
      if (auto f = cancellation_failure(s, a)) return Evidence{a, "non_cancellative", V{f->first, f->second}};
      return std::nullopt;
    case Property::pi_regular: {
      // Powers repeat as s^m = s^(m+q) with m, q <= n, so some exponent <= 2n
      // works with t a power of s (or t = 1 when q = 1).
      const std::size_t bound = 2 * n;
      elem sn = a;  // s^k
      for (std::size_t k = 1; k <= bound; ++k) {
        const elem sn1 = s.mul(sn, a);
        for (elem t = 0; t < n; ++t)
          if (s.mul(sn1, t) == sn)
            return Evidence{a, "pi_regular", V{static_cast<std::int64_t>(k), t}};
        sn = sn1;
      }
      throw std::logic_error("pi_regular: no witness within 2*order for element " +
                             std::to_string(a));
    }
    case Property::periodic: {
      std::vector<elem> pw{a};  // pw[k-1] = s^k
      for (std::size_t j = 2; j <= n + 1; ++j) {
        pw.push_back(s.mul(pw.back(), a));
        for (std::size_t m = 1; m < j; ++m)
          if (pw[m - 1] == pw[j - 1])
            return Evidence{a, "periodic", V{static_cast<std::int64_t>(m), static_cast<std::int64_t>(j)}};
      }
      return std::nullopt;
    }
    case Property::simply_periodic: {
      elem pw = a;
      for (std::size_t j = 2; j <= n + 1; ++j) {
        pw = s.mul(pw, a);
        if (pw == a) return Evidence{a, "simply_periodic", V{static_cast<std::int64_t>(j)}};
      }
      return std::nullopt;
    }
    case Property::mult_idempotent:
      if (s.mul(a, a) == a) return Evidence{a, "idempotent", V{}};
      return std::nullopt;
    case Property::complemented:
      for (elem c = 0; c < n; ++c)
        if (s.mul(a, c) == s.zero() && s.add(a, c) == s.one()) return Evidence{a, "complement", V{c}};
      return std::nullopt;
    case Property::nilpotent_free:
      if (a == s.zero()) return Evidence{a, "zero", V{}};
      if (nilpotency(s, a)) return std::nullopt;
      return Evidence{a, "not_nilpotent", V{}};
    case Property::entire:
      if (a == s.zero()) return Evidence{a, "zero", V{}};
      if (find_annihilated(s, a)) return std::nullopt;
      return Evidence{a, "regular", V{}};
  }
  return std::nullopt;
}

Evidence counterexample(Property p, const FiniteSemiring& s, elem a) {
  Evidence e{a, "counterexample", {}};
  if (p == Property::entire) e.values.push_back(*find_annihilated(s, a));
  if (p == Property::nilpotent_free) e.values.push_back(static_cast<std::int64_t>(*nilpotency(s, a)));
  return e;
}

}  // namespace

std::string_view property_name(Property p) { return kNames[static_cast<std::size_t>(p)]; }

Property parse_property(std::string_view name) {
  if (name == "condition3") return Property::condition3;
  for (std::size_t k = 0; k < kNames.size(); ++k)
    if (kNames[k] == name) return static_cast<Property>(k);
  throw input_error("property: unknown property '" + std::string(name) + "'");
}

PropertyVerdict decide(Property p, const FiniteSemiring& s) {
  PropertyVerdict v{p, true, {}};
  const auto n = static_cast<elem>(s.order());
  for (elem a = 0; a < n; ++a) {
    auto ev = evidence_at(p, s, a);
    if (!ev) {
      v.holds = false;
      v.witnesses = {counterexample(p, s, a)};
      return v;
    }
    v.witnesses.push_back(std::move(*ev));
  }
  return v;
}

bool holds_at(Property p, const FiniteSemiring& s, elem e) {
  const auto n = static_cast<elem>(s.order());
  auto unit = [&] {
    for (elem x = 0; x < n; ++x)
      if (s.mul(e, x) == s.one()) return true;
    return false;
  };
  auto zd = [&] {
    for (elem x = 0; x < n; ++x)
      if (x != s.zero() && s.mul(e, x) == s.zero()) return true;
    return false;
  };
  auto nil = [&] {
    elem pw = e;
    for (elem k = 0; k < n; ++k, pw = s.mul(pw, e))
      if (pw == s.zero()) return true;
    return false;
  };
  // pw[k] = e^k
  auto powers = [&](std::size_t top) {
    std::vector<elem> pw{s.one()};
    for (std::size_t k = 1; k <= top; ++k) pw.push_back(s.mul(pw.back(), e));
    return pw;
  };
  switch (p) {
    case Property::classical: return unit() || zd();
    case Property::completely_primary: return unit() || nil();
    case Property::condition3:
      if (unit()) return true;
      for (elem x = 0; x < n; ++x)
        for (elem y = 0; y < n; ++y)
          if (x != y && s.mul(e, x) == s.mul(e, y)) return true;
      return false;
    case Property::pi_regular: {
      const auto pw = powers(2 * std::size_t{n} + 1);
      for (std::size_t k = 1; k <= 2 * std::size_t{n}; ++k)
        for (elem t = 0; t < n; ++t)
          if (s.mul(pw[k + 1], t) == pw[k]) return true;
      return false;
    }
    case Property::periodic: {
      const auto pw = powers(std::size_t{n} + 1);
      for (std::size_t j = 2; j <= std::size_t{n} + 1; ++j)
        for (std::size_t m = 1; m < j; ++m)
          if (pw[m] == pw[j]) return true;
      return false;
    }
    case Property::simply_periodic:
      for (std::size_t j = 2; j <= std::size_t{n} + 1; ++j)
        if (s.power(e, j) == e) return true;
      return false;
    case Property::mult_idempotent: return s.mul(e, e) == e;
    case Property::complemented:
      for (elem c = 0; c < n; ++c)
        if (s.mul(e, c) == s.zero() && s.add(e, c) == s.one()) return true;
      return false;
    case Property::nilpotent_free: return e == s.zero() || !nil();
    case Property::entire: return e == s.zero() || !zd();
  }
  return false;
}

bool replay(const FiniteSemiring& s, const PropertyVerdict& v) {
  const auto n = static_cast<elem>(s.order());
  auto in_range = [&](std::int64_t x) { return x >= 0 && x < static_cast<std::int64_t>(n); };
  if (!v.holds) {
    if (v.witnesses.size() != 1) return false;
    const auto& w = v.witnesses.front();
    if (w.kind != "counterexample" || w.element >= n) return false;
    if (holds_at(v.property, s, w.element)) return false;
    for (elem a = 0; a < w.element; ++a)
      if (!holds_at(v.property, s, a)) return false;
    return true;
  }
  if (v.witnesses.size() != n) return false;
  for (elem a = 0; a < n; ++a) {
    const auto& w = v.witnesses[a];
    if (w.element != a) return false;
    const auto& x = w.values;
    auto arity = [&](std::size_t k) { return x.size() == k; };
    bool ok = false;
    if (w.kind == "unit") ok = arity(1) && in_range(x[0]) && s.mul(a, static_cast<elem>(x[0])) == s.one();
    else if (w.kind == "zero_divisor")
      ok = arity(1) && in_range(x[0]) && static_cast<elem>(x[0]) != s.zero() &&
           s.mul(a, static_cast<elem>(x[0])) == s.zero();
    else if (w.kind == "nilpotent")
      ok = arity(1) && x[0] >= 1 && s.power(a, static_cast<std::size_t>(x[0])) == s.zero();
    else if (w.kind == "non_cancellative")
      ok = arity(2) && in_range(x[0]) && in_range(x[1]) && x[0] != x[1] &&
           s.mul(a, static_cast<elem>(x[0])) == s.mul(a, static_cast<elem>(x[1]));
    else if (w.kind == "pi_regular")
      ok = arity(2) && x[0] >= 1 && in_range(x[1]) &&
           s.mul(s.power(a, static_cast<std::size_t>(x[0]) + 1), static_cast<elem>(x[1])) ==
               s.power(a, static_cast<std::size_t>(x[0]));
    else if (w.kind == "periodic")
      ok = arity(2) && x[0] >= 1 && x[0] < x[1] &&
           s.power(a, static_cast<std::size_t>(x[0])) == s.power(a, static_cast<std::size_t>(x[1]));
    else if (w.kind == "simply_periodic")
      ok = arity(1) && x[0] > 1 && s.power(a, static_cast<std::size_t>(x[0])) == a;
    else if (w.kind == "idempotent") ok = s.mul(a, a) == a;
    else if (w.kind == "complement")
      ok = arity(1) && in_range(x[0]) && s.mul(a, static_cast<elem>(x[0])) == s.zero() &&
           s.add(a, static_cast<elem>(x[0])) == s.one();
    else if (w.kind == "zero") ok = a == s.zero();
    else if (w.kind == "not_nilpotent" || w.kind == "regular") ok = holds_at(v.property, s, a);
    if (!ok) return false;
    // the evidence kind must actually establish this property
    if (!holds_at(v.property, s, a)) return false;
  }
  return true;
}

}  // namespace semiring
