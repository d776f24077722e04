#pragma once

// Brute-force reference implementations. Each one re-derives its answer from
// the raw tables by exhaustive search and shares no code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "semiring/core.hpp"

namespace oracle {

using semiring::elem;
using semiring::FiniteSemiring;
using Mask = std::uint32_t;

inline std::set<elem> units(const FiniteSemiring& s) {
  std::set<elem> out;
  for (elem a = 0; a < s.order(); ++a)
    for (elem b = 0; b < s.order(); ++b)
      if (s.mul(a, b) == s.one()) out.insert(a);
  return out;
}

inline std::set<elem> zero_divisors(const FiniteSemiring& s) {
  std::set<elem> out;
  for (elem a = 0; a < s.order(); ++a)
    for (elem b = 0; b < s.order(); ++b)
      if (b != s.zero() && s.mul(a, b) == s.zero()) out.insert(a);
  return out;
}

inline std::set<elem> nilpotents(const FiniteSemiring& s) {
  std::set<elem> out;
  for (elem a = 0; a < s.order(); ++a) {
    elem p = a;
    for (std::size_t k = 0; k <= s.order(); ++k, p = s.mul(p, a))
      if (p == s.zero()) out.insert(a);
  }
  return out;
}

inline std::set<elem> cancellative(const FiniteSemiring& s) {
  std::set<elem> out;
  for (elem a = 0; a < s.order(); ++a) {
    std::set<elem> row;
    for (elem b = 0; b < s.order(); ++b) row.insert(s.mul(a, b));
    if (row.size() == s.order()) out.insert(a);
  }
  return out;
}

inline std::set<elem> all_elements(const FiniteSemiring& s) {
  std::set<elem> out;
  for (elem a = 0; a < s.order(); ++a) out.insert(a);
  return out;
}

/// Every law checked over all tuples; true iff the tables form a commutative semiring.
inline bool is_semiring(std::size_t n, elem zero, elem one, const std::vector<elem>& add,
                        const std::vector<elem>& mul) {
  auto p = [&](elem a, elem b) { return add[a * n + b]; };
  auto t = [&](elem a, elem b) { return mul[a * n + b]; };
  if (n >= 2 && zero == one) return false;
  for (elem a = 0; a < n; ++a) {
    if (p(a, zero) != a || t(a, one) != a || t(a, zero) != zero) return false;
    for (elem b = 0; b < n; ++b) {
      if (p(a, b) != p(b, a) || t(a, b) != t(b, a)) return false;
      for (elem c = 0; c < n; ++c)
        if (p(p(a, b), c) != p(a, p(b, c)) || t(t(a, b), c) != t(a, t(b, c)) ||
            t(a, p(b, c)) != p(t(a, b), t(a, c)))
          return false;
    }
  }
  return true;
}

inline bool is_semiring(const FiniteSemiring& s) {
  return is_semiring(s.order(), s.zero(), s.one(), {s.add_table().begin(), s.add_table().end()},
                     {s.mul_table().begin(), s.mul_table().end()});
}

inline bool in(Mask m, elem a) { return (m >> a) & 1u; }

inline std::set<elem> members(Mask m, std::size_t n) {
  std::set<elem> out;
  for (elem a = 0; a < n; ++a)
    if (in(m, a)) out.insert(a);
  return out;
}

/// All ideals by testing every subset.
inline std::vector<Mask> subset_ideals(const FiniteSemiring& s) {
  const std::size_t n = s.order();
  std::vector<Mask> out;
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    bool ok = in(m, s.zero());
    for (elem a = 0; a < n && ok; ++a) {
      if (!in(m, a)) continue;
      for (elem b = 0; b < n && ok; ++b)
        ok = (!in(m, b) || in(m, s.add(a, b))) && in(m, s.mul(a, b));
    }
    if (ok) out.push_back(m);
  }
  return out;
}

inline Mask full(const FiniteSemiring& s) { return (Mask{1} << s.order()) - 1; }

inline bool is_prime(const FiniteSemiring& s, Mask m) {
  if (m == full(s)) return false;
  for (elem a = 0; a < s.order(); ++a)
    for (elem b = 0; b < s.order(); ++b)
      if (in(m, s.mul(a, b)) && !in(m, a) && !in(m, b)) return false;
  return true;
}

inline std::vector<Mask> maximal_ideals(const FiniteSemiring& s) {
  const auto all = subset_ideals(s);
  std::vector<Mask> out;
  for (Mask m : all) {
    if (m == full(s)) continue;
    bool maximal = true;
    for (Mask o : all)
      if (o != m && o != full(s) && (o & m) == m) maximal = false;
    if (maximal) out.push_back(m);
  }
  return out;
}

inline Mask principal(const FiniteSemiring& s, elem b) {
  Mask r = full(s);
  for (Mask m : subset_ideals(s))
    if (in(m, b)) r &= m;
  return r;
}

/// Every bijection fixing 0 and 1 that preserves both tables.
inline std::optional<std::vector<elem>> isomorphism(const FiniteSemiring& a, const FiniteSemiring& b) {
  if (a.order() != b.order()) return std::nullopt;
  std::vector<elem> perm(a.order());
  std::iota(perm.begin(), perm.end(), elem{0});
  do {
    if (perm[a.zero()] != b.zero() || perm[a.one()] != b.one()) continue;
    bool ok = true;
    for (elem x = 0; x < a.order() && ok; ++x)
      for (elem y = 0; y < a.order() && ok; ++y)
        ok = perm[a.add(x, y)] == b.add(perm[x], perm[y]) && perm[a.mul(x, y)] == b.mul(perm[x], perm[y]);
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

/// Number of (add, mul) table pairs on {0..n-1} with zero 0 and one 1 that form
/// a commutative semiring. The identity rows are forced; every other cell of
/// both tables ranges over all values, with no commutativity assumed.
inline std::size_t naive_census_count(std::size_t n) {
  if (n == 1) return is_semiring(1, 0, 0, {0}, {0}) ? 1 : 0;
  const elem zero = 0, one = 1;
  std::vector<std::size_t> add_free, mul_free;
  std::vector<elem> add(n * n), mul(n * n);
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b) {
      if (a == zero) add[a * n + b] = b;
      else if (b == zero) add[a * n + b] = a;
      else add_free.push_back(a * n + b);
      if (a == one) mul[a * n + b] = b;
      else if (b == one) mul[a * n + b] = a;
      else mul_free.push_back(a * n + b);
    }
  std::size_t count = 0;
  std::function<void(std::size_t)> mul_cells = [&](std::size_t k) {
    if (k == mul_free.size()) {
      count += is_semiring(n, zero, one, add, mul) ? 1 : 0;
      return;
    }
    for (elem v = 0; v < n; ++v) {
      mul[mul_free[k]] = v;
      mul_cells(k + 1);
    }
  };
  std::function<void(std::size_t)> add_cells = [&](std::size_t k) {
    if (k == add_free.size()) {
      mul_cells(0);
      return;
    }
    for (elem v = 0; v < n; ++v) {
      add[add_free[k]] = v;
      add_cells(k + 1);
    }
  };
  add_cells(0);
  return count;
}

}  // namespace oracle
