#include "semiring/core.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <tuple>

namespace semiring {

FiniteSemiring::FiniteSemiring(std::size_t order, elem zero, elem one, std::vector<elem> add,
                               std::vector<elem> mul, std::vector<std::string> labels)
    : n_(order),
      zero_(zero),
      one_(one),
      add_(std::move(add)),
      mul_(std::move(mul)),
      labels_(std::move(labels)) {
  if (n_ == 0) throw input_error("order: must be a positive integer");
  if (zero_ >= n_)
    throw input_error("zero: index " + std::to_string(zero_) + " out of range [0," +
                      std::to_string(n_) + ")");
  if (one_ >= n_)
    throw input_error("one: index " + std::to_string(one_) + " out of range [0," +
                      std::to_string(n_) + ")");
  auto check = [this](const std::vector<elem>& t, const char* name) {
    if (t.size() != n_ * n_)
      throw input_error(std::string(name) + ": expected " + std::to_string(n_ * n_) +
                        " entries, got " + std::to_string(t.size()));
    for (std::size_t k = 0; k < t.size(); ++k)
      if (t[k] >= n_)
        throw input_error(std::string(name) + "[" + std::to_string(k / n_) + "][" +
                          std::to_string(k % n_) + "]: value " + std::to_string(t[k]) +
                          " out of range [0," + std::to_string(n_) + ")");
  };
  check(add_, "add");
  check(mul_, "mul");
  if (!labels_.empty() && labels_.size() != n_)
    throw input_error("labels: expected " + std::to_string(n_) + " strings, got " +
                      std::to_string(labels_.size()));
}

std::string FiniteSemiring::label(elem e) const {
  if (!labels_.empty()) return labels_[e];
  return std::to_string(e);
}

elem FiniteSemiring::power(elem s, std::size_t k) const noexcept {
  elem r = one_;
  for (std::size_t i = 0; i < k; ++i) r = mul(r, s);
  return r;
}

namespace {

class ViolationSink {
 public:
  ViolationSink(AxiomReport& r, std::size_t cap) : report_(r), cap_(cap) {}
  /// Set once a violation beyond the cap has been seen.
  bool full() const { return report_.truncated; }
  void push(std::string axiom, std::vector<elem> w) {
    report_.ok = false;
    if (report_.violations.size() >= cap_) {
      report_.truncated = true;
      return;
    }
    report_.violations.push_back({std::move(axiom), std::move(w)});
  }

 private:
  AxiomReport& report_;
  std::size_t cap_;
};

}  // namespace

AxiomReport verify_axioms(const FiniteSemiring& s, std::size_t cap) {
  AxiomReport report;
  ViolationSink sink(report, cap);
  const auto n = static_cast<elem>(s.order());
  const elem z = s.zero(), o = s.one();

  if (n >= 2 && z == o) sink.push("zero_ne_one", {z});

  for (elem i = 0; i < n && !sink.full(); ++i) {
    if (s.add(i, z) != i) sink.push("add_identity", {i});
    if (s.mul(i, o) != i) sink.push("mul_identity", {i});
    if (s.mul(i, z) != z) sink.push("absorbing_zero", {i});
  }
  for (elem i = 0; i < n && !sink.full(); ++i)
    for (elem j = i + 1; j < n; ++j) {
      if (s.add(i, j) != s.add(j, i)) sink.push("add_commutative", {i, j});
      if (s.mul(i, j) != s.mul(j, i)) sink.push("mul_commutative", {i, j});
    }
  for (elem a = 0; a < n && !sink.full(); ++a)
    for (elem b = 0; b < n && !sink.full(); ++b) {
      const elem ab_add = s.add(a, b), ab_mul = s.mul(a, b);
      for (elem c = 0; c < n; ++c) {
        if (s.add(ab_add, c) != s.add(a, s.add(b, c))) sink.push("add_associative", {a, b, c});
        if (s.mul(ab_mul, c) != s.mul(a, s.mul(b, c))) sink.push("mul_associative", {a, b, c});
        if (s.mul(a, s.add(b, c)) != s.add(ab_mul, s.mul(a, c)))
          sink.push("distributive", {a, b, c});
      }
    }
  return report;
}

bool violation_reproduces(const FiniteSemiring& s, const AxiomViolation& v) {
  const auto& w = v.witness;
  for (elem e : w)
    if (e >= s.order()) return false;
  auto arity = [&](std::size_t k) { return w.size() == k; };
  const std::string& a = v.axiom;
  if (a == "zero_ne_one") return arity(1) && s.order() >= 2 && s.zero() == s.one();
  if (a == "add_identity") return arity(1) && s.add(w[0], s.zero()) != w[0];
  if (a == "mul_identity") return arity(1) && s.mul(w[0], s.one()) != w[0];
  if (a == "absorbing_zero") return arity(1) && s.mul(w[0], s.zero()) != s.zero();
  if (a == "add_commutative") return arity(2) && s.add(w[0], w[1]) != s.add(w[1], w[0]);
  if (a == "mul_commutative") return arity(2) && s.mul(w[0], w[1]) != s.mul(w[1], w[0]);
  if (!arity(3)) return false;
  const elem x = w[0], y = w[1], z = w[2];
  if (a == "add_associative") return s.add(s.add(x, y), z) != s.add(x, s.add(y, z));
  if (a == "mul_associative") return s.mul(s.mul(x, y), z) != s.mul(x, s.mul(y, z));
  if (a == "distributive") return s.mul(x, s.add(y, z)) != s.add(s.mul(x, y), s.mul(x, z));
  return false;
}

Classification classify_all(const FiniteSemiring& s) {
  const auto n = static_cast<elem>(s.order());
  Classification c{{}, ElementSet(n), ElementSet(n), ElementSet(n), ElementSet(n)};
  c.profiles.reserve(n);
  std::vector<elem> seen_at(n);
  for (elem a = 0; a < n; ++a) {
    ElementProfile p;
    p.element = a;
    // First preimage of each product value, to detect a repeated value in the row.
    std::fill(seen_at.begin(), seen_at.end(), std::numeric_limits<elem>::max());
    for (elem x = 0; x < n; ++x) {
      const elem v = s.mul(a, x);
      if (v == s.one() && !p.inverse) p.inverse = x;
      if (v == s.zero() && x != s.zero() && !p.annihilated) p.annihilated = x;
      if (seen_at[v] == std::numeric_limits<elem>::max()) {
        seen_at[v] = x;
      } else if (!p.cancellation_failure ||
                 std::pair{seen_at[v], x} < *p.cancellation_failure) {
        p.cancellation_failure = std::pair{seen_at[v], x};
      }
    }
    p.is_unit = p.inverse.has_value();
    p.is_zero_divisor = p.annihilated.has_value();
    p.is_regular = !p.is_zero_divisor;
    p.is_cancellative = !p.cancellation_failure.has_value();

    // A power sequence of length n either hits zero or never will.
    elem pw = a;
    for (std::size_t k = 1; k <= n; ++k) {
      if (pw == s.zero()) {
        p.is_nilpotent = true;
        p.nilpotency_exponent = k;
        break;
      }
      pw = s.mul(pw, a);
    }
    for (elem x = 0; x < n; ++x)
      if (s.add(a, x) == s.zero()) {
        p.is_add_invertible = true;
        break;
      }

    if (p.is_unit) c.units.insert(a);
    if (p.is_zero_divisor) c.zero_divisors.insert(a);
    if (p.is_nilpotent) c.nilpotents.insert(a);
    if (p.is_cancellative) c.cancellative.insert(a);
    c.profiles.push_back(std::move(p));
  }
  return c;
}

StructureFlags structure_flags(const FiniteSemiring& s) {
  const auto n = static_cast<elem>(s.order());
  StructureFlags f{true, true, true, true, false};
  for (elem a = 0; a < n; ++a) {
    bool invertible = false;
    for (elem b = 0; b < n; ++b) {
      if (s.add(a, b) == s.zero()) invertible = true;
      if (a != s.zero() && b != s.zero() && s.mul(a, b) == s.zero()) f.is_entire = false;
    }
    if (!invertible) f.is_ring = false;
    if (s.add(a, a) != a) f.is_add_idempotent = false;
    if (s.mul(a, a) != a) f.is_mult_idempotent = false;
  }
  f.is_proper = !f.is_ring;
  return f;
}

bool is_homomorphism(const FiniteSemiring& s1, const FiniteSemiring& s2,
                     std::span<const elem> map) {
  const auto n = static_cast<elem>(s1.order());
  if (map.size() != n) return false;
  for (elem e : map)
    if (e >= s2.order()) return false;
  if (map[s1.zero()] != s2.zero() || map[s1.one()] != s2.one()) return false;
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b) {
      if (map[s1.add(a, b)] != s2.add(map[a], map[b])) return false;
      if (map[s1.mul(a, b)] != s2.mul(map[a], map[b])) return false;
    }
  return true;
}

bool is_isomorphism(const FiniteSemiring& s1, const FiniteSemiring& s2,
                    std::span<const elem> map) {
  if (s1.order() != s2.order() || map.size() != s1.order()) return false;
  std::vector<bool> hit(s2.order(), false);
  for (elem e : map) {
    if (e >= s2.order() || hit[e]) return false;
    hit[e] = true;
  }
  return is_homomorphism(s1, s2, map);
}

namespace {

using Fingerprint = std::array<std::int64_t, 12>;

// (tail length, period) of the sequence x, op(x,x), ...
std::pair<std::int64_t, std::int64_t> cycle_shape(std::size_t n, elem x, auto&& op) {
  std::vector<std::int64_t> first(n, -1);
  elem cur = x;
  for (std::int64_t k = 0;; ++k) {
    if (first[cur] >= 0) return {first[cur], k - first[cur]};
    first[cur] = k;
    cur = op(cur, x);
  }
}

std::vector<Fingerprint> fingerprints(const FiniteSemiring& s) {
  const auto n = static_cast<elem>(s.order());
  std::vector<Fingerprint> out(n);
  for (elem x = 0; x < n; ++x) {
    auto [at, ap] = cycle_shape(n, x, [&](elem a, elem b) { return s.add(a, b); });
    auto [mt, mp] = cycle_shape(n, x, [&](elem a, elem b) { return s.mul(a, b); });
    std::int64_t kills = 0, inverts = 0, negates = 0, fixes_mul = 0, fixes_add = 0;
    for (elem y = 0; y < n; ++y) {
      if (s.mul(x, y) == s.zero()) ++kills;
      if (s.mul(x, y) == s.one()) ++inverts;
      if (s.add(x, y) == s.zero()) ++negates;
      if (s.mul(x, y) == x) ++fixes_mul;
      if (s.add(x, y) == x) ++fixes_add;
    }
    out[x] = {x == s.zero(), x == s.one(), at, ap, mt, mp, kills, inverts, negates,
              fixes_mul, fixes_add, s.add(x, x) == x};
  }
  return out;
}

constexpr elem kUnset = std::numeric_limits<elem>::max();

struct IsoSearch {
  const FiniteSemiring& s1;
  const FiniteSemiring& s2;
  std::vector<Fingerprint> fp1, fp2;

  struct State {
    std::vector<elem> fwd, bwd;
    std::vector<elem> assigned;
  };

  bool assign(State& st, elem a, elem b, std::vector<elem>& queue) const {
    if (st.fwd[a] != kUnset) return st.fwd[a] == b;
    if (st.bwd[b] != kUnset) return false;
    if (fp1[a] != fp2[b]) return false;
    st.fwd[a] = b;
    st.bwd[b] = a;
    st.assigned.push_back(a);
    queue.push_back(a);
    return true;
  }

  // Closes the partial map under both operations; false on contradiction.
  bool propagate(State& st, std::vector<elem>& queue) const {
    while (!queue.empty()) {
      const elem a = queue.back();
      queue.pop_back();
      for (std::size_t k = 0; k < st.assigned.size(); ++k) {
        const elem c = st.assigned[k];
        const elem fa = st.fwd[a], fc = st.fwd[c];
        if (!assign(st, s1.add(a, c), s2.add(fa, fc), queue)) return false;
        if (!assign(st, s1.mul(a, c), s2.mul(fa, fc), queue)) return false;
      }
    }
    return true;
  }

  bool search(State& st) const {
    const auto n = static_cast<elem>(s1.order());
    if (st.assigned.size() == n) return true;
    elem best = kUnset;
    std::vector<elem> best_cands;
    for (elem a = 0; a < n; ++a) {
      if (st.fwd[a] != kUnset) continue;
      std::vector<elem> cands;
      for (elem b = 0; b < n; ++b)
        if (st.bwd[b] == kUnset && fp1[a] == fp2[b]) cands.push_back(b);
      if (best == kUnset || cands.size() < best_cands.size()) {
        best = a;
        best_cands = std::move(cands);
      }
    }
    for (elem b : best_cands) {
      State next = st;
      std::vector<elem> queue;
      if (assign(next, best, b, queue) && propagate(next, queue) && search(next)) {
        st = std::move(next);
        return true;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<elem>> find_isomorphism(const FiniteSemiring& s1,
                                                  const FiniteSemiring& s2) {
  if (s1.order() != s2.order()) return std::nullopt;
  IsoSearch iso{s1, s2, fingerprints(s1), fingerprints(s2)};
  auto sorted1 = iso.fp1, sorted2 = iso.fp2;
  std::sort(sorted1.begin(), sorted1.end());
  std::sort(sorted2.begin(), sorted2.end());
  if (sorted1 != sorted2) return std::nullopt;

  const auto n = s1.order();
  IsoSearch::State st{std::vector<elem>(n, kUnset), std::vector<elem>(n, kUnset), {}};
  std::vector<elem> queue;
  if (!iso.assign(st, s1.zero(), s2.zero(), queue)) return std::nullopt;
  if (!iso.assign(st, s1.one(), s2.one(), queue)) return std::nullopt;
  if (!iso.propagate(st, queue)) return std::nullopt;
  if (!iso.search(st)) return std::nullopt;
  return st.fwd;
}

FiniteSemiring relabel(const FiniteSemiring& s, std::span<const elem> perm) {
  const auto n = s.order();
  if (perm.size() != n) throw input_error("relabel: permutation size mismatch");
  std::vector<elem> add(n * n), mul(n * n);
  std::vector<std::string> labels;
  if (!s.labels().empty()) labels.resize(n);
  for (elem a = 0; a < n; ++a) {
    if (!labels.empty()) labels[perm[a]] = s.labels()[a];
    for (elem b = 0; b < n; ++b) {
      add[perm[a] * n + perm[b]] = perm[s.add(a, b)];
      mul[perm[a] * n + perm[b]] = perm[s.mul(a, b)];
    }
  }
  return FiniteSemiring(n, perm[s.zero()], perm[s.one()], std::move(add), std::move(mul),
                        std::move(labels));
}

}  // namespace semiring
