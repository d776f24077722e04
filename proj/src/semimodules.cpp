#include "semiring/semimodules.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "semiring/codec.hpp"

namespace semiring {

FiniteSemimodule::FiniteSemimodule(FiniteSemiring base, std::size_t order, elem zero,
                                   std::vector<elem> add, std::vector<elem> action)
    : base_(std::move(base)), m_(order), zero_(zero), add_(std::move(add)), action_(std::move(action)) {
  if (m_ == 0) throw input_error("order: must be a positive integer");
  if (zero_ >= m_) throw input_error("zero: index out of range");
  if (add_.size() != m_ * m_)
    throw input_error("madd: expected " + std::to_string(m_) + "x" + std::to_string(m_) + " table");
  if (action_.size() != base_.order() * m_)
    throw input_error("action: expected " + std::to_string(base_.order()) + "x" +
                      std::to_string(m_) + " table");
  for (std::size_t k = 0; k < add_.size(); ++k)
    if (add_[k] >= m_)
      throw input_error("madd[" + std::to_string(k / m_) + "][" + std::to_string(k % m_) +
                        "]: value out of range");
  for (std::size_t k = 0; k < action_.size(); ++k)
    if (action_[k] >= m_)
      throw input_error("action[" + std::to_string(k / m_) + "][" + std::to_string(k % m_) +
                        "]: value out of range");
}

namespace {

struct Sink {
  AxiomReport& r;
  std::size_t cap;
  bool full() const { return r.truncated; }
  void push(std::string axiom, std::vector<elem> w) {
    r.ok = false;
    if (r.violations.size() >= cap) {
      r.truncated = true;
      return;
    }
    r.violations.push_back({std::move(axiom), std::move(w)});
  }
};

void check_module(const FiniteSemimodule& m, Sink& sink) {
  const auto& s = m.base();
  const auto n = static_cast<elem>(s.order());
  const auto k = static_cast<elem>(m.order());
  for (elem x = 0; x < k && !sink.full(); ++x) {
    if (m.add(x, m.zero()) != x) sink.push("madd_identity", {x});
    if (m.act(s.zero(), x) != m.zero()) sink.push("zero_scalar", {x});
    if (m.act(s.one(), x) != x) sink.push("unit_scalar", {x});
    for (elem y = x + 1; y < k; ++y)
      if (m.add(x, y) != m.add(y, x)) sink.push("madd_commutative", {x, y});
    for (elem y = 0; y < k; ++y)
      for (elem z = 0; z < k; ++z)
        if (m.add(m.add(x, y), z) != m.add(x, m.add(y, z))) sink.push("madd_associative", {x, y, z});
  }
  for (elem a = 0; a < n && !sink.full(); ++a) {
    if (m.act(a, m.zero()) != m.zero()) sink.push("action_zero", {a});
    for (elem x = 0; x < k; ++x)
      for (elem y = 0; y < k; ++y)
        if (m.act(a, m.add(x, y)) != m.add(m.act(a, x), m.act(a, y)))
          sink.push("action_additive", {a, x, y});
    for (elem b = 0; b < n; ++b)
      for (elem x = 0; x < k; ++x) {
        if (m.act(s.add(a, b), x) != m.add(m.act(a, x), m.act(b, x)))
          sink.push("scalar_add", {a, b, x});
        if (m.act(s.mul(a, b), x) != m.act(a, m.act(b, x))) sink.push("scalar_mul", {a, b, x});
      }
  }
}

}  // namespace

AxiomReport verify_semimodule(const FiniteSemimodule& m, std::size_t cap) {
  AxiomReport r;
  Sink sink{r, cap};
  check_module(m, sink);
  return r;
}

AxiomReport verify_semialgebra(const FiniteSemialgebra& a, std::size_t cap) {
  AxiomReport r;
  Sink sink{r, cap};
  const auto& m = a.module;
  const auto k = static_cast<elem>(m.order());
  if (a.mul.size() != std::size_t{k} * k) throw input_error("mmul: expected an m x m table");
  if (a.one >= k) throw input_error("one: index out of range");
  for (elem v : a.mul)
    if (v >= k) throw input_error("mmul: value out of range");
  check_module(m, sink);
  const auto n = static_cast<elem>(m.base().order());
  for (elem x = 0; x < k && !sink.full(); ++x) {
    if (a.product(x, a.one) != x) sink.push("mmul_identity", {x});
    for (elem y = 0; y < k; ++y) {
      if (a.product(x, y) != a.product(y, x)) sink.push("mmul_commutative", {x, y});
      for (elem z = 0; z < k; ++z) {
        if (a.product(a.product(x, y), z) != a.product(x, a.product(y, z)))
          sink.push("mmul_associative", {x, y, z});
        if (a.product(x, m.add(y, z)) != m.add(a.product(x, y), a.product(x, z)))
          sink.push("mmul_distributive", {x, y, z});
      }
      for (elem s = 0; s < n; ++s) {
        const elem lhs = m.act(s, a.product(x, y));
        if (lhs != a.product(m.act(s, x), y) || lhs != a.product(x, m.act(s, y)))
          sink.push("bilinear", {s, x, y});
      }
    }
  }
  return r;
}

FiniteSemimodule regular_module(const FiniteSemiring& s) {
  const auto n = s.order();
  return FiniteSemimodule(s, n, s.zero(), {s.add_table().begin(), s.add_table().end()},
                          {s.mul_table().begin(), s.mul_table().end()});
}

FiniteSemimodule trivial_module(const FiniteSemiring& s) {
  return FiniteSemimodule(s, 1, 0, {0}, std::vector<elem>(s.order(), 0));
}

FiniteSemimodule restrict_scalars(const FiniteSemiring& target, const FiniteSemiring& base,
                                  std::span<const elem> phi) {
  if (phi.size() != base.order()) throw input_error("restrict_scalars: phi has wrong length");
  const auto m = target.order();
  std::vector<elem> action(base.order() * m);
  for (elem r = 0; r < base.order(); ++r) {
    if (phi[r] >= m) throw input_error("restrict_scalars: phi value out of range");
    for (elem x = 0; x < m; ++x) action[r * m + x] = target.mul(phi[r], x);
  }
  return FiniteSemimodule(base, m, target.zero(),
                          {target.add_table().begin(), target.add_table().end()},
                          std::move(action));
}

FiniteSemialgebra semiring_as_algebra(const FiniteSemiring& target, const FiniteSemiring& base,
                                      std::span<const elem> phi) {
  return {restrict_scalars(target, base, phi),
          {target.mul_table().begin(), target.mul_table().end()}, target.one()};
}

ElementSet v_set(const FiniteSemimodule& m) {
  const auto k = static_cast<elem>(m.order());
  ElementSet out(k);
  for (elem x = 0; x < k; ++x)
    for (elem y = 0; y < k; ++y)
      if (m.add(x, y) == m.zero()) {
        out.insert(x);
        break;
      }
  return out;
}

FiniteSemiring expectation_semiring(const FiniteSemiring& s, const FiniteSemimodule& m,
                                    std::size_t size_cap) {
  const std::size_t n = s.order(), k = m.order();
  if (n * k > size_cap)
    throw size_error("expectation_semiring: order " + std::to_string(n * k) +
                     " exceeds size cap " + std::to_string(size_cap));
  if (!(m.base() == s)) throw input_error("expectation_semiring: module is over a different base");
  auto idx = [k](elem a, elem x) { return static_cast<elem>(a * k + x); };
  std::vector<std::string> labels;
  for (elem a = 0; a < n; ++a)
    for (elem x = 0; x < k; ++x) labels.push_back("(" + s.label(a) + "," + std::to_string(x) + ")");
  return FiniteSemiring::tabulate(
      n * k, idx(s.zero(), m.zero()), idx(s.one(), m.zero()),
      [&](elem p, elem q) {
        return idx(s.add(p / k, q / k), m.add(p % k, q % k));
      },
      [&](elem p, elem q) {
        const elem a = p / k, x = p % k, b = q / k, y = q % k;
        return idx(s.mul(a, b), m.add(m.act(a, y), m.act(b, x)));
      },
      std::move(labels));
}

std::optional<std::vector<elem>> find_semimodule_isomorphism(const FiniteSemimodule& a,
                                                             const FiniteSemimodule& b) {
  if (a.order() != b.order() || !(a.base() == b.base())) return std::nullopt;
  constexpr elem unset = std::numeric_limits<elem>::max();
  const auto k = static_cast<elem>(a.order());
  const auto n = static_cast<elem>(a.base().order());
  struct State {
    std::vector<elem> fwd, bwd, assigned;
  };
  auto assign = [&](State& st, elem x, elem y, std::vector<elem>& q) {
    if (st.fwd[x] != unset) return st.fwd[x] == y;
    if (st.bwd[y] != unset) return false;
    st.fwd[x] = y;
    st.bwd[y] = x;
    st.assigned.push_back(x);
    q.push_back(x);
    return true;
  };
  auto propagate = [&](State& st, std::vector<elem>& q) {
    while (!q.empty()) {
      const elem x = q.back();
      q.pop_back();
      for (elem s = 0; s < n; ++s)
        if (!assign(st, a.act(s, x), b.act(s, st.fwd[x]), q)) return false;
      for (std::size_t i = 0; i < st.assigned.size(); ++i) {
        const elem c = st.assigned[i];
        if (!assign(st, a.add(x, c), b.add(st.fwd[x], st.fwd[c]), q)) return false;
      }
    }
    return true;
  };
  auto search = [&](auto&& self, State& st) -> bool {
    if (st.assigned.size() == k) return true;
    elem x = 0;
    while (st.fwd[x] != unset) ++x;
    for (elem y = 0; y < k; ++y) {
      if (st.bwd[y] != unset) continue;
      State next = st;
      std::vector<elem> q;
      if (assign(next, x, y, q) && propagate(next, q) && self(self, next)) {
        st = std::move(next);
        return true;
      }
    }
    return false;
  };
  State st{std::vector<elem>(k, unset), std::vector<elem>(k, unset), {}};
  std::vector<elem> q;
  if (!assign(st, a.zero(), b.zero(), q) || !propagate(st, q)) return std::nullopt;
  if (!search(search, st)) return std::nullopt;
  return st.fwd;
}

ElementSet subsemimodule_generated_by(const FiniteSemimodule& m, const ElementSet& seed) {
  const auto n = static_cast<elem>(m.base().order());
  ElementSet out(m.order());
  std::vector<elem> members;
  auto put = [&](elem x) {
    if (out.insert(x)) members.push_back(x);
  };
  put(m.zero());
  for (elem g : seed.elements())
    for (elem s = 0; s < n; ++s) put(m.act(s, g));
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) put(m.add(members[i], members[j]));
  return out;
}

SubsemimoduleScan subsemimodule_scan(const FiniteSemialgebra& a, std::size_t order_cap) {
  const auto& m = a.module;
  const auto k = static_cast<elem>(m.order());
  if (k > order_cap)
    throw size_error("subsemimodule_scan: order " + std::to_string(k) + " exceeds cap " +
                     std::to_string(order_cap));
  SubsemimoduleScan scan;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> found;
  auto add = [&](ElementSet e) {
    if (seen.insert(e).second) found.push_back(std::move(e));
  };
  add(subsemimodule_generated_by(m, ElementSet(k)));
  for (elem x = 0; x < k; ++x) add(subsemimodule_generated_by(m, ElementSet::of(k, {x})));
  const std::size_t cyclic = found.size();
  for (std::size_t begin = 0; begin < found.size();) {
    const std::size_t end = found.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = 0; j < cyclic; ++j)
        add(subsemimodule_generated_by(m, found[i] | found[j]));
    begin = end;
  }
  std::sort(found.begin(), found.end(), size_then_lex_less);
  for (const auto& sub : found)
    if (sub.size() != k && sub.size() >= k) scan.jonsson = false;
  // A proper subset of a finite set is smaller, so no proper copy can exist.
  scan.has_proper_iso_copy = !scan.jonsson;
  scan.subsemimodules = std::move(found);

  for (elem x = 0; x < k; ++x) {
    UnitOrNoncancellative e;
    e.element = x;
    std::vector<elem> first(k, std::numeric_limits<elem>::max());
    for (elem y = 0; y < k; ++y) {
      const elem v = a.product(x, y);
      if (v == a.one && !e.inverse) e.inverse = y;
      if (first[v] == std::numeric_limits<elem>::max()) first[v] = y;
      else if (!e.cancellation_failure || std::pair{first[v], y} < *e.cancellation_failure)
        e.cancellation_failure = std::pair{first[v], y};
    }
    e.is_unit = e.inverse.has_value();
    if (!e.is_unit && !e.cancellation_failure) scan.unit_or_noncancellative = false;
    scan.elements.push_back(e);
  }
  return scan;
}

nlohmann::ordered_json to_json(const FiniteSemimodule& m) {
  auto table = [](std::span<const elem> t, std::size_t rows, std::size_t cols) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rows; ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t j = 0; j < cols; ++j) row.push_back(t[i * cols + j]);
      out.push_back(std::move(row));
    }
    return out;
  };
  nlohmann::ordered_json j;
  j["base"] = to_json(m.base());
  j["order"] = m.order();
  j["zero"] = m.zero();
  j["madd"] = table(m.add_table(), m.order(), m.order());
  j["action"] = table(m.action_table(), m.base().order(), m.order());
  return j;
}

namespace {

std::vector<elem> read_rect(const nlohmann::json& j, const char* key, std::size_t rows,
                            std::size_t cols) {
  if (!j.contains(key)) throw input_error(std::string(key) + ": missing required field");
  const auto& t = j.at(key);
  if (!t.is_array() || t.size() != rows)
    throw input_error(std::string(key) + ": expected " + std::to_string(rows) + " rows");
  std::vector<elem> out;
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = t[i];
    const std::string where = std::string(key) + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != cols)
      throw input_error(where + ": ragged row, expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!row[c].is_number_integer())
        throw input_error(where + "[" + std::to_string(c) + "]: expected an integer");
      auto v = row[c].get<std::int64_t>();
      if (v < 0 || static_cast<std::size_t>(v) >= cols)
        throw input_error(where + "[" + std::to_string(c) + "]: value out of range");
      out.push_back(static_cast<elem>(v));
    }
  }
  return out;
}

}  // namespace

FiniteSemimodule semimodule_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw input_error("semimodule: expected a JSON object");
  if (!j.contains("base")) throw input_error("base: missing required field");
  const auto& b = j.at("base");
  FiniteSemiring base = b.is_string() ? read_semiring_file(base_dir / b.get<std::string>())
                                      : from_json(b);
  if (!j.contains("order") || !j.at("order").is_number_integer() || j.at("order").get<long>() <= 0)
    throw input_error("order: expected a positive integer");
  if (!j.contains("zero") || !j.at("zero").is_number_integer())
    throw input_error("zero: expected an integer");
  const auto m = j.at("order").get<std::size_t>();
  const auto zero = j.at("zero").get<long>();
  if (zero < 0 || static_cast<std::size_t>(zero) >= m) throw input_error("zero: index out of range");
  auto madd = read_rect(j, "madd", m, m);
  auto action = read_rect(j, "action", base.order(), m);
  return FiniteSemimodule(std::move(base), m, static_cast<elem>(zero), std::move(madd),
                          std::move(action));
}

}  // namespace semiring
