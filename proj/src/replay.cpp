#include <algorithm>
#include <cstdint>
#include <set>

#include "semiring/codec.hpp"
#include "semiring/verifier.hpp"

namespace semiring {

namespace {

using Mask = std::uint32_t;
constexpr std::size_t kMaxSubsetOrder = 20;

struct Tables {
  std::size_t n;
  elem zero, one;
  std::vector<elem> add, mul;

  explicit Tables(const FiniteSemiring& s)
      : n(s.order()), zero(s.zero()), one(s.one()),
        add(s.add_table().begin(), s.add_table().end()),
        mul(s.mul_table().begin(), s.mul_table().end()) {}

  elem p(elem a, elem b) const { return add[a * n + b]; }
  elem t(elem a, elem b) const { return mul[a * n + b]; }

  std::vector<elem> powers(elem a, std::size_t top) const {
    std::vector<elem> pw{one};
    while (pw.size() <= top) pw.push_back(t(pw.back(), a));
    return pw;
  }
  bool unit(elem a) const {
    for (elem x = 0; x < n; ++x)
      if (t(a, x) == one) return true;
    return false;
  }
  bool zd(elem a) const {
    for (elem x = 0; x < n; ++x)
      if (x != zero && t(a, x) == zero) return true;
    return false;
  }
  bool nilpotent(elem a) const {
    const auto pw = powers(a, n);
    return std::find(pw.begin() + 1, pw.end(), zero) != pw.end();
  }
  bool cancellative(elem a) const {
    for (elem x = 0; x < n; ++x)
      for (elem y = x + 1; y < n; ++y)
        if (t(a, x) == t(a, y)) return false;
    return true;
  }

  bool property_at(const std::string& prop, elem a) const {
    if (prop == "classical") return unit(a) || zd(a);
    if (prop == "completely_primary") return unit(a) || nilpotent(a);
    if (prop == "condition3_unit_or_noncancellative") return unit(a) || !cancellative(a);
    if (prop == "entire") return a == zero || !zd(a);
    if (prop == "nilpotent_free") return a == zero || !nilpotent(a);
    if (prop == "mult_idempotent") return t(a, a) == a;
    if (prop == "complemented") {
      for (elem c = 0; c < n; ++c)
        if (t(a, c) == zero && p(a, c) == one) return true;
      return false;
    }
    if (prop == "pi_regular") {
      const auto pw = powers(a, 2 * n + 1);
      for (std::size_t k = 1; k <= 2 * n; ++k)
        for (elem x = 0; x < n; ++x)
          if (t(pw[k + 1], x) == pw[k]) return true;
      return false;
    }
    if (prop == "periodic") {
      const auto pw = powers(a, n + 1);
      for (std::size_t j = 2; j <= n + 1; ++j)
        for (std::size_t m = 1; m < j; ++m)
          if (pw[m] == pw[j]) return true;
      return false;
    }
    if (prop == "simply_periodic") {
      const auto pw = powers(a, n + 1);
      for (std::size_t j = 2; j <= n + 1; ++j)
        if (pw[j] == a) return true;
      return false;
    }
    throw input_error("replay: unknown property '" + prop + "'");
  }

  bool law_fails(const std::string& axiom, const std::vector<elem>& w) const {
    for (elem e : w)
      if (e >= n) return false;
    if (axiom == "zero_ne_one") return n >= 2 && zero == one;
    if (w.empty()) return false;
    const elem x = w[0];
    if (axiom == "add_identity") return p(x, zero) != x;
    if (axiom == "mul_identity") return t(x, one) != x;
    if (axiom == "absorbing_zero") return t(x, zero) != zero;
    if (w.size() < 2) return false;
    const elem y = w[1];
    if (axiom == "add_commutative") return p(x, y) != p(y, x);
    if (axiom == "mul_commutative") return t(x, y) != t(y, x);
    if (w.size() < 3) return false;
    const elem z = w[2];
    if (axiom == "add_associative") return p(p(x, y), z) != p(x, p(y, z));
    if (axiom == "mul_associative") return t(t(x, y), z) != t(x, t(y, z));
    if (axiom == "distributive") return t(x, p(y, z)) != p(t(x, y), t(x, z));
    return false;
  }

  bool axioms_ok() const {
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

  bool in(Mask m, elem a) const { return (m >> a) & 1u; }

  bool is_ideal(Mask m) const {
    if (!in(m, zero)) return false;
    for (elem a = 0; a < n; ++a) {
      if (!in(m, a)) continue;
      for (elem b = 0; b < n; ++b)
        if ((in(m, b) && !in(m, p(a, b))) || !in(m, t(b, a))) return false;
    }
    return true;
  }

  std::vector<Mask> ideals() const {
    if (n > kMaxSubsetOrder) throw size_error("replay: order too large for subset enumeration");
    std::vector<Mask> out;
    for (Mask m = 1; m < (Mask{1} << n); ++m)
      if (is_ideal(m)) out.push_back(m);
    return out;
  }

  Mask full() const { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

  bool prime(Mask m) const {
    if (m == full()) return false;
    for (elem a = 0; a < n; ++a)
      for (elem b = 0; b < n; ++b)
        if (in(m, t(a, b)) && !in(m, a) && !in(m, b)) return false;
    return true;
  }

  /// Smallest ideal containing `seed`: intersection of every ideal above it.
  Mask closure(const std::vector<Mask>& all, Mask seed) const {
    Mask r = full();
    for (Mask m : all)
      if ((m & seed) == seed) r &= m;
    return r;
  }
};

Mask mask_of(const nlohmann::json& arr) {
  Mask m = 0;
  for (const auto& v : arr) m |= Mask{1} << v.get<elem>();
  return m;
}

std::set<Mask> mask_set(const nlohmann::json& arr) {
  std::set<Mask> s;
  for (const auto& a : arr) s.insert(mask_of(a));
  return s;
}

FiniteSemiring instance_of(const nlohmann::json& inst) { return from_json(inst.at("semiring")); }

bool is_bijective_hom(const Tables& a, const Tables& b, const std::vector<elem>& map) {
  if (map.size() != a.n || a.n != b.n) return false;
  std::vector<bool> hit(b.n, false);
  for (elem x : map) {
    if (x >= b.n || hit[x]) return false;
    hit[x] = true;
  }
  if (map[a.zero] != b.zero || map[a.one] != b.one) return false;
  for (elem x = 0; x < a.n; ++x)
    for (elem y = 0; y < a.n; ++y)
      if (map[a.p(x, y)] != b.p(map[x], map[y]) || map[a.t(x, y)] != b.t(map[x], map[y])) return false;
  return true;
}

std::string check(bool ok, const std::string& why) { return ok ? std::string{} : why; }

std::string replay_product(const Tables& s, const nlohmann::json& w) {
  std::vector<Tables> fs;
  for (const auto& f : w.at("factors")) fs.emplace_back(instance_of(f));
  std::size_t order = 1;
  for (const auto& f : fs) order *= f.n;
  if (order != s.n) return "product order mismatch";
  auto digits = [&](elem x) {
    std::vector<elem> d(fs.size());
    for (std::size_t k = fs.size(); k-- > 0;) {
      d[k] = static_cast<elem>(x % fs[k].n);
      x = static_cast<elem>(x / fs[k].n);
    }
    return d;
  };
  auto compose = [&](const std::vector<elem>& d) {
    elem x = 0;
    for (std::size_t k = 0; k < fs.size(); ++k) x = static_cast<elem>(x * fs[k].n + d[k]);
    return x;
  };
  std::vector<elem> z, o;
  for (const auto& f : fs) {
    z.push_back(f.zero);
    o.push_back(f.one);
  }
  if (s.zero != compose(z) || s.one != compose(o)) return "product zero/one mismatch";
  for (elem x = 0; x < s.n; ++x)
    for (elem y = 0; y < s.n; ++y) {
      const auto dx = digits(x), dy = digits(y);
      std::vector<elem> sum(fs.size()), prod(fs.size());
      for (std::size_t k = 0; k < fs.size(); ++k) {
        sum[k] = fs[k].p(dx[k], dy[k]);
        prod[k] = fs[k].t(dx[k], dy[k]);
      }
      if (s.p(x, y) != compose(sum) || s.t(x, y) != compose(prod)) return "product table mismatch";
    }
  return {};
}

std::string replay_ideal_semiring(const Tables& s, const nlohmann::json& w) {
  const Tables id(instance_of(w.at("target")));
  std::vector<Mask> listed;
  for (const auto& a : w.at("ideals")) listed.push_back(mask_of(a));
  const auto all = s.ideals();
  if (std::set<Mask>(listed.begin(), listed.end()) != std::set<Mask>(all.begin(), all.end()) ||
      listed.size() != all.size())
    return "ideal list differs from subset enumeration";
  if (id.n != listed.size()) return "Id(S) order differs from ideal count";
  auto index = [&](Mask m) -> std::optional<elem> {
    for (elem k = 0; k < listed.size(); ++k)
      if (listed[k] == m) return k;
    return std::nullopt;
  };
  if (index(Mask{1} << s.zero) != id.zero || index(s.full()) != id.one) return "Id(S) zero/one mismatch";
  for (elem i = 0; i < id.n; ++i)
    for (elem j = 0; j < id.n; ++j) {
      Mask sum = 0, prods = 0;
      for (elem a = 0; a < s.n; ++a)
        for (elem b = 0; b < s.n; ++b)
          if (s.in(listed[i], a) && s.in(listed[j], b)) {
            sum |= Mask{1} << s.p(a, b);
            prods |= Mask{1} << s.t(a, b);
          }
      if (index(sum) != id.p(i, j)) return "Id(S) sum mismatch";
      if (index(s.closure(all, prods)) != id.t(i, j)) return "Id(S) product mismatch";
    }
  return {};
}

}  // namespace

std::string replay_witness(const nlohmann::json& w) {
  try {
    const std::string kind = w.at("kind").get<std::string>();
    const FiniteSemiring inst = instance_of(w.at("instance"));
    const Tables s(inst);
    if (kind == "property_fails") {
      const elem e = w.at("element").get<elem>();
      return check(e < s.n && !s.property_at(w.at("property").get<std::string>(), e),
                   "property holds at the claimed element");
    }
    if (kind == "property_holds") {
      const auto prop = w.at("property").get<std::string>();
      for (elem a = 0; a < s.n; ++a)
        if (!s.property_at(prop, a)) return "property fails at element " + std::to_string(a);
      return {};
    }
    if (kind == "axiom_violation")
      return check(s.law_fails(w.at("axiom").get<std::string>(), w.at("tuple").get<std::vector<elem>>()),
                   "axiom holds at the tuple");
    if (kind == "bni_instance") {
      const bool ok = s.axioms_ok();
      if (ok != w.at("axioms_ok").get<bool>()) return "axiom validity mismatch";
      if (!ok) {
        const auto& v = w.at("violation");
        return check(s.law_fails(v.at("axiom").get<std::string>(), v.at("tuple").get<std::vector<elem>>()),
                     "violation does not reproduce");
      }
      bool classical = true;
      for (elem a = 0; a < s.n; ++a) classical = classical && s.property_at("classical", a);
      if (classical != w.at("classical").get<bool>()) return "classicality mismatch";
      if (!classical) {
        const elem e = w.at("element").get<elem>();
        return check(e < s.n && !s.property_at("classical", e), "element is a unit or zero-divisor");
      }
      return {};
    }
    if (kind == "isomorphism") {
      const Tables t(instance_of(w.at("target")));
      return check(is_bijective_hom(s, t, w.at("map").get<std::vector<elem>>()), "map is not an isomorphism");
    }
    if (kind == "direct_product") return replay_product(s, w);
    if (kind == "ideal_semiring") return replay_ideal_semiring(s, w);
    if (kind == "ideal_facts") {
      const auto all = s.ideals();
      if (all.size() != w.at("ideal_count").get<std::size_t>()) return "ideal count mismatch";
      std::set<Mask> primes, maximals;
      for (Mask m : all) {
        if (s.prime(m)) primes.insert(m);
        if (m == s.full()) continue;
        bool maximal = true;
        for (Mask o : all)
          if (o != m && o != s.full() && (o & m) == m) maximal = false;
        if (maximal) maximals.insert(m);
      }
      if (primes != mask_set(w.at("primes"))) return "prime ideals mismatch";
      if (maximals != mask_set(w.at("maximals"))) return "maximal ideals mismatch";
      Mask nil = 0;
      for (elem a = 0; a < s.n; ++a)
        if (s.nilpotent(a)) nil |= Mask{1} << a;
      return check(nil == mask_of(w.at("nilpotents")), "nilpotent set mismatch");
    }
    if (kind == "total_quotient") {
      if (s.n > kMaxSubsetOrder) return "order too large for replay";
      Mask mc = 0;
      for (elem a = 0; a < s.n; ++a)
        if (s.cancellative(a)) mc |= Mask{1} << a;
      if (mc != mask_of(w.at("mc"))) return "cancellative set mismatch";
      for (elem a = 0; a < s.n; ++a)
        if (s.in(mc, a) && !s.unit(a)) return "a cancellative element is not a unit";
      const Tables q(instance_of(w.at("target")));
      return check(is_bijective_hom(s, q, w.at("map").get<std::vector<elem>>()),
                   "canonical map is not an isomorphism onto the quotient");
    }
    if (kind == "ann_ann") {
      const elem b = w.at("element").get<elem>();
      if (b >= s.n) return "element out of range";
      Mask ann = 0, annann = 0;
      for (elem x = 0; x < s.n; ++x)
        if (s.t(x, b) == s.zero) ann |= Mask{1} << x;
      for (elem x = 0; x < s.n; ++x) {
        bool kills = true;
        for (elem y = 0; y < s.n; ++y)
          if (s.in(ann, y) && s.t(x, y) != s.zero) kills = false;
        if (kills) annann |= Mask{1} << x;
      }
      const Mask principal = s.closure(s.ideals(), Mask{1} << b);
      if (annann != mask_of(w.at("ann_ann"))) return "AnnAnn mismatch";
      if (principal != mask_of(w.at("principal"))) return "principal ideal mismatch";
      return check((annann == principal) == w.at("equal").get<bool>(), "equality flag mismatch");
    }
    return "unknown witness kind '" + kind + "'";
  } catch (const std::exception& e) {
    return std::string("malformed witness: ") + e.what();
  }
}

ReplayOutcome replay_report(const nlohmann::json& report) {
  ReplayOutcome out;
  for (const auto& c : report.at("claims")) {
    const auto& ws = c.at("witnesses");
    for (std::size_t k = 0; k < ws.size(); ++k) {
      ++out.checked;
      const std::string why = replay_witness(ws[k]);
      if (!why.empty()) {
        ++out.failed;
        out.failures.push_back(c.at("id").get<std::string>() + " witness " + std::to_string(k) + ": " + why);
      }
    }
  }
  return out;
}

}  // namespace semiring
