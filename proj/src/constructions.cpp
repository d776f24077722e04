#include "semiring/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace semiring {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

long parse_long(const std::string& s, const std::string& what) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw input_error(what + ": expected an integer, got '" + s + "'");
  return v;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw input_error(msg);
}

std::size_t checked_product(std::size_t a, std::size_t b, std::size_t cap, const char* what) {
  if (a != 0 && b > cap / a)
    throw size_error(std::string(what) + ": order exceeds size cap " + std::to_string(cap));
  return a * b;
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  FamilySpec spec;
  auto colon = text.find(':');
  std::string name(text.substr(0, colon));
  std::vector<std::string> args;
  if (colon != std::string_view::npos) args = split(text.substr(colon + 1), ',');

  if (name == "boolean") spec.family = Family::boolean;
  else if (name == "chain") spec.family = Family::chain;
  else if (name == "hu") spec.family = Family::hu;
  else if (name == "lagrassa") spec.family = Family::lagrassa;
  else if (name == "zn") spec.family = Family::zn;
  else if (name == "xn") spec.family = Family::xn;
  else if (name == "bni") spec.family = Family::bni;
  else throw input_error("family: unknown family '" + name + "'");

  for (std::size_t k = 0; k < args.size(); ++k) {
    if (spec.family == Family::bni && k == 2) {
      if (args[k] == "canonical") spec.bni_interpretation = BniInterpretation::canonical_congruence;
      else if (args[k] == "literal") spec.bni_interpretation = BniInterpretation::literal_mod;
      else throw input_error("bni interpretation: expected 'canonical' or 'literal', got '" +
                             args[k] + "'");
      continue;
    }
    spec.params.push_back(parse_long(args[k], name + " parameter " + std::to_string(k + 1)));
  }
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  static constexpr const char* names[] = {"boolean", "chain", "hu", "lagrassa",
                                          "zn",      "xn",    "bni"};
  std::string out = names[static_cast<int>(spec.family)];
  for (std::size_t k = 0; k < spec.params.size(); ++k)
    out += (k == 0 ? ":" : ",") + std::to_string(spec.params[k]);
  if (spec.family == Family::bni)
    out += spec.bni_interpretation == BniInterpretation::literal_mod ? ",literal" : ",canonical";
  return out;
}

FiniteSemiring boolean_semiring() {
  return FiniteSemiring(2, 0, 1, {0, 1, 1, 1}, {0, 0, 0, 1}, {"0", "1"});
}

FiniteSemiring chain(std::size_t k) {
  require(k >= 2, "chain: needs at least 2 elements");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back(std::to_string(i));
  return FiniteSemiring::tabulate(
      k, 0, static_cast<elem>(k - 1), [](elem a, elem b) { return std::max(a, b); },
      [](elem a, elem b) { return std::min(a, b); }, std::move(labels));
}

FiniteSemiring hu_semiring() {
  // 0 < u < 1; max, except 1 + 1 = u; min.
  return FiniteSemiring::tabulate(
      3, 0, 2, [](elem a, elem b) -> elem { return (a == 2 && b == 2) ? 1 : std::max(a, b); },
      [](elem a, elem b) { return std::min(a, b); }, {"0", "u", "1"});
}

FiniteSemiring lagrassa_semiring() {
  // Both operations idempotent, 1 + u = u; the remaining entries follow from
  // 0 being the additive identity, 1 the multiplicative identity, 0 absorbing.
  return FiniteSemiring(3, 0, 2,
                        {0, 1, 2,
                         1, 1, 1,
                         2, 1, 2},
                        {0, 0, 0,
                         0, 1, 1,
                         0, 1, 2},
                        {"0", "u", "1"});
}

FiniteSemiring zn(std::size_t n) {
  require(n >= 1, "zn: modulus must be positive");
  const elem one = n == 1 ? 0 : 1;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return FiniteSemiring::tabulate(
      n, 0, one, [n](elem a, elem b) { return (a + b) % n; },
      [n](elem a, elem b) { return (std::size_t{a} * b) % n; }, std::move(labels));
}

FiniteSemiring xn(std::size_t n) {
  require(n >= 1, "xn: n must be at least 1");
  // index 0 = -inf, index k+1 = k
  const auto cap = static_cast<elem>(n + 1);
  std::vector<std::string> labels{"-inf"};
  for (std::size_t k = 0; k <= n; ++k) labels.push_back(std::to_string(k));
  return FiniteSemiring::tabulate(
      n + 2, 0, 1, [](elem a, elem b) { return std::max(a, b); },
      [cap](elem a, elem b) -> elem {
        if (a == 0 || b == 0) return 0;
        return std::min<elem>(a - 1 + b - 1, cap - 1) + 1;
      },
      std::move(labels));
}

FiniteSemiring bni(std::size_t n, std::size_t i, BniInterpretation interp) {
  require(n >= 2, "bni: n must be at least 2");
  require(i <= n - 1, "bni: i must lie in [0, n-1]");
  const std::size_t period = n - i;
  auto fold = [=](std::size_t x) -> elem {
    if (x <= n - 1) return static_cast<elem>(x);
    if (interp == BniInterpretation::literal_mod) return static_cast<elem>(x % period);
    // representative of x mod period inside [i, n-1]
    std::size_t r = (x - i) % period;
    return static_cast<elem>(i + r);
  };
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back(std::to_string(k));
  return FiniteSemiring::tabulate(
      n, 0, 1, [&](elem a, elem b) { return fold(std::size_t{a} + b); },
      [&](elem a, elem b) { return fold(std::size_t{a} * b); }, std::move(labels));
}

Constructed construct_named(const FamilySpec& spec, std::size_t size_cap) {
  auto arity = [&](std::size_t k, const char* name) {
    if (spec.params.size() != k)
      throw input_error(std::string(name) + ": expected " + std::to_string(k) +
                        " parameter(s), got " + std::to_string(spec.params.size()));
  };
  auto positive = [](long v, const char* what) {
    if (v < 0) throw input_error(std::string(what) + ": must be non-negative");
    return static_cast<std::size_t>(v);
  };
  auto capped = [&](std::size_t order, const char* what) {
    if (order > size_cap)
      throw size_error(std::string(what) + ": order " + std::to_string(order) + " exceeds size cap " +
                       std::to_string(size_cap));
    return order;
  };
  auto build = [&]() -> FiniteSemiring {
    switch (spec.family) {
      case Family::boolean: arity(0, "boolean"); return boolean_semiring();
      case Family::hu: arity(0, "hu"); return hu_semiring();
      case Family::lagrassa: arity(0, "lagrassa"); return lagrassa_semiring();
      case Family::chain: arity(1, "chain"); return chain(capped(positive(spec.params[0], "chain k"), "chain"));
      case Family::zn: {
        arity(1, "zn");
        auto n = positive(spec.params[0], "zn n");
        require(n >= 1, "zn: modulus must be positive");
        return zn(capped(n, "zn"));
      }
      case Family::xn: {
        arity(1, "xn");
        const auto n = positive(spec.params[0], "xn n");
        capped(n + 2, "xn");
        return xn(n);
      }
      case Family::bni:
        arity(2, "bni");
        return bni(capped(positive(spec.params[0], "bni n"), "bni"), positive(spec.params[1], "bni i"),
                   spec.bni_interpretation);
    }
    throw input_error("family: unknown");
  };
  FiniteSemiring s = build();
  AxiomReport r = verify_axioms(s);
  return {std::move(s), std::move(r)};
}

FiniteSemiring direct_product(std::span<const FiniteSemiring> factors, std::size_t size_cap) {
  require(!factors.empty(), "direct_product: needs at least one factor");
  std::size_t n = 1;
  for (const auto& f : factors) n = checked_product(n, f.order(), size_cap, "direct_product");
  if (n > size_cap)
    throw size_error("direct_product: order " + std::to_string(n) + " exceeds size cap " +
                     std::to_string(size_cap));

  const std::size_t k = factors.size();
  // strides: first factor most significant
  std::vector<std::size_t> stride(k);
  std::size_t acc = 1;
  for (std::size_t f = k; f-- > 0;) {
    stride[f] = acc;
    acc *= factors[f].order();
  }
  auto digit = [&](std::size_t x, std::size_t f) { return (x / stride[f]) % factors[f].order(); };
  auto combine = [&](std::size_t a, std::size_t b, bool is_add) {
    std::size_t r = 0;
    for (std::size_t f = 0; f < k; ++f) {
      auto da = static_cast<elem>(digit(a, f)), db = static_cast<elem>(digit(b, f));
      r += stride[f] * (is_add ? factors[f].add(da, db) : factors[f].mul(da, db));
    }
    return r;
  };
  elem zero = 0, one = 0;
  for (std::size_t f = 0; f < k; ++f) {
    zero += static_cast<elem>(stride[f] * factors[f].zero());
    one += static_cast<elem>(stride[f] * factors[f].one());
  }
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::string l = "(";
    for (std::size_t f = 0; f < k; ++f) {
      if (f) l += ",";
      l += factors[f].label(static_cast<elem>(digit(x, f)));
    }
    labels[x] = l + ")";
  }
  return FiniteSemiring::tabulate(
      n, zero, one, [&](elem a, elem b) { return combine(a, b, true); },
      [&](elem a, elem b) { return combine(a, b, false); }, std::move(labels));
}

FiniteSemiring direct_product(const FiniteSemiring& a, const FiniteSemiring& b,
                              std::size_t size_cap) {
  std::vector<FiniteSemiring> f{a, b};
  return direct_product(f, size_cap);
}

FiniteSemiring adjoin_zero(const FiniteSemiring& ring) {
  if (!structure_flags(ring).is_ring) throw input_error("adjoin_zero: argument is not a ring");
  if (ring.order() < 2) throw input_error("adjoin_zero: ring must satisfy 1 != 0");
  const auto n = ring.order();
  const auto z = static_cast<elem>(n);
  std::vector<std::string> labels;
  for (elem a = 0; a < n; ++a) labels.push_back(ring.label(a));
  labels.emplace_back("z");
  return FiniteSemiring::tabulate(
      n + 1, z, ring.one(),
      [&](elem a, elem b) -> elem {
        if (a == z) return b;
        if (b == z) return a;
        return ring.add(a, b);
      },
      [&](elem a, elem b) -> elem {
        if (a == z || b == z) return z;
        return ring.mul(a, b);
      },
      std::move(labels));
}

FiniteSemiring dual_numbers(const FiniteSemiring& ring, std::size_t k, std::size_t size_cap) {
  if (!structure_flags(ring).is_ring) throw input_error("dual_numbers: base is not a ring");
  require(k >= 1, "dual_numbers: k must be at least 1");
  const std::size_t r = ring.order();
  std::size_t n = 1;
  for (std::size_t i = 0; i <= k; ++i) n = checked_product(n, r, size_cap, "dual_numbers");
  if (n > size_cap)
    throw size_error("dual_numbers: order " + std::to_string(n) + " exceeds size cap");

  auto unpack = [&](std::size_t x) {
    std::vector<elem> c(k + 1);
    for (std::size_t i = k + 1; i-- > 0;) {
      c[i] = static_cast<elem>(x % r);
      x /= r;
    }
    return c;
  };
  auto pack = [&](const std::vector<elem>& c) {
    std::size_t x = 0;
    for (elem d : c) x = x * r + d;
    return x;
  };
  std::vector<std::vector<elem>> coords(n);
  for (std::size_t x = 0; x < n; ++x) coords[x] = unpack(x);

  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::string l = ring.label(coords[x][0]);
    for (std::size_t i = 1; i <= k; ++i)
      l += "+" + ring.label(coords[x][i]) + "e" + std::to_string(i);
    labels[x] = l;
  }
  std::vector<elem> zero_c(k + 1, ring.zero()), one_c(k + 1, ring.zero());
  one_c[0] = ring.one();
  return FiniteSemiring::tabulate(
      n, static_cast<elem>(pack(zero_c)), static_cast<elem>(pack(one_c)),
      [&](elem a, elem b) {
        std::vector<elem> c(k + 1);
        for (std::size_t i = 0; i <= k; ++i) c[i] = ring.add(coords[a][i], coords[b][i]);
        return pack(c);
      },
      [&](elem a, elem b) {
        const auto &x = coords[a], &y = coords[b];
        std::vector<elem> c(k + 1);
        c[0] = ring.mul(x[0], y[0]);
        for (std::size_t i = 1; i <= k; ++i)
          c[i] = ring.add(ring.mul(x[0], y[i]), ring.mul(x[i], y[0]));
        return pack(c);
      },
      std::move(labels));
}

namespace {

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

FiniteSemiring trunc_poly_ring(std::size_t p, std::span<const std::size_t> exponents,
                               std::size_t size_cap) {
  if (!is_prime(p)) throw input_error("trunc_poly_ring: " + std::to_string(p) + " is not prime");
  require(!exponents.empty(), "trunc_poly_ring: needs at least one variable");
  std::size_t monomials = 1;
  for (auto m : exponents) {
    require(m >= 1, "trunc_poly_ring: exponents must be at least 1");
    monomials = checked_product(monomials, m, size_cap, "trunc_poly_ring");
  }
  std::size_t n = 1;
  for (std::size_t j = 0; j < monomials; ++j) n = checked_product(n, p, size_cap, "trunc_poly_ring");
  if (n > size_cap)
    throw size_error("trunc_poly_ring: order " + std::to_string(n) + " exceeds size cap");

  const std::size_t vars = exponents.size();
  // exponent vector of monomial j (x1 least significant)
  std::vector<std::vector<std::size_t>> expo(monomials, std::vector<std::size_t>(vars));
  for (std::size_t j = 0; j < monomials; ++j) {
    std::size_t x = j;
    for (std::size_t v = 0; v < vars; ++v) {
      expo[j][v] = x % exponents[v];
      x /= exponents[v];
    }
  }
  // product monomial index, or npos when it is truncated away
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> mono_mul(monomials * monomials, npos);
  for (std::size_t a = 0; a < monomials; ++a)
    for (std::size_t b = 0; b < monomials; ++b) {
      std::size_t idx = 0, w = 1;
      bool alive = true;
      for (std::size_t v = 0; v < vars; ++v) {
        auto e = expo[a][v] + expo[b][v];
        if (e >= exponents[v]) {
          alive = false;
          break;
        }
        idx += e * w;
        w *= exponents[v];
      }
      if (alive) mono_mul[a * monomials + b] = idx;
    }

  std::vector<std::vector<std::size_t>> coef(n, std::vector<std::size_t>(monomials));
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t y = x;
    for (std::size_t j = 0; j < monomials; ++j) {
      coef[x][j] = y % p;
      y /= p;
    }
  }
  auto pack = [&](const std::vector<std::size_t>& c) {
    std::size_t x = 0;
    for (std::size_t j = monomials; j-- > 0;) x = x * p + c[j];
    return x;
  };
  auto mono_name = [&](std::size_t j) {
    std::string s;
    for (std::size_t v = 0; v < vars; ++v) {
      if (expo[j][v] == 0) continue;
      s += vars == 1 ? "x" : "x" + std::to_string(v + 1);
      if (expo[j][v] > 1) s += "^" + std::to_string(expo[j][v]);
    }
    return s;
  };
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::string l;
    for (std::size_t j = 0; j < monomials; ++j) {
      if (coef[x][j] == 0) continue;
      if (!l.empty()) l += "+";
      auto m = mono_name(j);
      if (m.empty()) l += std::to_string(coef[x][j]);
      else l += (coef[x][j] == 1 ? "" : std::to_string(coef[x][j])) + m;
    }
    labels[x] = l.empty() ? "0" : l;
  }
  return FiniteSemiring::tabulate(
      n, 0, n == 1 ? 0 : 1,
      [&](elem a, elem b) {
        std::vector<std::size_t> c(monomials);
        for (std::size_t j = 0; j < monomials; ++j) c[j] = (coef[a][j] + coef[b][j]) % p;
        return pack(c);
      },
      [&](elem a, elem b) {
        std::vector<std::size_t> c(monomials, 0);
        for (std::size_t i = 0; i < monomials; ++i) {
          if (coef[a][i] == 0) continue;
          for (std::size_t j = 0; j < monomials; ++j) {
            auto m = mono_mul[i * monomials + j];
            if (m == npos || coef[b][j] == 0) continue;
            c[m] = (c[m] + coef[a][i] * coef[b][j]) % p;
          }
        }
        return pack(c);
      },
      std::move(labels));
}

MonoidTable free_semilattice(std::size_t k) {
  require(k <= 12, "free_semilattice: at most 12 generators");
  const std::size_t n = std::size_t{1} << k;
  MonoidTable m{n, 0, std::vector<elem>(n * n)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m.table[a * n + b] = static_cast<elem>(a | b);
  return m;
}

FiniteSemiring nilpotent_monoid_semiring(const MonoidTable& p) {
  const std::size_t m = p.order;
  require(m >= 1, "nilpotent_monoid_semiring: P must be nonempty");
  require(p.table.size() == m * m, "nilpotent_monoid_semiring: table must be |P| x |P|");
  require(p.identity < m, "nilpotent_monoid_semiring: identity out of range");
  for (elem v : p.table) require(v < m, "nilpotent_monoid_semiring: table entry out of range");
  for (elem a = 0; a < m; ++a) {
    require(p.op(a, p.identity) == a, "nilpotent_monoid_semiring: identity law fails at " +
                                          std::to_string(a));
    require(p.op(a, a) == a,
            "nilpotent_monoid_semiring: P not idempotent at " + std::to_string(a));
    for (elem b = 0; b < m; ++b) {
      require(p.op(a, b) == p.op(b, a), "nilpotent_monoid_semiring: P not commutative at (" +
                                            std::to_string(a) + "," + std::to_string(b) + ")");
      for (elem c = 0; c < m; ++c)
        require(p.op(p.op(a, b), c) == p.op(a, p.op(b, c)),
                "nilpotent_monoid_semiring: P not associative at (" + std::to_string(a) + "," +
                    std::to_string(b) + "," + std::to_string(c) + ")");
    }
  }
  const auto one = static_cast<elem>(m);
  const elem zero = p.identity;
  std::vector<std::string> labels;
  for (elem a = 0; a < m; ++a) labels.push_back(a == zero ? "0" : "p" + std::to_string(a));
  labels.emplace_back("1");
  return FiniteSemiring::tabulate(
      m + 1, zero, one,
      [&](elem a, elem b) -> elem {
        if (a == one || b == one) return one;
        return p.op(a, b);
      },
      [&](elem a, elem b) -> elem {
        if (a == one) return b;
        if (b == one) return a;
        return zero;
      },
      std::move(labels));
}

}  // namespace semiring
