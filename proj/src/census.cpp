#include "semiring/census.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "semiring/codec.hpp"

namespace semiring {

namespace {

constexpr int kUnset = -1;

struct MonoidSearch {
  std::size_t n;
  std::vector<int> t;
  std::vector<std::pair<elem, elem>> cells;
  std::vector<std::vector<elem>> out;

  int at(int x, int y) const { return t[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)]; }

  bool associative_so_far() const {
    const int m = static_cast<int>(n);
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) {
        const int xy = at(x, y);
        if (xy == kUnset) continue;
        for (int z = 0; z < m; ++z) {
          const int yz = at(y, z);
          if (yz == kUnset) continue;
          const int l = at(xy, z), r = at(x, yz);
          if (l != kUnset && r != kUnset && l != r) return false;
        }
      }
    return true;
  }

  void run(std::size_t k) {
    if (k == cells.size()) {
      out.emplace_back(t.begin(), t.end());
      return;
    }
    const auto [i, j] = cells[k];
    for (elem v = 0; v < n; ++v) {
      t[i * n + j] = t[j * n + i] = static_cast<int>(v);
      if (associative_so_far()) run(k + 1);
    }
    t[i * n + j] = t[j * n + i] = kUnset;
  }
};

bool distributive(std::size_t n, const std::vector<elem>& add, const std::vector<elem>& mul) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = b; c < n; ++c)
        if (mul[a * n + add[b * n + c]] != add[mul[a * n + b] * n + mul[a * n + c]]) return false;
  return true;
}

std::vector<elem> key_of(std::size_t n, const std::vector<elem>& add, const std::vector<elem>& mul) {
  std::vector<elem> perm(n);
  std::iota(perm.begin(), perm.end(), elem{0});
  const std::size_t fixed = std::min<std::size_t>(n, 2);
  std::vector<elem> best, cur(2 * n * n);
  do {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        cur[perm[a] * n + perm[b]] = perm[add[a * n + b]];
        cur[n * n + perm[a] * n + perm[b]] = perm[mul[a * n + b]];
      }
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin() + static_cast<std::ptrdiff_t>(fixed), perm.end()));
  return best;
}

FiniteSemiring from_key(std::size_t n, const std::vector<elem>& key) {
  const elem one = n > 1 ? 1 : 0;
  return FiniteSemiring(n, 0, one, std::vector<elem>(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(n * n)),
                        std::vector<elem>(key.begin() + static_cast<std::ptrdiff_t>(n * n), key.end()));
}

void check_order(std::size_t n, const CensusOptions& opts) {
  if (n == 0) throw input_error("census: order must be at least 1");
  if (n > kCensusHardMaxOrder)
    throw size_error("census: order " + std::to_string(n) + " exceeds the hard cap " +
                     std::to_string(kCensusHardMaxOrder));
  if (n > kCensusDefaultMaxOrder && !opts.long_run)
    throw size_error("census: order " + std::to_string(n) + " requires the long-run flag");
}

unsigned worker_count(unsigned jobs) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  return jobs;
}

struct Tables {
  std::vector<std::vector<elem>> adds, muls;
};

Tables monoid_tables(std::size_t n) {
  const elem one = n > 1 ? 1 : 0;
  return {enumerate_comm_monoids(n, 0, std::nullopt), enumerate_comm_monoids(n, one, elem{0})};
}

using Pair = std::pair<std::size_t, std::size_t>;

void save_checkpoint(const std::filesystem::path& path, std::size_t n, std::size_t cursor,
                     const std::vector<Pair>& pairs) {
  nlohmann::ordered_json j;
  j["order"] = n;
  j["prefix_cursor"] = cursor;
  j["partial_counts"] = {{"total_tables", pairs.size()}};
  auto& arr = j["pairs"] = nlohmann::ordered_json::array();
  for (const auto& [a, m] : pairs) arr.push_back({a, m});
  const auto tmp = path.string() + ".tmp";
  write_text_file(tmp, j.dump() + "\n");
  std::filesystem::rename(tmp, path);
}

// All valid (additive index, multiplicative index) pairs in order.
std::vector<Pair> valid_pairs(std::size_t n, const Tables& t, const CensusOptions& opts) {
  std::vector<Pair> pairs;
  std::size_t cursor = 0;
  const bool checkpointing = !opts.checkpoint.empty();
  if (checkpointing && std::filesystem::exists(opts.checkpoint)) {
    const auto j = nlohmann::json::parse(read_text_file(opts.checkpoint));
    if (j.at("order").get<std::size_t>() != n)
      throw input_error("census checkpoint: order " + j.at("order").dump() + " does not match " +
                        std::to_string(n));
    cursor = j.at("prefix_cursor").get<std::size_t>();
    if (cursor > t.adds.size()) throw input_error("census checkpoint: prefix_cursor out of range");
    for (const auto& p : j.at("pairs")) {
      const auto a = p.at(0).get<std::size_t>(), m = p.at(1).get<std::size_t>();
      if (a >= cursor || m >= t.muls.size()) throw input_error("census checkpoint: pair out of range");
      pairs.emplace_back(a, m);
    }
    if (pairs.size() != j.at("partial_counts").at("total_tables").get<std::size_t>())
      throw input_error("census checkpoint: partial_counts.total_tables disagrees with pairs");
  }

  const unsigned jobs = worker_count(opts.jobs);
  const std::size_t chunk = checkpointing ? std::max<std::size_t>(1, opts.checkpoint_every)
                                          : t.adds.size();
  while (cursor < t.adds.size()) {
    const std::size_t end = std::min(t.adds.size(), cursor + chunk);
    std::vector<std::vector<std::size_t>> found(end - cursor);
    std::atomic<std::size_t> next{cursor};
    auto work = [&] {
      for (std::size_t a; (a = next.fetch_add(1)) < end;)
        for (std::size_t m = 0; m < t.muls.size(); ++m)
          if (distributive(n, t.adds[a], t.muls[m])) found[a - cursor].push_back(m);
    };
    if (jobs <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work);
    }
    for (std::size_t a = cursor; a < end; ++a)
      for (std::size_t m : found[a - cursor]) pairs.emplace_back(a, m);
    cursor = end;
    if (checkpointing) save_checkpoint(opts.checkpoint, n, cursor, pairs);
  }
  return pairs;
}

std::vector<std::vector<elem>> canonical_keys(std::size_t n, const Tables& t,
                                              const std::vector<Pair>& pairs, unsigned jobs) {
  std::vector<std::vector<elem>> keys(pairs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < pairs.size();)
      keys[k] = key_of(n, t.adds[pairs[k].first], t.muls[pairs[k].second]);
  };
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work);
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

}  // namespace

std::vector<std::vector<elem>> enumerate_comm_monoids(std::size_t n, elem identity,
                                                      std::optional<elem> absorbing) {
  if (n == 0 || identity >= n || (absorbing && *absorbing >= n))
    throw input_error("enumerate_comm_monoids: element out of range");
  MonoidSearch s{n, std::vector<int>(n * n, kUnset), {}, {}};
  for (elem x = 0; x < n; ++x) {
    s.t[identity * n + x] = s.t[x * n + identity] = static_cast<int>(x);
    if (absorbing) s.t[*absorbing * n + x] = s.t[x * n + *absorbing] = static_cast<int>(*absorbing);
  }
  auto fixed = [&](elem x) { return x == identity || (absorbing && x == *absorbing); };
  for (elem i = 0; i < n; ++i)
    for (elem j = i; j < n; ++j)
      if (!fixed(i) && !fixed(j)) s.cells.emplace_back(i, j);
  if (s.associative_so_far()) s.run(0);
  return s.out;
}

std::vector<elem> canonical_key(const FiniteSemiring& s) {
  const elem one = s.order() > 1 ? 1 : 0;
  if (s.zero() != 0 || s.one() != one)
    throw input_error("canonical_key: expects zero at index 0 and one at index 1");
  const auto add = s.add_table(), mul = s.mul_table();
  return key_of(s.order(), {add.begin(), add.end()}, {mul.begin(), mul.end()});
}

FiniteSemiring canonical_form(const FiniteSemiring& s) {
  return from_key(s.order(), canonical_key(s));
}

std::vector<FiniteSemiring> enumerate_semirings(std::size_t n, const CensusOptions& opts) {
  check_order(n, opts);
  const Tables t = monoid_tables(n);
  const auto pairs = valid_pairs(n, t, opts);
  std::vector<FiniteSemiring> out;
  auto keep = [&](FiniteSemiring s) {
    if (!opts.filter || decide(*opts.filter, s).holds) out.push_back(std::move(s));
  };
  if (opts.up_to_iso) {
    for (const auto& key : canonical_keys(n, t, pairs, worker_count(opts.jobs)))
      keep(from_key(n, key));
  } else {
    const elem one = n > 1 ? 1 : 0;
    for (const auto& [a, m] : pairs) keep(FiniteSemiring(n, 0, one, t.adds[a], t.muls[m]));
  }
  return out;
}

CensusRecord census_stats(std::size_t n, const CensusOptions& opts) {
  check_order(n, opts);
  const Tables t = monoid_tables(n);
  const auto pairs = valid_pairs(n, t, opts);
  CensusRecord r;
  r.order = n;
  r.total_tables = pairs.size();
  for (const auto& key : canonical_keys(n, t, pairs, worker_count(opts.jobs)))
    r.representatives.push_back(from_key(n, key));
  r.iso_classes = r.representatives.size();
  for (Property p : kAllProperties) {
    std::size_t c = 0;
    for (const auto& s : r.representatives) c += decide(p, s).holds ? 1 : 0;
    r.per_property[std::string(property_name(p))] = c;
  }
  return r;
}

nlohmann::ordered_json to_json(const CensusRecord& r) {
  nlohmann::ordered_json j;
  j["order"] = r.order;
  j["total_tables"] = r.total_tables;
  j["iso_classes"] = r.iso_classes;
  auto& pp = j["per_property"] = nlohmann::ordered_json::object();
  for (Property p : kAllProperties) {
    const std::string name(property_name(p));
    pp[name] = r.per_property.at(name);
  }
  auto& reps = j["representatives"] = nlohmann::ordered_json::array();
  for (const auto& s : r.representatives) reps.push_back(to_json(s));
  return j;
}

const std::vector<FiniteSemiring>& census_classes(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<FiniteSemiring>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    CensusOptions opts;
    opts.up_to_iso = true;
    opts.long_run = true;
    it = cache.emplace(n, enumerate_semirings(n, opts)).first;
  }
  return it->second;
}

}  // namespace semiring
