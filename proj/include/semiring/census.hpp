#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "semiring/core.hpp"
#include "semiring/deciders.hpp"

namespace semiring {

inline constexpr std::size_t kCensusDefaultMaxOrder = 4;
inline constexpr std::size_t kCensusHardMaxOrder = 5;

struct CensusOptions {
  bool up_to_iso = false;
  std::optional<Property> filter;
  /// 0 means std::thread::hardware_concurrency().
  unsigned jobs = 0;
  /// Required for order 5.
  bool long_run = false;
  /// When set, progress is saved here every `checkpoint_every` additive tables
  /// and, if the file already exists, the run resumes from it.
  std::filesystem::path checkpoint;
  std::size_t checkpoint_every = 256;
};

/// Commutative monoid tables on {0..n-1} with the given identity and, if set,
/// absorbing element, in lexicographic order of the free cells.
std::vector<std::vector<elem>> enumerate_comm_monoids(std::size_t n, elem identity,
                                                      std::optional<elem> absorbing);

/// Lexicographically least (add, mul) encoding over relabelings fixing zero and one.
/// Expects zero = 0 and one = 1 (zero = one = 0 for order 1).
std::vector<elem> canonical_key(const FiniteSemiring& s);
/// The relabeled semiring whose tables realise canonical_key.
FiniteSemiring canonical_form(const FiniteSemiring& s);

/// Every commutative semiring on {0..n-1} with zero 0 and one 1.
/// Raw mode yields all valid table pairs ordered by (additive table, multiplicative
/// table); up_to_iso yields canonical forms sorted by canonical key.
std::vector<FiniteSemiring> enumerate_semirings(std::size_t n, const CensusOptions& opts = {});

struct CensusRecord {
  std::size_t order = 0;
  std::size_t total_tables = 0;
  std::size_t iso_classes = 0;
  std::map<std::string, std::size_t> per_property;
  std::vector<FiniteSemiring> representatives;
};

/// Runs the full census at order n (with dedup) and evaluates every property.
/// opts.up_to_iso and opts.filter are ignored.
CensusRecord census_stats(std::size_t n, const CensusOptions& opts = {});

nlohmann::ordered_json to_json(const CensusRecord& r);

/// Iso classes of order n, computed once per process and shared.
const std::vector<FiniteSemiring>& census_classes(std::size_t n);

}  // namespace semiring
