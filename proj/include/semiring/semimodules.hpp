#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "semiring/core.hpp"

namespace semiring {

/// A commutative monoid (M, +, 0_M) with a scalar action of a base semiring.
/// Like FiniteSemiring, construction checks only shapes; laws are checked
/// by verify_semimodule.
class FiniteSemimodule {
 public:
  FiniteSemimodule(FiniteSemiring base, std::size_t order, elem zero, std::vector<elem> add,
                   std::vector<elem> action);

  const FiniteSemiring& base() const noexcept { return base_; }
  std::size_t order() const noexcept { return m_; }
  elem zero() const noexcept { return zero_; }
  elem add(elem x, elem y) const noexcept { return add_[x * m_ + y]; }
  /// s . x
  elem act(elem s, elem x) const noexcept { return action_[s * m_ + x]; }
  std::span<const elem> add_table() const noexcept { return add_; }
  std::span<const elem> action_table() const noexcept { return action_; }

 private:
  FiniteSemiring base_;
  std::size_t m_;
  elem zero_;
  std::vector<elem> add_;
  std::vector<elem> action_;
};

/// A semimodule with a commutative multiplication that is bilinear over the base.
struct FiniteSemialgebra {
  FiniteSemimodule module;
  std::vector<elem> mul;
  elem one = 0;

  elem product(elem a, elem b) const { return mul[a * module.order() + b]; }
};

AxiomReport verify_semimodule(const FiniteSemimodule& m, std::size_t cap = kDefaultViolationCap);

/// Semimodule laws, (A, *, 1_A) commutative monoid, a(b+c) = ab+ac, and
/// s(ab) = (sa)b = a(sb).
AxiomReport verify_semialgebra(const FiniteSemialgebra& a,
                               std::size_t cap = kDefaultViolationCap);

/// S acting on itself by multiplication.
FiniteSemimodule regular_module(const FiniteSemiring& s);
/// {0} over S.
FiniteSemimodule trivial_module(const FiniteSemiring& s);
/// The additive monoid of `target` with r . x = phi(r) * x, for a map phi: base -> target.
FiniteSemimodule restrict_scalars(const FiniteSemiring& target, const FiniteSemiring& base,
                                  std::span<const elem> phi);
/// `target` as a semialgebra over `base` through phi.
FiniteSemialgebra semiring_as_algebra(const FiniteSemiring& target, const FiniteSemiring& base,
                                      std::span<const elem> phi);

/// Additively invertible elements of M.
ElementSet v_set(const FiniteSemimodule& m);

/// S x M with (s1,m1)+(s2,m2) componentwise and (s1,m1)(s2,m2) = (s1 s2, s1 m2 + s2 m1).
/// Index of (s, x) is s*|M| + x.
FiniteSemiring expectation_semiring(const FiniteSemiring& s, const FiniteSemimodule& m,
                                    std::size_t size_cap = kDefaultSizeCap);

/// Monoid bijection commuting with the action; both modules must share a base.
std::optional<std::vector<elem>> find_semimodule_isomorphism(const FiniteSemimodule& a,
                                                             const FiniteSemimodule& b);

/// Least subsemimodule containing `seed`.
ElementSet subsemimodule_generated_by(const FiniteSemimodule& m, const ElementSet& seed);

inline constexpr std::size_t kDefaultSubmoduleOrderCap = 64;

struct UnitOrNoncancellative {
  elem element = 0;
  bool is_unit = false;
  std::optional<elem> inverse;
  /// x1 < x2 with a*x1 == a*x2.
  std::optional<std::pair<elem, elem>> cancellation_failure;
};

struct SubsemimoduleScan {
  /// Sorted by size then lexicographically.
  std::vector<ElementSet> subsemimodules;
  /// A proper subsemimodule isomorphic to the whole. Always false for a
  /// finite carrier: a proper subset has fewer elements.
  bool has_proper_iso_copy = false;
  /// Every proper subsemimodule has strictly fewer elements (the Jonsson property).
  bool jonsson = true;
  bool unit_or_noncancellative = true;
  std::vector<UnitOrNoncancellative> elements;
};

SubsemimoduleScan subsemimodule_scan(const FiniteSemialgebra& a,
                                     std::size_t order_cap = kDefaultSubmoduleOrderCap);

/// File form: {"base": <semiring object or path>, "order", "zero", "madd", "action"}.
nlohmann::ordered_json to_json(const FiniteSemimodule& m);
/// `base_dir` resolves a string-valued base as a relative path.
FiniteSemimodule semimodule_from_json(const nlohmann::json& j,
                                      const std::filesystem::path& base_dir = {});

}  // namespace semiring
