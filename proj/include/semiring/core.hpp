#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "semiring/element_set.hpp"
#include "semiring/types.hpp"

namespace semiring {

/// A finite commutative semiring given by its operation tables.
///
/// Elements are the indices 0..order-1. The additive identity and the
/// multiplicative identity are explicit so that constructions can keep a
/// natural labelling (e.g. -inf at index 0 in X_n). Tables are row-major:
/// add(i, j) is the index of i + j.
///
/// The constructor only checks the shape of the data (dimensions and index
/// ranges); the algebraic laws are checked by verify_axioms, so a
/// FiniteSemiring can also hold a candidate that fails them.
class FiniteSemiring {
 public:
  FiniteSemiring(std::size_t order, elem zero, elem one, std::vector<elem> add,
                 std::vector<elem> mul, std::vector<std::string> labels = {});

  template <class AddFn, class MulFn>
  static FiniteSemiring tabulate(std::size_t order, elem zero, elem one, AddFn&& add_fn,
                                 MulFn&& mul_fn, std::vector<std::string> labels = {}) {
    std::vector<elem> add(order * order), mul(order * order);
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j) {
        add[i * order + j] = static_cast<elem>(add_fn(static_cast<elem>(i), static_cast<elem>(j)));
        mul[i * order + j] = static_cast<elem>(mul_fn(static_cast<elem>(i), static_cast<elem>(j)));
      }
    return FiniteSemiring(order, zero, one, std::move(add), std::move(mul), std::move(labels));
  }

  std::size_t order() const noexcept { return n_; }
  elem zero() const noexcept { return zero_; }
  elem one() const noexcept { return one_; }

  elem add(elem a, elem b) const noexcept { return add_[a * n_ + b]; }
  elem mul(elem a, elem b) const noexcept { return mul_[a * n_ + b]; }

  std::span<const elem> add_table() const noexcept { return add_; }
  std::span<const elem> mul_table() const noexcept { return mul_; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Display name of an element; falls back to the decimal index.
  std::string label(elem e) const;

  /// s^k for k >= 0 (s^0 = one).
  elem power(elem s, std::size_t k) const noexcept;

  bool operator==(const FiniteSemiring&) const = default;

 private:
  std::size_t n_;
  elem zero_;
  elem one_;
  std::vector<elem> add_;
  std::vector<elem> mul_;
  std::vector<std::string> labels_;
};

struct AxiomViolation {
  std::string axiom;
  std::vector<elem> witness;
  bool operator==(const AxiomViolation&) const = default;
};

struct AxiomReport {
  bool ok = true;
  std::vector<AxiomViolation> violations;
  /// True when checking stopped early because the violation cap was reached.
  bool truncated = false;
};

inline constexpr std::size_t kDefaultViolationCap = 16;

/// Checks every semiring law exhaustively, collecting up to `cap` violations.
///
/// Axiom names: add_commutative, add_associative, add_identity,
/// mul_commutative, mul_associative, mul_identity, distributive,
/// absorbing_zero, zero_ne_one. Witnesses are the element indices that
/// exhibit the failure, in the order the law quantifies over them.
AxiomReport verify_axioms(const FiniteSemiring& s, std::size_t cap = kDefaultViolationCap);

/// Re-evaluates one violation against the tables.
bool violation_reproduces(const FiniteSemiring& s, const AxiomViolation& v);

struct ElementProfile {
  elem element = 0;
  bool is_unit = false;
  std::optional<elem> inverse;
  bool is_zero_divisor = false;
  /// Nonzero x with element * x = 0, smallest index.
  std::optional<elem> annihilated;
  bool is_nilpotent = false;
  std::optional<std::size_t> nilpotency_exponent;
  bool is_cancellative = false;
  /// x1 < x2 with element*x1 == element*x2, lexicographically smallest.
  std::optional<std::pair<elem, elem>> cancellation_failure;
  bool is_regular = false;
  bool is_add_invertible = false;
};

struct Classification {
  std::vector<ElementProfile> profiles;
  ElementSet units;
  ElementSet zero_divisors;
  ElementSet nilpotents;
  ElementSet cancellative;
};

/// Per-element classification; the semiring must satisfy the axioms.
Classification classify_all(const FiniteSemiring& s);

struct StructureFlags {
  bool is_ring = false;
  bool is_entire = false;
  bool is_add_idempotent = false;
  bool is_mult_idempotent = false;
  bool is_proper = false;
};

StructureFlags structure_flags(const FiniteSemiring& s);

/// Bijection f with f(0)=0, f(1)=1 preserving both operations, or nullopt.
/// result[a] is the image of a in s2.
std::optional<std::vector<elem>> find_isomorphism(const FiniteSemiring& s1,
                                                  const FiniteSemiring& s2);

/// True iff `map` is a bijection s1 -> s2 preserving 0, 1, + and *.
bool is_isomorphism(const FiniteSemiring& s1, const FiniteSemiring& s2,
                    std::span<const elem> map);

/// True iff `map` preserves 0, 1, + and * (not necessarily bijective).
bool is_homomorphism(const FiniteSemiring& s1, const FiniteSemiring& s2,
                     std::span<const elem> map);

/// Relabels s by the bijection `perm` (old index -> new index).
FiniteSemiring relabel(const FiniteSemiring& s, std::span<const elem> perm);

}  // namespace semiring
