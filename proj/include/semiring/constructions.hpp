#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semiring/core.hpp"

namespace semiring {

enum class Family { boolean, chain, hu, lagrassa, zn, xn, bni };

/// How B(n,i) folds an overflowing sum or product x back into the carrier.
enum class BniInterpretation {
  /// x mod (n-i), landing in [0, n-i): the formula read literally.
  literal_mod,
  /// the unique z in [i, n-1] with z = x mod (n-i): the quotient of N by
  /// the congruence identifying i with n.
  canonical_congruence,
};

struct FamilySpec {
  Family family = Family::boolean;
  std::vector<long> params;
  BniInterpretation bni_interpretation = BniInterpretation::canonical_congruence;
};

/// Parses the compact `family:p,q,...` syntax, e.g. `bni:4,1,canonical`,
/// `chain:5`, `xn:2`, `zn:6`, `hu`, `lagrassa`, `boolean`. The third bni
/// parameter is `canonical` (default) or `literal`.
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

struct Constructed {
  FiniteSemiring semiring;
  AxiomReport axioms;
};

/// Builds a named family member and reports its axiom check. Only the
/// literal_mod reading of B(n,i) can come back with axioms.ok == false;
/// that is returned as data, not thrown.
Constructed construct_named(const FamilySpec& spec, std::size_t size_cap = kDefaultSizeCap);

FiniteSemiring boolean_semiring();
/// {0 < 1 < ... < k-1} with max and min; zero is 0, one is k-1.
FiniteSemiring chain(std::size_t k);
/// Hu's semiring: indices 0, u, 1 are 0, 1, 2.
FiniteSemiring hu_semiring();
/// LaGrassa's semiring: indices 0, u, 1 are 0, 1, 2.
FiniteSemiring lagrassa_semiring();
FiniteSemiring zn(std::size_t n);
/// X_n = {-inf, 0, ..., n}; index 0 is -inf, index k+1 is k.
FiniteSemiring xn(std::size_t n);
FiniteSemiring bni(std::size_t n, std::size_t i, BniInterpretation interp);

/// Componentwise product. Mixed radix with the first factor most significant;
/// labels are "(a,b,...)" from the factor labels.
FiniteSemiring direct_product(std::span<const FiniteSemiring> factors,
                              std::size_t size_cap = kDefaultSizeCap);
FiniteSemiring direct_product(const FiniteSemiring& a, const FiniteSemiring& b,
                              std::size_t size_cap = kDefaultSizeCap);

/// R with a new element z that is additive identity and multiplicatively
/// absorbing. R keeps its indices; z is index |R|.
FiniteSemiring adjoin_zero(const FiniteSemiring& ring);

/// a0 + a1 s1 + ... + ak sk over the ring R with s_i s_j = 0. Tuples are
/// indexed in mixed radix with a0 most significant.
FiniteSemiring dual_numbers(const FiniteSemiring& ring, std::size_t k,
                            std::size_t size_cap = kDefaultSizeCap);

/// F_p[x1..xk]/(x1^m1, ..., xk^mk). Index = sum of c_j p^j where j runs over
/// monomials in mixed radix of the exponent vector (x1 least significant).
FiniteSemiring trunc_poly_ring(std::size_t p, std::span<const std::size_t> exponents,
                               std::size_t size_cap = kDefaultSizeCap);

/// Commutative monoid table with a designated identity.
struct MonoidTable {
  std::size_t order = 1;
  elem identity = 0;
  std::vector<elem> table;
  elem op(elem a, elem b) const { return table[a * order + b]; }
};

/// Subsets of {1..k} under union, identity the empty set; index = bitmask.
MonoidTable free_semilattice(std::size_t k);

/// S = P u {1} with a + 1 = 1, P*P = 0 and 1 the identity. P must be an
/// idempotent commutative monoid; P keeps its indices (its identity becomes
/// the zero of S) and 1 is index |P|.
FiniteSemiring nilpotent_monoid_semiring(const MonoidTable& p);

}  // namespace semiring
