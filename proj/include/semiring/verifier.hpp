#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "semiring/core.hpp"
#include "semiring/deciders.hpp"
#include "semiring/ideals.hpp"
#include "semiring/localization.hpp"

namespace semiring {

enum class Expectation { verify, report_only };
enum class ClaimStatus { verified, counterexample, mixed };

std::string_view to_string(Expectation e);
std::string_view to_string(ClaimStatus s);

struct Claim {
  std::string id;
  std::string statement;
  std::string instances;
  Expectation expected = Expectation::verify;
};

/// C1..C24 in order.
const std::vector<Claim>& claim_registry();
/// Throws input_error for an unknown id.
const Claim& find_claim(std::string_view id);

struct ScaleConfig {
  /// Census classes of order 1..max_order feed the census-based instance sets.
  std::size_t max_order = 4;
  /// 0 means hardware concurrency.
  unsigned jobs = 0;
};

struct ClaimReport {
  std::string id;
  ClaimStatus status = ClaimStatus::verified;
  std::size_t instances_checked = 0;
  /// Self-contained witness objects; each carries its instance tables inline.
  std::vector<nlohmann::ordered_json> witnesses;
  std::vector<std::string> notes;
};

ClaimReport run_claim(std::string_view id, const ScaleConfig& scale = {});

struct SuiteConfig {
  /// nullopt runs the whole registry; an empty list runs nothing.
  std::optional<std::vector<std::string>> claims;
  ScaleConfig scale;
};

struct SuiteResult {
  std::vector<ClaimReport> reports;
  /// Extra empirical checks of facts the source cites without proof.
  nlohmann::ordered_json observations;
  std::size_t verified = 0;
  std::size_t counterexamples = 0;
  std::size_t mixed = 0;
  /// Claims expected to verify that produced a counterexample.
  std::size_t expected_verify_failures = 0;
};

SuiteResult run_suite(const SuiteConfig& cfg);

/// {summary, claims:[{id, statement, expected, status, instances_checked, witnesses, notes}],
///  observations}
nlohmann::ordered_json to_json(const SuiteResult& r, const SuiteConfig& cfg);
nlohmann::ordered_json to_json(const ClaimReport& r);

// Witness construction. Every witness has "kind" and "instance": {name, semiring}.

nlohmann::ordered_json instance_json(const std::string& name, const FiniteSemiring& s);

nlohmann::ordered_json witness_base(const char* kind, const std::string& name, const FiniteSemiring& s);
/// property_fails at the smallest offending element, or property_holds.
nlohmann::ordered_json witness_property(const std::string& name, const FiniteSemiring& s, Property p);
nlohmann::ordered_json witness_axiom_violation(const std::string& name, const FiniteSemiring& s,
                                               const AxiomViolation& v);
nlohmann::ordered_json witness_isomorphism(const std::string& name, const FiniteSemiring& s,
                                           const std::string& target_name,
                                           const FiniteSemiring& target, std::span<const elem> map);
nlohmann::ordered_json witness_product(
    const std::string& name, const FiniteSemiring& product,
    const std::vector<std::pair<std::string, FiniteSemiring>>& factors);
nlohmann::ordered_json witness_ideal_facts(const std::string& name, const FiniteSemiring& s,
                                           const IdealLattice& lat);
nlohmann::ordered_json witness_ideal_semiring(const std::string& name, const FiniteSemiring& s,
                                              const IdealSemiring& id);
nlohmann::ordered_json witness_total_quotient(const std::string& name, const FiniteSemiring& s,
                                              const TotalQuotient& q);
nlohmann::ordered_json witness_ann_ann(const std::string& name, const FiniteSemiring& s,
                                       const AnnAnnEntry& e);

struct ReplayOutcome {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;
};

/// Re-validates one witness against its inline tables with brute-force scans
/// that share no code with the deciders, ideal enumeration or localization.
/// Returns an empty string on success, otherwise the reason.
std::string replay_witness(const nlohmann::json& w);

/// Replays every witness of every claim in a suite report.
ReplayOutcome replay_report(const nlohmann::json& report);

}  // namespace semiring
