#pragma once

#include <json.hpp>

#include "semiring/core.hpp"
#include "semiring/deciders.hpp"
#include "semiring/ideals.hpp"
#include "semiring/localization.hpp"

namespace semiring {

// JSON payloads shared by the command-line front end and library callers.

nlohmann::ordered_json element_set_json(const ElementSet& e);

/// Per-element profile, element sets, structure flags and every property verdict.
nlohmann::ordered_json classification_json(const FiniteSemiring& s);

nlohmann::ordered_json verdict_json(const PropertyVerdict& v);

nlohmann::ordered_json lattice_json(const IdealLattice& lat, const OrderProps& props);

nlohmann::ordered_json localization_json(const LocalizedSemiring& l);

}  // namespace semiring
