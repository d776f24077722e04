#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "semiring/core.hpp"

namespace semiring {

/// Table file form: keys order, zero, one, add, mul, then labels if present.
nlohmann::ordered_json to_json(const FiniteSemiring& s);

/// Parses the table file form. Throws input_error naming the offending
/// field (e.g. "add[1][2]: value 3 out of range [0,3)").
FiniteSemiring from_json(const nlohmann::json& j);

/// Compact canonical text; deterministic.
std::string encode(const FiniteSemiring& s);
FiniteSemiring decode(std::string_view text);

FiniteSemiring read_semiring_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace semiring
