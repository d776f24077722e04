#include "semiring/codec.hpp"

#include <fstream>
#include <sstream>

namespace semiring {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json to_json(const FiniteSemiring& s) {
  const auto n = s.order();
  auto table = [n](std::span<const elem> t) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < n; ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t j = 0; j < n; ++j) row.push_back(t[i * n + j]);
      rows.push_back(std::move(row));
    }
    return rows;
  };
  ordered_json j;
  j["order"] = n;
  j["zero"] = s.zero();
  j["one"] = s.one();
  j["add"] = table(s.add_table());
  j["mul"] = table(s.mul_table());
  if (!s.labels().empty()) j["labels"] = s.labels();
  return j;
}

namespace {

std::int64_t require_int(const json& j, const char* key) {
  if (!j.contains(key)) throw input_error(std::string(key) + ": missing required field");
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw input_error(std::string(key) + ": expected an integer");
  return v.get<std::int64_t>();
}

std::vector<elem> read_table(const json& j, const char* key, std::size_t n) {
  if (!j.contains(key)) throw input_error(std::string(key) + ": missing required field");
  const auto& rows = j.at(key);
  if (!rows.is_array() || rows.size() != n)
    throw input_error(std::string(key) + ": expected an array of " + std::to_string(n) + " rows");
  std::vector<elem> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i];
    const std::string where = std::string(key) + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != n)
      throw input_error(where + ": ragged row, expected " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k) {
      const auto& v = row[k];
      const std::string cell = where + "[" + std::to_string(k) + "]";
      if (!v.is_number_integer()) throw input_error(cell + ": expected an integer");
      auto x = v.get<std::int64_t>();
      if (x < 0 || static_cast<std::size_t>(x) >= n)
        throw input_error(cell + ": value " + std::to_string(x) + " out of range [0," +
                          std::to_string(n) + ")");
      out.push_back(static_cast<elem>(x));
    }
  }
  return out;
}

}  // namespace

FiniteSemiring from_json(const json& j) {
  if (!j.is_object()) throw input_error("semiring: expected a JSON object");
  const auto order = require_int(j, "order");
  if (order <= 0) throw input_error("order: must be a positive integer");
  const auto n = static_cast<std::size_t>(order);
  const auto zero = require_int(j, "zero");
  const auto one = require_int(j, "one");
  if (zero < 0 || static_cast<std::size_t>(zero) >= n)
    throw input_error("zero: index " + std::to_string(zero) + " out of range");
  if (one < 0 || static_cast<std::size_t>(one) >= n)
    throw input_error("one: index " + std::to_string(one) + " out of range");
  auto add = read_table(j, "add", n);
  auto mul = read_table(j, "mul", n);
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const auto& l = j.at("labels");
    if (!l.is_array() || l.size() != n)
      throw input_error("labels: expected an array of " + std::to_string(n) + " strings");
    for (std::size_t i = 0; i < n; ++i) {
      if (!l[i].is_string())
        throw input_error("labels[" + std::to_string(i) + "]: expected a string");
      labels.push_back(l[i].get<std::string>());
    }
  }
  return FiniteSemiring(n, static_cast<elem>(zero), static_cast<elem>(one), std::move(add),
                        std::move(mul), std::move(labels));
}

std::string encode(const FiniteSemiring& s) { return to_json(s).dump(); }

FiniteSemiring decode(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error("parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return from_json(j);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error(path.string() + ": cannot open for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error(path.string() + ": cannot open for writing");
  out << text;
  if (!out) throw input_error(path.string() + ": write failed");
}

FiniteSemiring read_semiring_file(const std::filesystem::path& path) {
  try {
    return decode(read_text_file(path));
  } catch (const input_error& e) {
    throw input_error(path.string() + ": " + e.what());
  }
}

}  // namespace semiring
