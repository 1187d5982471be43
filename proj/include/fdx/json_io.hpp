#pragma once

#include "fdx/envy.hpp"
#include "fdx/model.hpp"

#include <json.hpp>

#include <filesystem>
#include <variant>

namespace fdx::io {

using nlohmann::json;

/// {"model": "externalities"|"asym", "n": int, "items": [string],
///  "values": [i][j][x] of int or "p/q"; asym diagonals must be null}
std::variant<ExternInstance, AsymInstance> parse_instance(const json& doc);
json to_json(const ExternInstance& instance);
json to_json(const AsymInstance& instance);

/// {"bundles": [[item indices]]} — exactly n lists partitioning [0, m)
Allocation parse_allocation(const json& doc, std::size_t n, std::size_t m);
json to_json(const Allocation& allocation);

/// {"c": int, "pairs": [{"i", "j", "count", "discards"}]} — agents are
/// 1-based in the file, items 0-based.
json to_json(const EfcCertificate& certificate);
EfcCertificate parse_certificate(const json& doc);

/// {"vectors": [[int or "p/q"]]}
std::vector<std::vector<Rational>> parse_valuation_vectors(const json& doc);

Rational parse_value(const json& value);
json value_to_json(const Rational& value);

json load_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& doc);

} // namespace fdx::io
