#pragma once

// JSON input documents: an orbit set (explicit or from a built-in model),
// optional rigid-cylinder records and optional command parameters. Every
// object rejects unknown keys; errors name the offending field path.

#include <filesystem>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "cch/buildings.hpp"
#include "cch/chain_complex.hpp"

namespace cch {

inline constexpr const char* kDocumentVersion = "1";

struct Parameters {
    std::optional<std::int64_t> k_max;
    std::optional<std::pair<int, int>> degrees;
    std::optional<std::optional<Rational>> action_cap;  // inner nullopt = "inf"
    std::optional<Budgets> budgets;
    std::optional<Variant> variant;
    std::optional<int> target_index;
    std::optional<int> negative_ends;
    std::optional<std::string> x;  // iterate labels, resolved against the orbit set
    std::optional<std::string> z;
};

struct Document {
    std::string version = kDocumentVersion;
    OrbitSet set;
    ModuliInput moduli;
    Parameters params;
};

Document parse_document(const nlohmann::json& j);
Document load_document(const std::filesystem::path& path);

/// "inf" or a rational.
std::optional<Rational> parse_cap(std::string_view text);
std::string cap_str(const std::optional<Rational>& cap);

/// "LO..HI".
std::pair<int, int> parse_degrees(std::string_view text);

/// "name" or "name^k".
Iterate parse_iterate(const OrbitSet& set, std::string_view label);

}  // namespace cch
