#pragma once

// Machine-readable reports and text tables for the cch command line tool.

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "cch/buildings.hpp"
#include "cch/chain_complex.hpp"
#include "cch/models.hpp"

namespace cch::report {

using Json = nlohmann::ordered_json;

Json cz_json(const OrbitSet& set, std::int64_t k_max);
void cz_text(std::ostream& os, const OrbitSet& set, std::int64_t k_max);

Json classify_json(const ConvexityReport& conv, const SeparationReport& sep);
void classify_text(std::ostream& os, const ConvexityReport& conv, const SeparationReport& sep);

struct BuildingsRun {
    int target_index = 2;
    int negative_ends = 1;
    EnumerationResult enumeration;
    LemmaCertificate lemmas;
    std::optional<ConditionDCertificate> condition_d;
    std::optional<std::string> x, z;
};

Json buildings_json(const OrbitSet& set, const BuildingsRun& run);
void buildings_text(std::ostream& os, const OrbitSet& set, const BuildingsRun& run);

struct HomologyRun {
    Variant variant = Variant::minus;
    GeneratorTable table;
    GradedMatrixComplex complex;
    DSquaredReport d_squared;
    std::optional<HomologyReport> homology;  // absent when d^2 != 0
};

Json homology_json(const HomologyRun& run);
void homology_text(std::ostream& os, const HomologyRun& run);

Json cobordism_json(const CobordismTable& t);
void cobordism_text(std::ostream& os, const CobordismTable& t);

}  // namespace cch::report
