#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polycone/conedef.hpp"

namespace polycone {

enum class FieldStatus { exact, conjectured, lower_bound, unknown };

struct ExpectedField {
    std::optional<std::uint64_t> value;
    FieldStatus status = FieldStatus::unknown;

    [[nodiscard]] bool checkable() const { return status == FieldStatus::exact && value.has_value(); }
};

enum class Tier { core, extended, out_of_reach };

/// One row of the published table of cone parameters.
struct ExpectedRecord {
    ConeSpec spec;
    std::size_t dim = 0;
    ExpectedField ray_count, ray_orbits, facet_count, facet_orbits, skeleton_diameter, ridge_diameter;
    Tier tier = Tier::out_of_reach;
    /// Facets were found by adjacency decomposition rather than a full conversion.
    bool facets_by_adm = false;
    /// Regression checks only the rays: the facet side is too large to redo here.
    bool rays_only = false;
};

const std::vector<ExpectedRecord>& table_records();

/// The record for `spec`, or nullptr.
const ExpectedRecord* find_record(const ConeSpec& spec);

std::string to_string(FieldStatus s);
std::string to_string(Tier t);
Tier parse_tier(std::string_view text);

}  // namespace polycone
