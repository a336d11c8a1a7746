#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polycone/conedef.hpp"
#include "polycone/records.hpp"

namespace polycone {

struct OrbitRow {
    RatVector representative;
    std::size_t size = 0;
    std::optional<std::size_t> incidence;
    std::optional<std::size_t> adjacency;
};

struct SideSummary {
    bool computed = false;
    std::size_t count = 0;
    std::vector<OrbitRow> orbits;
    /// Neighbours of orbit i's representative in orbit j, when the graph was built.
    std::vector<std::vector<std::size_t>> representation_matrix;
};

struct ReportOptions {
    unsigned threads = 1;
    /// Stop a conversion once it holds more rays than this (0: no limit).
    std::size_t max_rays = 0;
    bool graphs = true;
    /// Find facets of generator families by adjacency decomposition even
    /// when the published row used a full conversion.
    bool adm = false;
    /// Generator families only: decide extremality of each generator orbit by
    /// linear programming and leave facets and graphs uncomputed.
    bool rays_only = false;
};

struct Report {
    ConeSpec spec;
    std::size_t dim = 0;
    SideSummary rays;
    SideSummary facets;
    std::optional<int> skeleton_diameter;
    std::optional<int> ridge_diameter;
    bool complete = true;
    /// "pass", "fail", "no-record" or "incomplete".
    std::string verdict;
    std::vector<std::string> mismatches;
    std::vector<std::string> notes;
    double elapsed_ms = 0;
};

/// Builds the cone, enumerates both descriptions, splits them into orbits,
/// builds skeleton and ridge graphs and compares with the published record.
/// A conversion stopped by max_rays yields an incomplete report.
Report make_report(const ConeSpec& spec, const ReportOptions& options = {});

/// Sets verdict and mismatches from the computed fields and `record`.
void judge(Report& report, const ExpectedRecord* record);

/// JSON object with keys spec, dim, rays, facets, diameters, verdict,
/// mismatches, notes, elapsed_ms.
std::string report_json(const Report& report, bool with_timing = true);

/// Orbit tables with Adj., Size and Inc. columns and the representation matrices.
std::string report_text(const Report& report, bool complement_labels = false);

}  // namespace polycone
