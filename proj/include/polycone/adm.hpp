#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polycone/conedef.hpp"
#include "polycone/ddmethod.hpp"
#include "polycone/symmetry.hpp"

namespace polycone {

/// A facet of the cone generated by a full-dimensional V-representation,
/// found by rotating a strictly positive valid inequality until its tight
/// generators have rank dim-1. Throws InputError for V input that is not
/// full-dimensional or whose cone is not pointed.
RatVector initial_facet(const Representation& v);

struct Subcone {
    Representation generators;  // the generators tight at the facet
    CoordPermGroup group;       // stabilizer of the facet
};

/// Throws InputError naming the tight rank when `facet` is not a facet.
Subcone subcone(const Representation& v, const RatVector& facet, const CoordPermGroup& g);

/// The other facet through the ridge spanned by `ridge_generators` inside
/// `facet`. Throws InputError when the generators do not span a ridge of it.
RatVector ridge_rotation(const Representation& v, const RatVector& facet,
                         const std::vector<RatVector>& ridge_generators);

struct AdmOptions {
    /// 1: ridges of each facet by double description; k > 1: by decomposition
    /// with depth k-1 on the facet's sub-cone.
    unsigned recursion_depth = 1;
    unsigned threads = 1;
    /// When set, treated and frontier facets are written here after every
    /// round, and an existing file is resumed from.
    std::string checkpoint;
    DDOptions dd;
};

struct AdmOrbit {
    RatVector representative;  // canonical
    std::size_t size = 0;
    std::size_t incidence = 0;
    /// Facets adjacent to the representative; zero for orbits restored from a checkpoint.
    std::size_t adjacency = 0;
    /// Orbits holding a neighbour of the representative (indices into AdmResult::orbits).
    std::vector<std::size_t> neighbor_orbits;
    bool from_checkpoint = false;
};

struct AdmResult {
    std::vector<AdmOrbit> orbits;  // sorted by representative
    std::size_t subcone_runs = 0;

    [[nodiscard]] std::size_t total() const;
    [[nodiscard]] OrbitSet orbit_set() const;
};

/// Orbit-wise facet enumeration. The group must map the generator set onto itself.
AdmResult adjacency_decomposition(const Representation& v, const CoordPermGroup& g, const AdmOptions& options = {});

/// Checkpoint text: "T" or "F" followed by the integer entries of one canonical facet.
std::string checkpoint_text(const std::vector<RatVector>& treated, const std::vector<RatVector>& frontier);
void parse_checkpoint(const std::string& text, std::size_t dim, std::vector<RatVector>& treated,
                      std::vector<RatVector>& frontier);

}  // namespace polycone
