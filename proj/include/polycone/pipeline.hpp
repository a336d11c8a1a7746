#pragma once

#include "polycone/conedef.hpp"
#include "polycone/ddmethod.hpp"

namespace polycone {

/// Both complete descriptions of one cone: irredundant facets and extreme rays.
struct ConeData {
    ConeSpec spec;
    Representation facets;
    Representation rays;
};

/// Inequality families: filter the defining rows, then enumerate rays.
/// Generator families: enumerate facets of the generators and keep the
/// generators that are extreme. SCUT first computes the rays of its SMET.
ConeData compute_cone(const ConeSpec& spec, const DDOptions& options = {});

/// Generators of `gens` that are extreme rays of the cone with facets `facets`.
Representation extreme_generators(const Representation& gens, const Representation& facets);

/// `v` satisfies every row of `h` and the tight rows have rank dim-1.
bool is_extreme_ray(const Representation& h, const RatVector& v);

/// Row `i` of a pointed generator system is not a nonnegative combination of
/// the other rows. Decided by one LP over the dual space, without facets.
bool generator_is_extreme(const Representation& gens, std::size_t i);

}  // namespace polycone
