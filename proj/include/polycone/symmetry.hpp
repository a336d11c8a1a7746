#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polycone/conedef.hpp"

namespace polycone {

/// A permutation of coordinate positions: coordinate i is sent to perm[i].
using Perm = std::vector<std::uint32_t>;

/// A finite group of coordinate permutations with all elements listed.
///
/// The groups here are at most Z2 x Sym(9), so explicit element lists are
/// cheap and make canonical forms and stabilizers direct scans.
class CoordPermGroup {
public:
    CoordPermGroup() = default;

    /// Closure of `generators` under composition. Throws InputError if a
    /// generator is not a bijection of {0..degree-1}.
    static CoordPermGroup generate(std::size_t degree, const std::vector<Perm>& generators);

    /// The trivial group on `degree` coordinates.
    static CoordPermGroup trivial(std::size_t degree);

    [[nodiscard]] std::size_t degree() const { return degree_; }
    [[nodiscard]] std::size_t order() const { return elements_.size(); }
    [[nodiscard]] const std::vector<Perm>& generators() const { return generators_; }
    /// Elements, identity first.
    [[nodiscard]] const std::vector<Perm>& elements() const { return elements_; }
    /// inverse(k) is the inverse of elements()[k].
    [[nodiscard]] const Perm& inverse(std::size_t k) const { return inverses_[k]; }

    /// The subgroup fixing `v`.
    [[nodiscard]] CoordPermGroup stabilizer(const RatVector& v) const;

private:
    std::size_t degree_ = 0;
    std::vector<Perm> generators_;
    std::vector<Perm> elements_;
    std::vector<Perm> inverses_;
};

/// Applies a coordinate permutation: result[perm[i]] = v[i].
RatVector permute(const Perm& perm, const RatVector& v);

Perm compose(const Perm& outer, const Perm& inner);
Perm invert(const Perm& p);

/// The coordinate permutation induced by a permutation of the points
/// (point_perm[x-1] is the image of point x) on an index scheme.
Perm induced_perm(const IndexScheme& scheme, const std::vector<int>& point_perm);

/// The coordinate swap (i,j) <-> (j,i) of an ordered-pairs scheme.
Perm reversal_perm(const IndexScheme& scheme);

/// Sym(n) acting on the scheme, together with the reversal for ordered pairs.
CoordPermGroup group_for(const ConeSpec& spec);
CoordPermGroup point_group(const IndexScheme& scheme);

/// Lexicographically smallest vector of the orbit of `v`.
RatVector canonical_rep(const RatVector& v, const CoordPermGroup& g);

/// Number of group elements fixing `v`.
std::size_t stabilizer_order(const RatVector& v, const CoordPermGroup& g);

struct Orbit {
    RatVector representative;
    std::size_t size = 0;
    /// Indices into the decomposed input that fall in this orbit, ascending.
    std::vector<std::size_t> members;
};

struct OrbitSet {
    std::vector<Orbit> orbits;  // sorted by representative

    [[nodiscard]] std::size_t total() const;
    [[nodiscard]] std::vector<std::size_t> sizes() const;
};

/// Groups vectors by canonical form. Orbit sizes come from the stabilizer of
/// each representative, so the input need not contain whole orbits.
OrbitSet orbit_decompose(const std::vector<RatVector>& vectors, const CoordPermGroup& g, unsigned threads = 1);

/// Every vector of the orbit of `v`, sorted.
std::vector<RatVector> orbit_of(const RatVector& v, const CoordPermGroup& g);

}  // namespace polycone
