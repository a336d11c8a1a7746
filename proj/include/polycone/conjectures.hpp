#pragma once

#include <vector>

#include "polycone/conedef.hpp"

namespace polycone {

/// Unordered set partition of {1..n}; blocks are point lists.
using Partition = std::vector<std::vector<int>>;

/// Predicted adjacency of two facets of SMET^{m,s}_n given as tagged rows:
/// two simplex facets are non-adjacent iff s = 1 and they share their
/// support; a non-negativity and a simplex facet iff they conflict (some
/// position carries non-zero values of opposite sign); two non-negativity
/// facets NN_A, NN_B iff |A cap B| = m and m-1 <= s < m.
bool conj2_predicts_adjacent(const RowTag& tag_a, const RatVector& facet_a, const RowTag& tag_b,
                             const RatVector& facet_b, const ConeSpec& spec);

/// Predicted adjacency of two partition hemi-metrics in the skeleton of
/// HCUT: non-adjacent iff, up to order, the partitions differ only by
/// (A cup B, C, D) against (A, B, C cup D).
bool conj5_predicts_adjacent(const Partition& a, const Partition& b);

/// The rule above refined for the orbit of shape {m+1..n},{1},..,{m}
/// (unchanged) and the orbit of shape {m+2..n},{m,m+1},{1},..,{m-1}, where
/// pairs with rank(meet) - (m+1) = (m+1) - rank(join) > 1 are non-adjacent too.
/// Throws InputError unless both partitions lie in the same one of these orbits.
bool conj6_predicts_adjacent(const Partition& a, const Partition& b, int m);

/// Whether the H_v graph of a 0/1 ray of SMET^{m,s}_{m+3} is of the
/// predicted kind: for s = m, K_{n-1} or K_n - floor(n/2) K_2; for s = m-1,
/// a zero-extension graph or the complement of a union of disjoint circuits
/// with an admissible length vector.
bool conj8_predicts_graph(const RatVector& ray, const ConeSpec& spec);

/// Whether a ray of HMET^m_{m+3} has the predicted form: 0/1 valued with
/// H_v a circuit, or 0/1/2 valued with H_v two disjoint circuits joined by a
/// path carrying the value 2.
bool conj9_predicts_ray(const RatVector& ray, const ConeSpec& spec);

/// Common refinement and finest common coarsening of two partitions.
Partition partition_meet(const Partition& a, const Partition& b);
Partition partition_join(const Partition& a, const Partition& b);

}  // namespace polycone
