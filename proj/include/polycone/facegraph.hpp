#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "polycone/conedef.hpp"
#include "polycone/smallgraph.hpp"
#include "polycone/symmetry.hpp"

namespace polycone {

enum class RayAdjacency { rank, combinatorial };

/// Whether two extreme rays of the cone { x : h.rows · x >= 0 } span a 2-face.
/// Rank mode tests the rank of the rows tight at both; combinatorial mode
/// needs the complete ray list `rays` and looks for a third ray tight on all
/// of them. Throws InputError for equal or non-extreme rays.
bool rays_adjacent(const Representation& h, const RatVector& r1, const RatVector& r2,
                   RayAdjacency mode = RayAdjacency::rank, const Representation* rays = nullptr);

/// Dimension of the face { x : h · x >= 0, f1 · x = 0, f2 · x = 0 } grown
/// point by point with linear programs.
std::size_t face_dimension_lp(const Representation& h, std::size_t f1, std::size_t f2);

/// Adjacency of two facet rows of an irredundant H-representation decided
/// by linear programming alone: adjacent iff the common face has dimension dim-2.
bool facets_adjacent_lp(const Representation& h, std::size_t f1, std::size_t f2);

/// Number of rows of `other_side` orthogonal to x.
std::size_t incidence_number(const RatVector& x, const Representation& other_side);

enum class GraphSide { skeleton, ridge };

struct OrbitStats {
    RatVector representative;
    std::size_t size = 0;
    std::size_t adjacency = 0;
    std::size_t incidence = 0;
};

/// Skeleton (nodes = rays) or ridge graph (nodes = facets) of a cone with
/// orbit annotations under a coordinate permutation group.
struct FaceGraph {
    std::size_t dim = 0;
    std::vector<RatVector> nodes;                     // sorted
    std::vector<std::vector<std::uint32_t>> neighbors; // sorted, symmetric, loop-free
    std::vector<std::size_t> orbit_of_node;
    /// Orbits by decreasing adjacency, then decreasing incidence, then representative.
    std::vector<OrbitStats> orbits;
    /// representation_matrix[i][j]: neighbours of orbit i's representative in orbit j.
    std::vector<std::vector<std::size_t>> representation_matrix;
    /// Largest eccentricity; -1 when the graph is disconnected.
    int diameter = 0;

    [[nodiscard]] std::size_t edge_count() const;
    [[nodiscard]] bool adjacent(std::size_t a, std::size_t b) const;
    /// Index of the orbit containing `v` (after canonicalization), or orbits.size().
    [[nodiscard]] std::size_t orbit_index(const RatVector& v, const CoordPermGroup& g) const;
};

struct FaceGraphOptions {
    unsigned threads = 1;
    bool diameter = true;
};

/// Builds the graph from a matching pair of complete representations (one H,
/// one V). Neighbours are computed for orbit representatives and carried to
/// every node by the group. Throws InputError for an inconsistent pair.
FaceGraph build_face_graph(const Representation& primal, const Representation& dual, const CoordPermGroup& g,
                           GraphSide which, const FaceGraphOptions& options = {});

/// Labeled representation graph: support sets of v (subsets scheme) joined
/// when they share all but one point.
struct LabeledGraph {
    SmallGraph graph;
    std::vector<std::string> vertex_names;
    std::vector<Rat> values;
};

LabeledGraph representation_graph_G(const RatVector& v, const ConeSpec& spec);

/// For n = m+3 and 0/1 vectors: the graph on points whose edges are the
/// complementary pairs of the support, isolated points removed.
/// Vertex names are the 1-based points that remain.
LabeledGraph representation_graph_H(const RatVector& v, const ConeSpec& spec);

struct ZeroOneStats {
    std::size_t zero_one_orbits = 0;
    std::size_t min_zero_count = 0;
    friend bool operator==(const ZeroOneStats&, const ZeroOneStats&) = default;
};

/// Orbits with a 0/1 representative, and the least number of zero entries of any ray.
ZeroOneStats zero_one_ray_stats(const OrbitSet& rays);

/// "v: n1 n2 ..." per node.
std::string adjacency_list_text(const FaceGraph& graph);

/// One line per orbit: representative entries, then Adj., Size, Inc.
std::string orbit_table_text(const FaceGraph& graph, const IndexScheme& scheme, bool complement_labels = false);

}  // namespace polycone
