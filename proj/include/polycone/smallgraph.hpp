#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace polycone {

/// Simple undirected graph on at most 64 vertices stored as adjacency masks.
class SmallGraph {
public:
    static constexpr std::size_t kMaxVertices = 64;

    SmallGraph() = default;
    explicit SmallGraph(std::size_t vertices);

    void add_edge(std::size_t a, std::size_t b);
    [[nodiscard]] bool has_edge(std::size_t a, std::size_t b) const { return (rows_[a] >> b) & 1u; }
    [[nodiscard]] std::size_t vertex_count() const { return rows_.size(); }
    [[nodiscard]] std::size_t edge_count() const;
    [[nodiscard]] std::size_t degree(std::size_t v) const;
    [[nodiscard]] std::uint64_t neighbors(std::size_t v) const { return rows_[v]; }
    /// Edges (a, b) with a < b in lexicographic order.
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    [[nodiscard]] std::vector<std::size_t> degree_sequence() const;  // descending
    [[nodiscard]] bool connected() const;

    [[nodiscard]] SmallGraph complement() const;
    /// The subgraph induced by the vertices in `keep`, renumbered in order.
    [[nodiscard]] SmallGraph induced(const std::vector<std::size_t>& keep) const;
    [[nodiscard]] SmallGraph without_isolated() const;

    friend bool operator==(const SmallGraph&, const SmallGraph&) = default;

private:
    std::vector<std::uint64_t> rows_;
};

SmallGraph complete_graph(std::size_t n);
SmallGraph cycle_graph(std::size_t n);
SmallGraph path_graph(std::size_t n);
SmallGraph complete_multipartite(const std::vector<std::size_t>& parts);
/// K_n with t disjoint edges removed.
SmallGraph complete_minus_matching(std::size_t n, std::size_t t);
SmallGraph petersen_graph();
SmallGraph cube_graph();
/// Triangular prism, the complement of C_6.
SmallGraph prism_graph();
/// k-subsets of an n-set, adjacent when they share k-1 elements.
SmallGraph johnson_graph(int n, int k);
SmallGraph disjoint_union(const SmallGraph& a, const SmallGraph& b);
/// Adds one vertex adjacent to every vertex of g.
SmallGraph cone_over(const SmallGraph& g);
SmallGraph line_graph(const SmallGraph& g);

/// Isomorphism by backtracking over degree-compatible vertex images.
bool isomorphic(const SmallGraph& a, const SmallGraph& b);

struct Classification {
    /// First catalog match, or empty when the graph is not in the catalog.
    std::string name;
    /// Every catalog name that matches, in catalog order.
    std::vector<std::string> all_names;
    /// Sorted degree sequence and edge list under the labeling whose
    /// adjacency bit string is lexicographically smallest.
    std::string certificate;

    [[nodiscard]] bool known() const { return !name.empty(); }
};

/// Catalog order: Petersen, 3-cube, Prism3, C_n, K_n, complete multipartite,
/// K_n - tK2, complements of disjoint cycle unions, nabla G, J(n,k).
/// Throws InputError above 13 vertices.
Classification classify_graph(const SmallGraph& g);

std::string canonical_certificate(const SmallGraph& g);

}  // namespace polycone
