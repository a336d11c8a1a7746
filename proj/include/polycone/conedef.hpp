#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polycone/linalg.hpp"

namespace polycone {

enum class Family { MET, CUT, QMET, OMCUT, HMET, HCUT, SMET, SCUT };

std::string to_string(Family f);
Family parse_family(std::string_view text);

/// Parameters of one cone: family, number of points n, arity m and the
/// super-metric coefficient s.
struct ConeSpec {
    Family family = Family::MET;
    int n = 3;
    int m = 1;
    Rat s = Rat(1);

    static ConeSpec met(int n) { return {Family::MET, n, 1, Rat(1)}; }
    static ConeSpec cut(int n) { return {Family::CUT, n, 1, Rat(1)}; }
    static ConeSpec qmet(int n) { return {Family::QMET, n, 1, Rat(1)}; }
    static ConeSpec omcut(int n) { return {Family::OMCUT, n, 1, Rat(1)}; }
    static ConeSpec hmet(int m, int n) { return {Family::HMET, n, m, Rat(1)}; }
    static ConeSpec hcut(int m, int n) { return {Family::HCUT, n, m, Rat(1)}; }
    static ConeSpec smet(int m, Rat s, int n) { return {Family::SMET, n, m, std::move(s)}; }
    static ConeSpec scut(int m, Rat s, int n) { return {Family::SCUT, n, m, std::move(s)}; }

    /// Throws InputError for impossible parameters. With `strict`, super-metric
    /// cones must also satisfy 0 < s < m+1; otherwise any s > 0 is allowed so
    /// the collapsing regimes can be built and checked.
    void validate(bool strict = true) const;

    [[nodiscard]] bool is_h_family() const;
    [[nodiscard]] bool is_oriented() const { return family == Family::QMET || family == Family::OMCUT; }
    /// The inequality-defined cone paired with this family (CUT -> MET, ...).
    [[nodiscard]] ConeSpec h_partner() const;

    /// Short name such as "SMET^{2,2}_5" or "MET_5".
    [[nodiscard]] std::string name() const;

    friend bool operator==(const ConeSpec&, const ConeSpec&) = default;
};

enum class SchemeKind { unordered_pairs, ordered_pairs, subsets };

/// Coordinate labels of a cone's ambient space, in lexicographic order.
class IndexScheme {
public:
    IndexScheme() = default;
    static IndexScheme unordered_pairs(int n);
    static IndexScheme ordered_pairs(int n);
    static IndexScheme subsets(int n, int k);

    [[nodiscard]] SchemeKind kind() const { return kind_; }
    [[nodiscard]] int n() const { return n_; }
    /// Tuple length: 2 for pairs, k for subsets.
    [[nodiscard]] int k() const { return k_; }
    [[nodiscard]] std::size_t size() const { return labels_.size(); }
    /// 1-based points; sorted for unordered schemes.
    [[nodiscard]] const std::vector<std::vector<int>>& labels() const { return labels_; }

    /// Position of a label; unordered schemes accept any point order.
    /// Returns size() when the tuple is not a label.
    [[nodiscard]] std::size_t index_of(std::vector<int> tuple) const;

    /// "12", "134" or "(2,1)"; with `complement` the subset label is printed as
    /// the complement in V_n, e.g. "~45" for 123 in V_5.
    [[nodiscard]] std::string label(std::size_t i, bool complement = false) const;

    /// Same labels modulo the unordered-pairs / 2-subsets alias.
    [[nodiscard]] bool compatible(const IndexScheme& other) const;
    [[nodiscard]] std::string describe() const;

    friend bool operator==(const IndexScheme& a, const IndexScheme& b)
    {
        return a.kind_ == b.kind_ && a.n_ == b.n_ && a.k_ == b.k_;
    }

private:
    SchemeKind kind_ = SchemeKind::unordered_pairs;
    int n_ = 0;
    int k_ = 2;
    std::vector<std::vector<int>> labels_;
};

/// Annotation attached to one row of a representation.
struct RowTag {
    enum class Kind { none, nn, simplex, triangle, oriented_triangle, generator };
    Kind kind = Kind::none;
    /// nn: the coordinate's points; simplex: the (m+2)-set T; triangle and
    /// oriented_triangle: (x, z) of the bounded pair d(x,z) <= d(x,y)+d(y,z).
    std::vector<int> points;
    /// simplex: vertex x whose removal gives the coefficient -s coordinate;
    /// triangle kinds: the middle point y.
    int apex = 0;
    /// generator: text such as "cut{1,2}" or "alpha{1,2,3}{4}{5}".
    std::string descriptor;

    [[nodiscard]] std::string str() const;
    static RowTag parse(std::string_view text);
    friend bool operator==(const RowTag&, const RowTag&) = default;
};

enum class RepKind { H, V };

/// An H-representation (rows are inequalities r·x >= 0) or a V-representation
/// (rows are generating rays) over an index scheme. Rows are primitive
/// integer vectors without duplicates.
struct Representation {
    IndexScheme scheme;
    RepKind kind = RepKind::H;
    std::vector<RatVector> rows;
    std::vector<RowTag> tags;  // empty or one per row

    [[nodiscard]] std::size_t dim() const { return scheme.size(); }
    [[nodiscard]] std::size_t size() const { return rows.size(); }
    /// Checks row lengths, normalization and duplicate freedom.
    void check_invariants() const;
    friend bool operator==(const Representation&, const Representation&) = default;
};

IndexScheme index_scheme(const ConeSpec& spec);

/// All defining inequalities of MET, QMET, HMET or SMET (redundant rows kept).
Representation build_h(const ConeSpec& spec);

/// Removes rows implied by the remaining ones, testing rows in order by LP.
Representation redundancy_filter(const Representation& rep);

/// Generators of CUT, OMCUT, HCUT; SCUT needs the extreme rays of its SMET.
Representation build_generators(const ConeSpec& spec, const Representation* smet_rays = nullptr);

enum class DeltaKind { cut, oriented_cut, multicut, oriented_multicut, partition_hemimetric };

/// 0/1 vector of a cut-like object. Blocks are sets of 1-based points.
/// `cut` and `oriented_cut` accept one block S or a full 2-partition (S, V_n - S).
RatVector delta_vector(DeltaKind kind, const std::vector<std::vector<int>>& parts, const ConeSpec& spec);

/// Zero-extension: a function on (m+1)-subsets of V_n becomes a function on
/// (m+2)-subsets of V_{n+1}, zero on subsets of V_n.
RatVector zero_extension(const RatVector& d, const ConeSpec& spec);

/// Vertex-splitting of point n into n and n+1.
RatVector vertex_splitting(const RatVector& d, const ConeSpec& spec);

struct Membership {
    bool inside = true;
    std::vector<std::size_t> violated;
};

Membership is_member(const RatVector& v, const Representation& rep);

/// Everything known in closed form about SMET^{m,s}_{m+2}.
struct SmetClosedForm {
    std::string ray_orbit_description;
    std::vector<RatVector> rays;  // normalized, lex-sorted, scheme subsets(m+2, m+1)
    std::size_t ray_count = 0;
    std::string skeleton_kind;
    int skeleton_diameter = 0;
    std::string ridge_kind;              // empty when not covered by the closed form
    std::optional<int> ridge_diameter;   // set for 1 <= s and the covered regimes
};

/// Throws InputError when s is outside (0, m+1), where the cone collapses.
SmetClosedForm smet_closed_form(int m, const Rat& s);

std::size_t binomial(int n, int k);
/// Stirling number of the second kind S(n, k).
std::size_t stirling2(int n, int k);

/// All set partitions of {1..n} into exactly k nonempty blocks (k = 0: all
/// partitions), blocks sorted by minimum element.
std::vector<std::vector<std::vector<int>>> set_partitions(int n, int k = 0);

}  // namespace polycone
