#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "polycone/conedef.hpp"

namespace polycone {

/// Fixed-width bit set over the rows of one conversion.
class RowSet {
public:
    RowSet() = default;
    explicit RowSet(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    [[nodiscard]] bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    [[nodiscard]] std::size_t size() const { return bits_; }
    [[nodiscard]] std::size_t count() const;
    [[nodiscard]] bool subset_of(const RowSet& o) const;
    [[nodiscard]] std::vector<std::size_t> indices() const;
    [[nodiscard]] const std::vector<std::uint64_t>& words() const { return words_; }

    RowSet& operator&=(const RowSet& o);
    friend RowSet operator&(RowSet a, const RowSet& b) { return a &= b; }
    friend bool operator==(const RowSet&, const RowSet&) = default;
    friend auto operator<=>(const RowSet& a, const RowSet& b) { return a.words_ <=> b.words_; }

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

enum class InsertionOrder { max_cutoff, min_cutoff, lex_min };
enum class AdjacencyMode { combinatorial, algebraic };

struct DDOptions {
    InsertionOrder order = InsertionOrder::max_cutoff;
    AdjacencyMode adjacency = AdjacencyMode::combinatorial;
    /// Re-verify feasibility and extremality of every ray after each step.
    bool verify_steps = false;
    /// Abort with an error once the intermediate ray count exceeds this (0: no limit).
    std::size_t max_rays = 0;
    /// Called after each inserted row with (rows processed, total rows, current ray count).
    std::function<void(std::size_t, std::size_t, std::size_t)> progress;
};

struct DDStats {
    std::size_t max_intermediate = 0;
    std::size_t adjacency_tests = 0;
    bool used_bignum = false;
};

/// Result of converting { x : rows · x >= 0 } to its extreme rays.
struct DDState {
    std::size_t dim = 0;
    std::vector<RatVector> rows;       // the inequalities, in input order
    std::vector<RatVector> rays;       // normalized, sorted
    std::vector<RowSet> incidence;     // incidence[k]: rows tight at rays[k]
    DDStats stats;
};

/// Raised when a conversion exceeds DDOptions::max_rays.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Double description conversion. Throws InputError naming a lineality
/// vector when the cone is not pointed.
DDState dd_run(const std::vector<RatVector>& rows, std::size_t dim, const DDOptions& options = {});

/// H -> V: extreme rays; V -> H: facets (the same conversion applied to the generators).
Representation dual_description(const Representation& rep, const DDOptions& options = {});

/// All facets of the cone generated by `rep` as primitive integer inequalities.
Representation facet_enumeration(const Representation& rep, const DDOptions& options = {});

/// Whether rays r1 and r2 of a finished conversion span a 2-face.
bool dd_adjacency(const DDState& state, std::size_t r1, std::size_t r2,
                  AdjacencyMode mode = AdjacencyMode::combinatorial);

/// Rank of the rows of `state` selected by `which`.
std::size_t rank_of_rows(const std::vector<RatVector>& rows, const RowSet& which, std::size_t dim);

}  // namespace polycone
