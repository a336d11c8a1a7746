#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polycone/rat.hpp"

namespace polycone {

/// Dense row-major rational matrix.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Builds a matrix from equal-length rows. `cols` is used when `rows` is empty.
    static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols = 0);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    [[nodiscard]] const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] RatVector row(std::size_t r) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

/// Rank over the rationals by fraction-free (Bareiss) elimination.
std::size_t rank(const RatMatrix& m);

/// Basis of the right null space, each vector primitive-integer normalized.
/// Always has cols(m) - rank(m) elements.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// The positive multiple of `v` with coprime integer entries.
/// Throws InputError("not a ray") for the zero vector.
RatVector normalize_ray(const RatVector& v);

/// True when every entry is an integer and their gcd is 1 (or the vector is zero).
bool is_primitive_integer(const RatVector& v);

/// Converts an integral vector to machine integers; false if any entry is
/// fractional or does not fit.
bool to_int64(const RatVector& v, std::vector<std::int64_t>& out);

RatVector from_int64(const std::vector<std::int64_t>& v);

/// Incremental row echelon form modulo the prime 2^31 - 1.
///
/// Used as a fast rank oracle: the rank mod p never exceeds the rank over Q,
/// so reaching an upper bound known from geometry certifies the exact rank.
class ModRank {
public:
    static constexpr std::uint64_t kPrime = 2147483647ULL;

    explicit ModRank(std::size_t dim);

    static std::uint32_t residue(std::int64_t v);
    static std::uint32_t residue(const Rat& integral_value);

    /// Adds one row of residues; returns true if the rank increased.
    bool add(const std::uint32_t* row);
    [[nodiscard]] std::size_t rank() const { return pivots_.size(); }
    void clear() { pivots_.clear(); }

private:
    std::size_t dim_;
    std::vector<std::vector<std::uint32_t>> basis_;
    std::vector<std::size_t> pivots_;
    std::vector<std::uint32_t> scratch_;
};

}  // namespace polycone
