#include "polycone/linalg.hpp"

#include <numeric>
#include <utility>

namespace polycone {

namespace {

// Rows scaled to integers; zero rows are kept.
std::vector<std::vector<mpz_class>> integral_rows(const RatMatrix& m)
{
    std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rat& v = m.at(r, c);
            if (!v.is_integer()) {
                mpz_class d = v.denominator();
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
            }
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rat& v = m.at(r, c);
            out[r][c] = v.numerator() * (l / v.denominator());
        }
    }
    return out;
}

struct Echelon {
    std::vector<std::vector<mpz_class>> rows;  // first `pivot_cols.size()` rows are the echelon part
    std::vector<std::size_t> pivot_cols;
};

// Bareiss forward elimination. Every intermediate division is exact.
Echelon bareiss(std::vector<std::vector<mpz_class>> a, std::size_t cols)
{
    Echelon e;
    std::size_t nrows = a.size();
    std::size_t r = 0;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < cols && r < nrows; ++c) {
        std::size_t piv = r;
        while (piv < nrows && a[piv][c] == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(a[r], a[piv]);
        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.rows = std::move(a);
    return e;
}

}  // namespace

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols)
{
    if (!rows.empty()) cols = rows.front().size();
    RatMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw InputError("RatMatrix::from_rows: ragged rows");
        }
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

RatVector RatMatrix::row(std::size_t r) const
{
    return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::size_t rank(const RatMatrix& m)
{
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return bareiss(integral_rows(m), m.cols()).pivot_cols.size();
}

std::vector<RatVector> kernel_basis(const RatMatrix& m)
{
    std::size_t cols = m.cols();
    std::vector<std::size_t> pivot_cols;
    std::vector<std::vector<mpz_class>> ech;
    if (m.rows() > 0) {
        Echelon e = bareiss(integral_rows(m), cols);
        pivot_cols = e.pivot_cols;
        ech.assign(e.rows.begin(), e.rows.begin() + static_cast<std::ptrdiff_t>(pivot_cols.size()));
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;

    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<mpq_class> x(cols, 0);
        x[free] = 1;
        for (std::size_t i = pivot_cols.size(); i-- > 0;) {
            std::size_t pc = pivot_cols[i];
            mpq_class acc = 0;
            for (std::size_t j = pc + 1; j < cols; ++j) {
                if (ech[i][j] != 0 && x[j] != 0) acc += mpq_class(ech[i][j]) * x[j];
            }
            x[pc] = -acc / mpq_class(ech[i][pc]);
        }
        RatVector v(cols);
        for (std::size_t j = 0; j < cols; ++j) v[j] = Rat(x[j]);
        basis.push_back(normalize_ray(v));
    }
    return basis;
}

RatVector normalize_ray(const RatVector& v)
{
    mpz_class l = 1;
    bool nonzero = false;
    for (const Rat& x : v) {
        if (x.is_zero()) continue;
        nonzero = true;
        if (!x.is_integer()) {
            mpz_class d = x.denominator();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
    }
    if (!nonzero) {
        throw InputError("not a ray");
    }
    std::vector<mpz_class> ints(v.size());
    mpz_class g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = v[i].numerator() * (l / v[i].denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(mpz_class(ints[i] / g));
    return out;
}

bool is_primitive_integer(const RatVector& v)
{
    mpz_class g = 0;
    for (const Rat& x : v) {
        if (!x.is_integer()) return false;
        mpz_class n = x.numerator();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    return g == 0 || g == 1;
}

bool to_int64(const RatVector& v, std::vector<std::int64_t>& out)
{
    out.resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_small() || !v[i].is_integer()) return false;
        out[i] = v[i].numerator().get_si();
    }
    return true;
}

RatVector from_int64(const std::vector<std::int64_t>& v)
{
    RatVector out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(x);
    return out;
}

ModRank::ModRank(std::size_t dim) : dim_(dim), scratch_(dim) {}

std::uint32_t ModRank::residue(std::int64_t v)
{
    auto p = static_cast<std::int64_t>(kPrime);
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t ModRank::residue(const Rat& integral_value)
{
    if (integral_value.is_small()) return residue(integral_value.numerator().get_si());
    mpz_class r;
    mpz_class n = integral_value.numerator();
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), kPrime);
    return static_cast<std::uint32_t>(r.get_ui());
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

bool ModRank::add(const std::uint32_t* row)
{
    if (pivots_.size() == dim_) return false;
    for (std::size_t j = 0; j < dim_; ++j) scratch_[j] = row[j];
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        std::uint64_t f = scratch_[pivots_[k]];
        if (f == 0) continue;
        const auto& b = basis_[k];
        for (std::size_t j = pivots_[k]; j < dim_; ++j) {
            if (b[j] == 0) continue;
            std::uint64_t sub = f * b[j] % kPrime;
            std::uint64_t cur = scratch_[j];
            scratch_[j] = static_cast<std::uint32_t>(cur >= sub ? cur - sub : cur + kPrime - sub);
        }
    }
    std::size_t piv = 0;
    while (piv < dim_ && scratch_[piv] == 0) ++piv;
    if (piv == dim_) return false;
    std::uint64_t inv = pow_mod(scratch_[piv], kPrime - 2, kPrime);
    std::vector<std::uint32_t> nb(dim_, 0);
    for (std::size_t j = piv; j < dim_; ++j) nb[j] = static_cast<std::uint32_t>(scratch_[j] * inv % kPrime);
    // Keep basis fully reduced so later rows only need one pass.
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        auto& b = basis_[k];
        std::uint64_t f = b[piv];
        if (f == 0) continue;
        for (std::size_t j = piv; j < dim_; ++j) {
            if (nb[j] == 0) continue;
            std::uint64_t sub = f * nb[j] % kPrime;
            std::uint64_t cur = b[j];
            b[j] = static_cast<std::uint32_t>(cur >= sub ? cur - sub : cur + kPrime - sub);
        }
    }
    basis_.resize(pivots_.size());
    basis_.push_back(std::move(nb));
    pivots_.push_back(piv);
    return true;
}

}  // namespace polycone
