#include "polycone/ddmethod.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

namespace polycone {

std::size_t RowSet::count() const
{
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool RowSet::subset_of(const RowSet& o) const
{
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
}

std::vector<std::size_t> RowSet::indices() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < bits_; ++i) {
        if (test(i)) out.push_back(i);
    }
    return out;
}

RowSet& RowSet::operator&=(const RowSet& o)
{
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

std::size_t rank_of_rows(const std::vector<RatVector>& rows, const RowSet& which, std::size_t dim)
{
    std::vector<RatVector> sel;
    for (auto i : which.indices()) sel.push_back(rows[i]);
    return rank(RatMatrix::from_rows(sel, dim));
}

namespace {

struct Overflow {};

using Wide = __int128;

Wide wide_gcd(Wide a, Wide b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// out = coef_n * n + coef_p * p, divided by the gcd of the first `dim` entries.
void combine(const std::int64_t* p, const std::int64_t* n, std::int64_t coef_p, std::int64_t coef_n,
             std::size_t len, std::size_t dim, std::int64_t* out, std::vector<Wide>& tmp)
{
    tmp.resize(len);
    Wide g = 0;
    for (std::size_t i = 0; i < len; ++i) {
        tmp[i] = static_cast<Wide>(coef_n) * n[i] + static_cast<Wide>(coef_p) * p[i];
        if (i < dim && g != 1) g = wide_gcd(g, tmp[i]);
    }
    constexpr Wide lo = std::numeric_limits<std::int64_t>::min();
    constexpr Wide hi = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i < len; ++i) {
        Wide v = g > 1 ? tmp[i] / g : tmp[i];
        if (v < lo || v > hi) throw Overflow{};
        out[i] = static_cast<std::int64_t>(v);
    }
}

void combine(const mpz_class* p, const mpz_class* n, const mpz_class& coef_p, const mpz_class& coef_n,
             std::size_t len, std::size_t dim, mpz_class* out, std::vector<mpz_class>& tmp)
{
    tmp.resize(len);
    mpz_class g = 0;
    for (std::size_t i = 0; i < len; ++i) {
        tmp[i] = coef_n * n[i] + coef_p * p[i];
        if (i < dim && g != 1) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), tmp[i].get_mpz_t());
    }
    for (std::size_t i = 0; i < len; ++i) {
        if (g > 1) {
            mpz_divexact(out[i].get_mpz_t(), tmp[i].get_mpz_t(), g.get_mpz_t());
        } else {
            out[i] = tmp[i];
        }
    }
}

int sign_of(std::int64_t v) { return (v > 0) - (v < 0); }
int sign_of(const mpz_class& v) { return sgn(v); }

void load(const Rat& r, std::int64_t& out)
{
    if (!r.is_small() || !r.is_integer()) throw Overflow{};
    out = r.numerator().get_si();
}

void load(const Rat& r, mpz_class& out) { out = r.numerator(); }

Rat store(std::int64_t v) { return Rat(v); }
Rat store(const mpz_class& v) { return Rat(v); }

std::uint64_t popcount_and(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* c, std::size_t w,
                           std::uint64_t* out)
{
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < w; ++i) {
        out[i] = a[i] & b[i] & c[i];
        total += static_cast<std::uint64_t>(std::popcount(out[i]));
    }
    return total;
}

std::int64_t dot_z(const std::int64_t* row, const std::int64_t* x, std::size_t d)
{
    Wide acc = 0;
    for (std::size_t c = 0; c < d; ++c) acc += static_cast<Wide>(row[c]) * x[c];
    if (acc < std::numeric_limits<std::int64_t>::min() || acc > std::numeric_limits<std::int64_t>::max()) {
        throw Overflow{};
    }
    return static_cast<std::int64_t>(acc);
}

mpz_class dot_z(const mpz_class* row, const mpz_class* x, std::size_t d)
{
    mpz_class acc = 0;
    for (std::size_t c = 0; c < d; ++c) acc += row[c] * x[c];
    return acc;
}

// Above this many rows the slacks are computed on demand instead of stored
// with every ray, and rows are inserted in input order.
constexpr std::size_t kStoredSlackRows = 512;

// Each ray is stored as its coordinates, followed (for small row counts) by
// its slack at every input row. tight_ holds, per ray, the processed rows
// at which it is tight.
template <class Z>
class Engine {
public:
    Engine(const std::vector<RatVector>& rows, std::size_t dim, const DDOptions& options, DDStats& stats)
        : rows_(rows), d_(dim), m_(rows.size()), lazy_(rows.size() > kStoredSlackRows),
          len_(lazy_ ? dim : dim + rows.size()), w_((rows.size() + 63) / 64), options_(options), stats_(stats),
          processed_(w_, 0)
    {
        if (options_.adjacency == AdjacencyMode::algebraic) {
            residues_.resize(m_ * d_);
            for (std::size_t j = 0; j < m_; ++j) {
                for (std::size_t c = 0; c < d_; ++c) residues_[j * d_ + c] = ModRank::residue(rows_[j][c]);
            }
        }
        if (lazy_) {
            rowz_.resize(m_ * d_);
            for (std::size_t j = 0; j < m_; ++j) {
                for (std::size_t c = 0; c < d_; ++c) load(rows_[j][c], rowz_[j * d_ + c]);
            }
        }
    }

    void run()
    {
        std::vector<bool> done(m_, false);
        initialize(done);
        for (std::size_t step = d_; step < m_; ++step) {
            std::size_t j = pick_row(done);
            insert(j);
            done[j] = true;
            mark_processed(j);
            stats_.max_intermediate = std::max(stats_.max_intermediate, count_);
            if (options_.max_rays != 0 && count_ > options_.max_rays) {
                throw ResourceLimit("intermediate ray count " + std::to_string(count_) + " exceeds the limit " +
                                    std::to_string(options_.max_rays));
            }
            if (options_.verify_steps) verify();
            if (options_.progress) options_.progress(step + 1, m_, count_);
        }
    }

    void export_to(DDState& state) const
    {
        std::vector<std::pair<RatVector, RowSet>> out;
        out.reserve(count_);
        for (std::size_t r = 0; r < count_; ++r) {
            RatVector v(d_);
            for (std::size_t c = 0; c < d_; ++c) v[c] = store(data_[r * len_ + c]);
            RowSet inc(m_);
            for (std::size_t j = 0; j < m_; ++j) {
                if ((tight(r)[j >> 6] >> (j & 63)) & 1u) inc.set(j);
            }
            out.emplace_back(std::move(v), std::move(inc));
        }
        std::sort(out.begin(), out.end());
        for (auto& [v, inc] : out) {
            state.rays.push_back(std::move(v));
            state.incidence.push_back(std::move(inc));
        }
    }

private:
    Z slack(std::size_t r, std::size_t j) const
    {
        if (lazy_) return dot_z(rowz_.data() + j * d_, data_.data() + r * len_, d_);
        return data_[r * len_ + d_ + j];
    }

    const std::uint64_t* tight(std::size_t r) const { return tight_.data() + r * w_; }
    std::uint64_t* tight(std::size_t r) { return tight_.data() + r * w_; }

    void mark_processed(std::size_t j) { processed_[j >> 6] |= std::uint64_t{1} << (j & 63); }

    void initialize(std::vector<bool>& done)
    {
        // A basis of rows chosen greedily, sparsest rows first: a start near
        // the orthant keeps the intermediate ray counts low.
        std::vector<std::size_t> by_support(m_);
        std::iota(by_support.begin(), by_support.end(), 0);
        auto support = [&](std::size_t j) {
            return std::count_if(rows_[j].begin(), rows_[j].end(), [](const Rat& x) { return !x.is_zero(); });
        };
        std::stable_sort(by_support.begin(), by_support.end(),
                         [&](std::size_t a, std::size_t b) { return support(a) < support(b); });
        std::vector<std::size_t> basis;
        {
            ModRank mr(d_);
            std::vector<std::uint32_t> res(d_);
            for (std::size_t j : by_support) {
                if (basis.size() == d_) break;
                for (std::size_t c = 0; c < d_; ++c) res[c] = ModRank::residue(rows_[j][c]);
                if (mr.add(res.data())) basis.push_back(j);
            }
        }
        if (basis.size() < d_) {
            basis.clear();
            std::vector<RatVector> chosen;
            for (std::size_t j : by_support) {
                if (basis.size() == d_) break;
                chosen.push_back(rows_[j]);
                if (rank(RatMatrix::from_rows(chosen, d_)) == chosen.size()) {
                    basis.push_back(j);
                } else {
                    chosen.pop_back();
                }
            }
        }
        for (auto j : basis) {
            done[j] = true;
            mark_processed(j);
        }
        // Ray i is tight at every basis row except basis[i].
        for (std::size_t i = 0; i < d_; ++i) {
            std::vector<RatVector> others;
            for (std::size_t k = 0; k < d_; ++k) {
                if (k != i) others.push_back(rows_[basis[k]]);
            }
            RatVector ray = kernel_basis(RatMatrix::from_rows(others, d_)).at(0);
            if (dot(rows_[basis[i]], ray).sign() < 0) {
                for (auto& x : ray) x = -x;
            }
            data_.resize((count_ + 1) * len_);
            Z* out = data_.data() + count_ * len_;
            for (std::size_t c = 0; c < d_; ++c) load(ray[c], out[c]);
            if (!lazy_) {
                for (std::size_t j = 0; j < m_; ++j) load(dot(rows_[j], ray), out[d_ + j]);
            }
            tight_.resize((count_ + 1) * w_, 0);
            for (std::size_t k = 0; k < d_; ++k) {
                if (k != i) tight(count_)[basis[k] >> 6] |= std::uint64_t{1} << (basis[k] & 63);
            }
            ++count_;
        }
        stats_.max_intermediate = std::max(stats_.max_intermediate, count_);
    }

    std::size_t pick_row(const std::vector<bool>& done) const
    {
        if (options_.order == InsertionOrder::lex_min || lazy_) {
            for (std::size_t j = 0; j < m_; ++j) {
                if (!done[j]) return j;
            }
        }
        std::size_t best = m_;
        std::size_t best_count = 0;
        for (std::size_t j = 0; j < m_; ++j) {
            if (done[j]) continue;
            std::size_t neg = 0;
            for (std::size_t r = 0; r < count_; ++r) {
                if (sign_of(data_[r * len_ + d_ + j]) < 0) ++neg;
            }
            bool better = best == m_ || (options_.order == InsertionOrder::max_cutoff ? neg > best_count : neg < best_count);
            if (better) {
                best = j;
                best_count = neg;
            }
        }
        return best;
    }

    bool adjacent(std::size_t p, std::size_t n, const std::uint64_t* common)
    {
        ++stats_.adjacency_tests;
        if (options_.adjacency == AdjacencyMode::algebraic) {
            ModRank mr(d_);
            std::size_t target = d_ - 2;
            for (std::size_t j = 0; j < m_ && mr.rank() < target; ++j) {
                if ((common[j >> 6] >> (j & 63)) & 1u) mr.add(residues_.data() + j * d_);
            }
            if (mr.rank() >= target) return true;
            RowSet which(m_);
            for (std::size_t j = 0; j < m_; ++j) {
                if ((common[j >> 6] >> (j & 63)) & 1u) which.set(j);
            }
            return rank_of_rows(rows_, which, d_) == target;
        }
        // Any witness is tight at every common row, so it suffices to scan
        // the rays of the common row with the fewest tight rays.
        const std::vector<std::uint32_t>* shortest = nullptr;
        for (std::size_t i = 0; i < w_; ++i) {
            for (std::uint64_t word = common[i]; word != 0; word &= word - 1) {
                std::size_t j = i * 64 + static_cast<std::size_t>(std::countr_zero(word));
                if (shortest == nullptr || by_row_[j].size() < shortest->size()) shortest = &by_row_[j];
            }
        }
        if (shortest == nullptr) return count_ <= 2;
        for (auto r : *shortest) {
            if (r == p || r == n) continue;
            const std::uint64_t* t = tight(r);
            bool contains = true;
            for (std::size_t i = 0; i < w_ && contains; ++i) contains = (common[i] & ~t[i]) == 0;
            if (contains) return false;
        }
        return true;
    }

    void index_rows()
    {
        by_row_.assign(m_, {});
        for (std::size_t r = 0; r < count_; ++r) {
            const std::uint64_t* t = tight(r);
            for (std::size_t i = 0; i < w_; ++i) {
                for (std::uint64_t word = t[i] & processed_[i]; word != 0; word &= word - 1) {
                    by_row_[i * 64 + static_cast<std::size_t>(std::countr_zero(word))].push_back(
                        static_cast<std::uint32_t>(r));
                }
            }
        }
    }

    void insert(std::size_t j)
    {
        std::vector<Z> sj(count_);
        std::vector<std::size_t> plus, zero, minus;
        for (std::size_t r = 0; r < count_; ++r) {
            sj[r] = slack(r, j);
            int s = sign_of(sj[r]);
            (s > 0 ? plus : (s < 0 ? minus : zero)).push_back(r);
        }
        const std::uint64_t jbit = std::uint64_t{1} << (j & 63);
        if (minus.empty()) {
            for (auto r : zero) tight(r)[j >> 6] |= jbit;
            return;
        }

        if (options_.adjacency == AdjacencyMode::combinatorial) index_rows();
        std::vector<Z> fresh;
        std::vector<std::uint64_t> fresh_tight;
        std::vector<std::uint64_t> common(w_);
        std::vector<typename std::conditional<std::is_same_v<Z, std::int64_t>, Wide, mpz_class>::type> tmp;
        const std::size_t need = d_ >= 2 ? d_ - 2 : 0;
        std::size_t fresh_count = 0;
        for (auto p : plus) {
            for (auto n : minus) {
                std::size_t c = popcount_and(tight(p), tight(n), processed_.data(), w_, common.data());
                if (c < need) continue;
                if (!adjacent(p, n, common.data())) continue;
                fresh.resize((fresh_count + 1) * len_);
                Z coef_p = -sj[n];
                Z coef_n = sj[p];
                combine(data_.data() + p * len_, data_.data() + n * len_, coef_p, coef_n, len_, d_,
                        fresh.data() + fresh_count * len_, tmp);
                common[j >> 6] |= jbit;
                fresh_tight.insert(fresh_tight.end(), common.begin(), common.end());
                ++fresh_count;
            }
        }

        std::vector<std::size_t> keep(plus);
        keep.insert(keep.end(), zero.begin(), zero.end());
        std::sort(keep.begin(), keep.end());
        std::vector<Z> next;
        std::vector<std::uint64_t> next_tight;
        next.reserve((keep.size() + fresh_count) * len_);
        next_tight.reserve((keep.size() + fresh_count) * w_);
        for (auto r : keep) {
            next.insert(next.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * len_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * len_));
            next_tight.insert(next_tight.end(), tight(r), tight(r) + w_);
            if (sign_of(sj[r]) == 0) next_tight[next_tight.size() - w_ + (j >> 6)] |= jbit;
        }
        next.insert(next.end(), fresh.begin(), fresh.end());
        next_tight.insert(next_tight.end(), fresh_tight.begin(), fresh_tight.end());
        data_ = std::move(next);
        tight_ = std::move(next_tight);
        count_ = keep.size() + fresh_count;
    }

    void verify() const
    {
        for (std::size_t r = 0; r < count_; ++r) {
            RowSet which(m_);
            for (std::size_t j = 0; j < m_; ++j) {
                if (!((processed_[j >> 6] >> (j & 63)) & 1u)) continue;
                int s = sign_of(slack(r, j));
                if (s < 0) throw std::logic_error("double description: infeasible ray after a step");
                bool marked = (tight(r)[j >> 6] >> (j & 63)) & 1u;
                if ((s == 0) != marked) throw std::logic_error("double description: stale incidence after a step");
                if (s == 0) which.set(j);
            }
            if (rank_of_rows(rows_, which, d_) + 1 != d_) {
                throw std::logic_error("double description: non-extreme ray after a step");
            }
        }
    }

    const std::vector<RatVector>& rows_;
    std::size_t d_;
    std::size_t m_;
    bool lazy_;
    std::size_t len_;
    std::size_t w_;
    const DDOptions& options_;
    DDStats& stats_;
    std::vector<std::uint64_t> processed_;
    std::vector<std::uint32_t> residues_;
    std::vector<Z> rowz_;
    std::vector<Z> data_;
    std::vector<std::uint64_t> tight_;
    std::vector<std::vector<std::uint32_t>> by_row_;
    std::size_t count_ = 0;
};

RatVector integral_row(const RatVector& row)
{
    bool zero = std::all_of(row.begin(), row.end(), [](const Rat& x) { return x.is_zero(); });
    return zero ? row : normalize_ray(row);
}

}  // namespace

DDState dd_run(const std::vector<RatVector>& rows, std::size_t dim, const DDOptions& options)
{
    DDState state;
    state.dim = dim;
    for (const auto& r : rows) {
        if (r.size() != dim) throw InputError("dd_run: row length does not match dimension");
        state.rows.push_back(integral_row(r));
    }
    if (dim == 0) throw InputError("dd_run: dimension must be positive");
    RatMatrix a = RatMatrix::from_rows(state.rows, dim);
    if (rank(a) < dim) {
        RatVector line = kernel_basis(a).at(0);
        throw InputError("cone is not pointed: lineality vector " + to_string(line));
    }
    try {
        Engine<std::int64_t> e(state.rows, dim, options, state.stats);
        e.run();
        e.export_to(state);
    } catch (const Overflow&) {
        state.stats = DDStats{};
        state.stats.used_bignum = true;
        Engine<mpz_class> e(state.rows, dim, options, state.stats);
        e.run();
        e.export_to(state);
    }
    return state;
}

Representation dual_description(const Representation& rep, const DDOptions& options)
{
    for (const auto& r : rep.rows) {
        if (r.size() != rep.dim()) throw InputError("dual_description: row length does not match scheme");
    }
    if (rep.kind == RepKind::V) {
        std::size_t span = rank(RatMatrix::from_rows(rep.rows, rep.dim()));
        if (span < rep.dim()) {
            throw InputError("generators span a space of dimension " + std::to_string(span) + " < " +
                             std::to_string(rep.dim()));
        }
    }
    DDState st = dd_run(rep.rows, rep.dim(), options);
    Representation out;
    out.scheme = rep.scheme;
    out.kind = rep.kind == RepKind::H ? RepKind::V : RepKind::H;
    out.rows = std::move(st.rays);
    return out;
}

Representation facet_enumeration(const Representation& rep, const DDOptions& options)
{
    if (rep.kind != RepKind::V) throw InputError("facet_enumeration: V-representation required");
    return dual_description(rep, options);
}

bool dd_adjacency(const DDState& state, std::size_t r1, std::size_t r2, AdjacencyMode mode)
{
    if (r1 == r2) throw InputError("dd_adjacency: a ray is not adjacent to itself");
    if (r1 >= state.rays.size() || r2 >= state.rays.size()) throw InputError("dd_adjacency: ray index out of range");
    RowSet common = state.incidence[r1] & state.incidence[r2];
    if (state.dim < 2) return false;
    if (mode == AdjacencyMode::algebraic) return rank_of_rows(state.rows, common, state.dim) + 2 == state.dim;
    if (common.count() + 2 < state.dim) return false;
    for (std::size_t r = 0; r < state.rays.size(); ++r) {
        if (r != r1 && r != r2 && common.subset_of(state.incidence[r])) return false;
    }
    return true;
}

}  // namespace polycone
