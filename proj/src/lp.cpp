#include "polycone/lp.hpp"

#include <limits>

namespace polycone {

namespace {

// Tableau rows hold the coefficients of every variable followed by the rhs.
// The objective row stores z - sum c_j x_j = 0 in the same layout, so a
// negative entry marks an improving column.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t vars) : vars_(vars), rows_(rows, std::vector<Rat>(vars + 1)), obj_(vars + 1), basis_(rows) {}

    Rat& at(std::size_t r, std::size_t c) { return rows_[r][c]; }
    Rat& rhs(std::size_t r) { return rows_[r][vars_]; }
    std::vector<Rat>& obj() { return obj_; }
    std::size_t& basic(std::size_t r) { return basis_[r]; }
    [[nodiscard]] std::size_t num_rows() const { return rows_.size(); }
    [[nodiscard]] std::size_t num_vars() const { return vars_; }
    std::size_t pivots = 0;

    void pivot(std::size_t pr, std::size_t pc)
    {
        ++pivots;
        std::vector<Rat>& prow = rows_[pr];
        Rat inv = Rat(1) / prow[pc];
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j <= vars_; ++j) {
            if (!prow[j].is_zero()) {
                prow[j] *= inv;
                nz.push_back(j);
            }
        }
        auto eliminate = [&](std::vector<Rat>& row) {
            if (row[pc].is_zero()) return;
            Rat f = row[pc];
            for (auto j : nz) row[j] -= f * prow[j];
        };
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (r != pr) eliminate(rows_[r]);
        }
        eliminate(obj_);
        basis_[pr] = pc;
    }

    void drop_row(std::size_t r)
    {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }

    // Runs Bland's rule on columns [0, allowed). Returns false if unbounded.
    bool optimize(std::size_t allowed)
    {
        while (true) {
            std::size_t enter = allowed;
            for (std::size_t j = 0; j < allowed; ++j) {
                if (obj_[j].sign() < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == allowed) return true;
            std::size_t leave = rows_.size();
            Rat best;
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                const Rat& a = rows_[r][enter];
                if (a.sign() <= 0) continue;
                Rat ratio = rows_[r][vars_] / a;
                if (leave == rows_.size() || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == rows_.size()) return false;
            pivot(leave, enter);
        }
    }

private:
    std::size_t vars_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<Rat> obj_;
    std::vector<std::size_t> basis_;
};

}  // namespace

LpOutcome solve_lp(const RatMatrix& constraints, const RatVector& rhs, const RatVector& objective, Sense sense)
{
    const std::size_t m = constraints.rows();
    const std::size_t d = constraints.cols();
    if (rhs.size() != m || objective.size() != d) {
        throw InputError("solve_lp: dimension mismatch between constraints, rhs and objective");
    }

    // Variables: u (d), w (d) with x = u - w, slacks s (m), artificials.
    std::vector<std::size_t> art_row;
    for (std::size_t i = 0; i < m; ++i) {
        if (rhs[i].sign() > 0) art_row.push_back(i);
    }
    const std::size_t n_struct = 2 * d + m;
    const std::size_t n_vars = n_struct + art_row.size();
    Tableau t(m, n_vars);

    std::size_t next_art = n_struct;
    for (std::size_t i = 0; i < m; ++i) {
        bool flip = rhs[i].sign() <= 0;
        for (std::size_t j = 0; j < d; ++j) {
            const Rat& a = constraints.at(i, j);
            if (a.is_zero()) continue;
            t.at(i, j) = flip ? -a : a;
            t.at(i, d + j) = flip ? a : -a;
        }
        if (flip) {
            t.at(i, 2 * d + i) = 1;
            t.rhs(i) = -rhs[i];
            t.basic(i) = 2 * d + i;
        } else {
            t.at(i, 2 * d + i) = -1;
            t.at(i, next_art) = 1;
            t.rhs(i) = rhs[i];
            t.basic(i) = next_art;
            ++next_art;
        }
    }

    LpOutcome out;
    if (!art_row.empty()) {
        // Phase 1: maximize -sum(artificials).
        auto& z = t.obj();
        for (std::size_t j = n_struct; j < n_vars; ++j) z[j] = 1;
        for (auto i : art_row) {
            for (std::size_t j = 0; j <= n_vars; ++j) {
                if (!t.at(i, j).is_zero()) z[j] -= t.at(i, j);
            }
        }
        t.optimize(n_vars);
        if (t.obj()[n_vars].sign() < 0) {
            out.status = LpStatus::infeasible;
            out.pivots = t.pivots;
            return out;
        }
        // Drive remaining (zero-valued) artificials out of the basis.
        for (std::size_t r = 0; r < t.num_rows();) {
            if (t.basic(r) < n_struct) {
                ++r;
                continue;
            }
            std::size_t col = n_struct;
            for (std::size_t j = 0; j < n_struct; ++j) {
                if (!t.at(r, j).is_zero()) {
                    col = j;
                    break;
                }
            }
            if (col == n_struct) {
                t.drop_row(r);
            } else {
                t.pivot(r, col);
                ++r;
            }
        }
    }

    // Phase 2.
    auto& z = t.obj();
    for (auto& v : z) v = Rat();
    std::vector<Rat> cost(n_vars);
    for (std::size_t j = 0; j < d; ++j) {
        Rat c = sense == Sense::maximize ? objective[j] : -objective[j];
        cost[j] = c;
        cost[d + j] = -c;
    }
    for (std::size_t j = 0; j < n_vars; ++j) z[j] = -cost[j];
    for (std::size_t r = 0; r < t.num_rows(); ++r) {
        const Rat& cb = cost[t.basic(r)];
        if (cb.is_zero()) continue;
        for (std::size_t j = 0; j <= n_vars; ++j) {
            if (!t.at(r, j).is_zero()) z[j] += cb * t.at(r, j);
        }
    }
    bool bounded = t.optimize(n_struct);
    out.pivots = t.pivots;
    if (!bounded) {
        out.status = LpStatus::unbounded;
        return out;
    }
    RatVector x(d);
    for (std::size_t r = 0; r < t.num_rows(); ++r) {
        std::size_t b = t.basic(r);
        if (b < d) {
            x[b] += t.rhs(r);
        } else if (b < 2 * d) {
            x[b - d] -= t.rhs(r);
        }
    }
    out.status = LpStatus::optimal;
    out.value = dot(objective, x);
    out.point = std::move(x);
    return out;
}

}  // namespace polycone
