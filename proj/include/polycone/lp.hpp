#pragma once

#include <cstddef>
#include <optional>

#include "polycone/linalg.hpp"

namespace polycone {

enum class Sense { maximize, minimize };
enum class LpStatus { optimal, infeasible, unbounded };

struct LpOutcome {
    LpStatus status = LpStatus::infeasible;
    std::optional<RatVector> point;  // present iff optimal
    std::optional<Rat> value;        // present iff optimal
    std::size_t pivots = 0;
};

/// Optimizes `objective · x` over { x free : constraints · x >= rhs }.
///
/// Two-phase dense tableau simplex over exact rationals with Bland's
/// smallest-index rule for both the entering and the leaving variable, so the
/// pivot sequence is deterministic and never cycles.
LpOutcome solve_lp(const RatMatrix& constraints, const RatVector& rhs, const RatVector& objective, Sense sense);

}  // namespace polycone
