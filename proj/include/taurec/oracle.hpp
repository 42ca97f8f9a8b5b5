#pragma once

#include "taurec/diff_operator.hpp"

#include <optional>
#include <set>

namespace taurec {

struct OracleCp {
    Polynomial q;
    Polynomial r;
};

/// Truncated-system route to a canonical polynomial, independent of the
/// echelon/recurrence pipeline: solve apply(op, q) = x^m + sum_{s in S}
/// rho_s x^s by dense exact elimination, with deg q capped at
/// max(m - height + 2, cutoff). Returns nullopt when the truncated system
/// has no solution.
std::optional<OracleCp> truncated_system_cp(const DiffOperator& op, unsigned m,
                                            const std::set<unsigned>& inaccessible,
                                            int height, int cutoff);

}  // namespace taurec
