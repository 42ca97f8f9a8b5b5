#pragma once

#include "taurec/diff_operator.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace taurec {

/// Finite top block of the operator matrix: row n holds the coefficient
/// vector of monomial_image(op, n), represented as a polynomial (column
/// index = power of x).
struct FiniteMatrix {
    std::vector<Polynomial> rows;
};

/// Rows 0..N of the operator matrix. Requires cutoff >= 0.
FiniteMatrix build_pi1(const DiffOperator& op, const OperatorProfile& prof);

/// Outcome of the tracked row reduction: the reduced block in pre-LREF
/// (zero rows first, strictly increasing pivot columns, pivots not
/// normalized), the domain basis carried through the same operations, the
/// kernel rows, the pivot map, and the inaccessible degree set S.
struct EchelonResult {
    FiniteMatrix reduced;
    std::vector<Polynomial> standard_polys;
    std::vector<Polynomial> kernel_basis;
    /// Nonzero row position -> pivot column (the row's degree).
    std::map<std::size_t, unsigned> sigma;
    /// Pivot column -> (row position, pivot value).
    std::map<unsigned, std::pair<std::size_t, Rational>> pivots;
    std::set<unsigned> inaccessible;
};

/// Reduce to pre-LREF by elementary row operations, mirroring every
/// operation onto domain_basis (one polynomial per row).
/// accessible_interval is the length of the initial degree interval
/// I(N+h+1); S is that interval minus the pivot columns.
EchelonResult reduce_pre_lref(const FiniteMatrix& m, std::vector<Polynomial> domain_basis,
                              std::size_t accessible_interval);

struct OperatorAnalysis {
    OperatorProfile profile;
    EchelonResult echelon;
};

/// Profile + echelon reduction of the top block in one step.
OperatorAnalysis analyze(const DiffOperator& op);

}  // namespace taurec
