#pragma once

#include "taurec/affine.hpp"
#include "taurec/canonical.hpp"
#include "taurec/orthogonal.hpp"

#include <span>
#include <vector>

namespace taurec {

/// One linear functional sum_t weight * y^(order)(point) = rhs; covers
/// initial, boundary and mixed conditions.
struct ConditionTerm {
    Rational weight;
    unsigned derivative_order = 0;
    Rational point;
    bool operator==(const ConditionTerm&) const = default;
};

struct Condition {
    std::vector<ConditionTerm> terms;
    Rational rhs;
    bool operator==(const Condition&) const = default;
};

Rational condition_lhs(const Condition& c, const Polynomial& y);

struct Perturbation {
    PolyKind kind = PolyKind::chebyshev_first;
    Rational a{-1};
    Rational b{1};
    bool operator==(const Perturbation&) const = default;
};

struct TauProblem {
    DiffOperator op;
    Polynomial rhs;
    std::vector<Condition> conditions;
    Perturbation perturbation;
};

struct TauSolution {
    unsigned order = 0;
    Polynomial y;
    std::vector<Rational> taus;
    std::vector<Rational> free_constants;
    Polynomial perturbation_poly;
    std::size_t system_rows = 0;
    std::size_t system_cols = 0;
};

/// Range-membership conditions for the symbolic right-hand side g: one
/// equation lhs == 0 per inaccessible degree s, with
/// lhs = g_s - sum_{i accessible} r_{i,s} g_i.
struct StmcEquation {
    unsigned s = 0;
    AffineForm lhs;
};

/// Throws std::domain_error when deg g exceeds the generated range.
std::vector<StmcEquation> stmc(const CanonicalBasis& basis, const SymbolicPolynomial& g);

/// General exact solution of apply(op, y) = g: particular part plus free
/// multiples of the kernel elements. Throws std::domain_error when g is not
/// in the range.
struct GeneralSolution {
    Polynomial particular;
    std::vector<Polynomial> kernel;
};
GeneralSolution exact_solve(const TauProblem& problem, const Polynomial& g);

/// Solve the perturbed problem at order n > N with M = nu + height tau
/// parameters; exact throughout.
TauSolution solve_tau(const TauProblem& problem, unsigned n);

struct ResidualReport {
    std::vector<std::pair<Rational, Rational>> perturbation_values;
    Rational max_abs_tau;
    std::vector<Rational> condition_residuals;
};
ResidualReport residual_report(const TauSolution& sol, const TauProblem& problem,
                               std::span<const Rational> sample_points);

}  // namespace taurec
