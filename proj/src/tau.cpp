#include "taurec/tau.hpp"

#include "taurec/linear_system.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>

namespace taurec {

Rational condition_lhs(const Condition& c, const Polynomial& y) {
    Rational acc;
    for (const auto& t : c.terms) acc += t.weight * y.derivative(t.derivative_order)(t.point);
    return acc;
}

std::vector<StmcEquation> stmc(const CanonicalBasis& basis, const SymbolicPolynomial& g) {
    if (g.degree() > static_cast<int>(basis.degree_bound))
        throw std::domain_error(
            "stmc: right-hand side degree " + std::to_string(g.degree()) +
            " exceeds the generated canonical range " + std::to_string(basis.degree_bound) +
            "; regenerate the basis with a larger bound");
    std::vector<StmcEquation> out;
    for (unsigned s : basis.inaccessible) {
        AffineForm lhs = g.coeff(static_cast<int>(s));
        for (const auto& [m, e] : basis.entries) {
            const Rational& ris = e.r.coeff(static_cast<int>(s));
            if (!ris.is_zero()) lhs -= ris * g.coeff(static_cast<int>(m));
        }
        out.push_back({s, std::move(lhs)});
    }
    return out;
}

GeneralSolution exact_solve(const TauProblem& problem, const Polynomial& g) {
    const OperatorAnalysis a = analyze(problem.op);
    const unsigned bound = static_cast<unsigned>(std::max(g.degree(), 0));
    const CanonicalBasis basis = generate(problem.op, a.echelon, bound);

    for (const auto& eq : stmc(basis, SymbolicPolynomial::from(g, 0)))
        if (!eq.lhs.constant.is_zero())
            throw std::domain_error("g not in range of D: matching condition fails at degree " +
                                    std::to_string(eq.s));

    GeneralSolution sol;
    for (const auto& [m, e] : basis.entries) {
        const Rational& gi = g.coeff(static_cast<int>(m));
        if (!gi.is_zero()) sol.particular += gi * e.q;
    }
    sol.kernel = a.echelon.kernel_basis;
    return sol;
}

TauSolution solve_tau(const TauProblem& problem, unsigned n) {
    const DiffOperator& op = problem.op;
    const unsigned nu = op.order();
    if (problem.conditions.size() != nu)
        throw std::domain_error("expected " + std::to_string(nu) + " conditions, got " +
                                std::to_string(problem.conditions.size()));

    const OperatorAnalysis a = analyze(op);
    const OperatorProfile& prof = a.profile;
    if (static_cast<int>(n) <= prof.cutoff)
        throw std::domain_error("order must exceed N=" + std::to_string(prof.cutoff));

    const int m_count = static_cast<int>(nu) + prof.height;
    assert(m_count >= 0);
    const std::size_t M = static_cast<std::size_t>(m_count);
    if (M > 0 && static_cast<int>(n) - static_cast<int>(M) + 1 < 0)
        throw std::domain_error("order " + std::to_string(n) + " too small for " +
                                std::to_string(M) + " perturbation terms of degree n-i+1");

    const std::size_t alpha = a.echelon.kernel_basis.size();
    const std::size_t arity = alpha + M;

    // g = f + sum_i tau_i rho_{n-i+1}; unknowns are (C_w..., tau_i...).
    std::vector<Polynomial> rho;
    SymbolicPolynomial g = SymbolicPolynomial::from(problem.rhs, arity);
    for (std::size_t i = 1; i <= M; ++i) {
        rho.push_back(classical_poly(problem.perturbation.kind, n - static_cast<unsigned>(i) + 1,
                                     problem.perturbation.a, problem.perturbation.b));
        g.add_unknown_multiple(rho.back(), alpha + i - 1);
    }

    const unsigned bound = static_cast<unsigned>(std::max<int>(g.degree(), 0));
    const CanonicalBasis basis = generate(op, a.echelon, bound);
    const auto matching = stmc(basis, g);

    SymbolicPolynomial y(arity);
    for (const auto& [m, e] : basis.entries) y.add_form_multiple(e.q, g.coeff(static_cast<int>(m)));
    for (std::size_t w = 0; w < alpha; ++w) y.add_unknown_multiple(a.echelon.kernel_basis[w], w);

    RatMatrix sys;
    std::vector<Rational> rhs;
    for (const auto& eq : matching) {
        sys.push_back(eq.lhs.coeffs);
        rhs.push_back(-eq.lhs.constant);
    }
    for (const auto& cond : problem.conditions) {
        AffineForm acc(arity);
        for (const auto& t : cond.terms)
            acc += t.weight * y.derivative(t.derivative_order).evaluate(t.point);
        sys.push_back(acc.coeffs);
        rhs.push_back(cond.rhs - acc.constant);
    }

    TauSolution sol;
    sol.order = n;
    sol.system_rows = sys.size();
    sol.system_cols = arity;
    assert(sol.system_rows == sol.system_cols);

    std::vector<Rational> values;
    try {
        values = solve_square(std::move(sys), std::move(rhs));
    } catch (const std::domain_error&) {
        throw std::domain_error("conditions and matching conditions are linearly dependent or inconsistent");
    }

    sol.free_constants.assign(values.begin(), values.begin() + static_cast<long>(alpha));
    sol.taus.assign(values.begin() + static_cast<long>(alpha), values.end());
    sol.y = y.substitute(values);
    for (std::size_t i = 0; i < M; ++i) sol.perturbation_poly += sol.taus[i] * rho[i];

    if (op.apply(sol.y) != problem.rhs + sol.perturbation_poly)
        throw std::logic_error("perturbed identity violated");
    return sol;
}

ResidualReport residual_report(const TauSolution& sol, const TauProblem& problem,
                               std::span<const Rational> sample_points) {
    ResidualReport rep;
    for (const auto& pt : sample_points)
        rep.perturbation_values.emplace_back(pt, sol.perturbation_poly(pt));
    for (const auto& t : sol.taus) rep.max_abs_tau = std::max(rep.max_abs_tau, t.abs());
    for (const auto& cond : problem.conditions)
        rep.condition_residuals.push_back(condition_lhs(cond, sol.y) - cond.rhs);
    return rep;
}

}  // namespace taurec
