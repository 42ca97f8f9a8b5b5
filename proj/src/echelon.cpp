#include "taurec/echelon.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace taurec {

FiniteMatrix build_pi1(const DiffOperator& op, const OperatorProfile& prof) {
    if (prof.cutoff < 0) throw std::invalid_argument("build_pi1: empty top block (N = -1)");
    FiniteMatrix m;
    m.rows.reserve(static_cast<std::size_t>(prof.cutoff) + 1);
    for (unsigned n = 0; n <= static_cast<unsigned>(prof.cutoff); ++n)
        m.rows.push_back(op.monomial_image(n));
    return m;
}

EchelonResult reduce_pre_lref(const FiniteMatrix& m, std::vector<Polynomial> domain_basis,
                              std::size_t accessible_interval) {
    if (m.rows.size() != domain_basis.size())
        throw std::invalid_argument("reduce_pre_lref: one domain polynomial per row required");

    struct Row {
        Polynomial image;
        Polynomial domain;
        bool assigned = false;
    };
    std::vector<Row> rows;
    rows.reserve(m.rows.size());
    for (std::size_t i = 0; i < m.rows.size(); ++i)
        rows.push_back({m.rows[i], std::move(domain_basis[i]), false});

    int max_col = -1;
    for (const auto& r : rows) max_col = std::max(max_col, r.image.degree());

    // Columns right to left; the earliest row of matching degree pivots and
    // clears the column from the remaining unassigned rows.
    std::map<unsigned, std::size_t> pivot_row_of;
    for (int col = max_col; col >= 0; --col) {
        std::size_t pick = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!rows[i].assigned && rows[i].image.degree() == col) {
                pick = i;
                break;
            }
        }
        if (pick == rows.size()) continue;
        rows[pick].assigned = true;
        pivot_row_of[static_cast<unsigned>(col)] = pick;
        const Rational pv = rows[pick].image.coeff(col);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].assigned || rows[i].image.coeff(col).is_zero()) continue;
            Rational f = rows[i].image.coeff(col) / pv;
            rows[i].image -= f * rows[pick].image;
            rows[i].domain -= f * rows[pick].domain;
        }
    }

    EchelonResult out;
    // Zero rows first (original order), then pivot rows by ascending column.
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].assigned) continue;
        assert(rows[i].image.is_zero());
        out.reduced.rows.push_back(std::move(rows[i].image));
        out.standard_polys.push_back(rows[i].domain);
        out.kernel_basis.push_back(std::move(rows[i].domain));
    }
    for (const auto& [col, idx] : pivot_row_of) {
        std::size_t pos = out.reduced.rows.size();
        out.sigma[pos] = col;
        out.pivots[col] = {pos, rows[idx].image.coeff(col)};
        out.reduced.rows.push_back(std::move(rows[idx].image));
        out.standard_polys.push_back(std::move(rows[idx].domain));
    }

    for (unsigned s = 0; s < accessible_interval; ++s)
        if (!out.pivots.contains(s)) out.inaccessible.insert(s);
    return out;
}

OperatorAnalysis analyze(const DiffOperator& op) {
    OperatorAnalysis a;
    a.profile = profile(op);
    const int interval = a.profile.cutoff + a.profile.height + 1;
    FiniteMatrix top;
    std::vector<Polynomial> basis;
    if (a.profile.cutoff >= 0) {
        top = build_pi1(op, a.profile);
        for (unsigned n = 0; n <= static_cast<unsigned>(a.profile.cutoff); ++n)
            basis.push_back(Polynomial::monomial(n));
    }
    a.echelon = reduce_pre_lref(top, std::move(basis),
                                interval > 0 ? static_cast<std::size_t>(interval) : 0);
    return a;
}

}  // namespace taurec
