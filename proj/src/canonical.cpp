#include "taurec/canonical.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace taurec {

const char* to_string(CpClass cls) {
    switch (cls) {
        case CpClass::null_cp: return "null";
        case CpClass::primary_generic: return "primary-generic";
        case CpClass::primary_singular: return "primary-singular";
        case CpClass::derived_singular: return "derived-singular";
    }
    return "?";
}

namespace {

// q_m = pivot^{-1} ( s - sum_{i < m, i not in S} row[i] * q_i ); the
// residual is recovered as apply(op, q) - x^m, which is exact by
// construction and keeps its support inside S.
CanonicalEntry make_entry(const DiffOperator& op, unsigned m, const Polynomial& row,
                          const Polynomial& domain,
                          const std::map<unsigned, CanonicalEntry>& done,
                          const std::set<unsigned>& S) {
    Polynomial acc = domain;
    for (unsigned i = 0; i < m; ++i) {
        const Rational& a = row.coeff(static_cast<int>(i));
        if (a.is_zero() || S.contains(i)) continue;
        acc -= a * done.at(i).q;
    }
    CanonicalEntry e;
    e.index = m;
    e.q = acc / row.coeff(static_cast<int>(m));
    e.r = op.apply(e.q) - Polynomial::monomial(m);
    return e;
}

CpClass index_class(unsigned m, const std::map<unsigned, unsigned>& sigma_table, int height) {
    CpClass cls = CpClass::derived_singular;
    for (const auto& [n, sn] : sigma_table) {
        if (sn != m) continue;
        if (static_cast<int>(sn) == static_cast<int>(n) + height)
            return CpClass::primary_generic;
        cls = CpClass::primary_singular;
    }
    return cls;
}

}  // namespace

CanonicalBasis generate(const DiffOperator& op, const EchelonResult& ech, unsigned degree_bound) {
    const OperatorProfile prof = profile(op);
    CanonicalBasis out;
    out.degree_bound = degree_bound;
    out.inaccessible = ech.inaccessible;
    out.null_cps = ech.kernel_basis;

    for (const auto& [pos, col] : ech.sigma) {
        if (col > degree_bound) break;
        out.entries.emplace(
            col, make_entry(op, col, ech.reduced.rows[pos], ech.standard_polys[pos],
                            out.entries, ech.inaccessible));
    }

    for (unsigned n = static_cast<unsigned>(prof.cutoff + 1);; ++n) {
        int m = static_cast<int>(n) + prof.height;
        if (m > static_cast<int>(degree_bound)) break;
        assert(m >= 0);
        Polynomial row = op.monomial_image(n);
        assert(row.degree() == m);
        out.entries.emplace(
            static_cast<unsigned>(m),
            make_entry(op, static_cast<unsigned>(m), row, Polynomial::monomial(n),
                       out.entries, ech.inaccessible));
    }

    const int scan_to = std::max(prof.cutoff, static_cast<int>(degree_bound) - prof.height);
    for (int n = 0; n <= scan_to; ++n) {
        Polynomial img = op.monomial_image(static_cast<unsigned>(n));
        if (!img.is_zero())
            out.sigma_table[static_cast<unsigned>(n)] = static_cast<unsigned>(img.degree());
    }

    for (auto& [m, e] : out.entries) e.cls = index_class(m, out.sigma_table, prof.height);
    return out;
}

std::map<unsigned, Polynomial> residuals(const CanonicalBasis& basis) {
    std::map<unsigned, Polynomial> out;
    for (const auto& [m, e] : basis.entries) out.emplace(m, e.r);
    return out;
}

std::map<unsigned, CpClass> classify(const DiffOperator& op, const CanonicalBasis& basis) {
    const int height = profile(op).height;
    std::map<unsigned, CpClass> out;
    for (const auto& [m, e] : basis.entries)
        out.emplace(m, index_class(m, basis.sigma_table, height));
    return out;
}

std::optional<CpClass> monomial_witness_class(const DiffOperator& op, unsigned n) {
    Polynomial img = op.monomial_image(n);
    if (img.is_zero()) return std::nullopt;
    const OperatorProfile prof = profile(op);
    return img.degree() == static_cast<int>(n) + prof.height ? CpClass::primary_generic
                                                             : CpClass::primary_singular;
}

bool has_derived_singular(const DiffOperator& op, const EchelonResult& ech) {
    const OperatorProfile prof = profile(op);
    const int top = prof.cutoff + prof.height;  // accessible indices live in [0, top]
    if (top < 0) return false;
    std::set<unsigned> reached;
    for (int n = 0; n <= prof.cutoff; ++n) {
        Polynomial img = op.monomial_image(static_cast<unsigned>(n));
        if (!img.is_zero()) reached.insert(static_cast<unsigned>(img.degree()));
    }
    for (unsigned m = 0; m <= static_cast<unsigned>(top); ++m) {
        if (ech.inaccessible.contains(m)) continue;
        if (!reached.contains(m)) return true;
    }
    return false;
}

}  // namespace taurec
