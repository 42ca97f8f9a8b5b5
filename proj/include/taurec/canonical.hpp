#pragma once

#include "taurec/echelon.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace taurec {

enum class CpClass { null_cp, primary_generic, primary_singular, derived_singular };

const char* to_string(CpClass cls);

/// One canonical polynomial q_m with its residual r_m: apply(op, q) = x^m + r
/// exactly, r supported on the inaccessible set, deg r < m.
struct CanonicalEntry {
    unsigned index = 0;
    Polynomial q;
    Polynomial r;
    CpClass cls = CpClass::primary_generic;
};

/// Complete family of canonical polynomials up to a degree bound, plus the
/// kernel elements (null CPs) and the monomial pivot map used for
/// classification: sigma_table[n] = deg monomial_image(op, n) over nonzero
/// images (NOT the standard basis).
struct CanonicalBasis {
    std::vector<Polynomial> null_cps;
    std::map<unsigned, CanonicalEntry> entries;
    std::map<unsigned, unsigned> sigma_table;
    std::set<unsigned> inaccessible;
    unsigned degree_bound = 0;
};

/// Generate entries for every accessible index m <= degree_bound, in
/// ascending order: top-block rows first (reduced matrix coefficients),
/// then bottom-block monomial images consumed directly.
CanonicalBasis generate(const DiffOperator& op, const EchelonResult& ech, unsigned degree_bound);

std::map<unsigned, Polynomial> residuals(const CanonicalBasis& basis);

/// Index-level classification: m is primary when some monomial row reaches
/// degree m, generic when a reaching row n also satisfies sigma_n = n + h.
std::map<unsigned, CpClass> classify(const DiffOperator& op, const CanonicalBasis& basis);

/// Class of the canonical polynomial a single monomial row n would generate
/// (index sigma_n); nullopt when the image of x^n is zero.
std::optional<CpClass> monomial_witness_class(const DiffOperator& op, unsigned n);

/// True when every complete family must contain a derived-singular entry,
/// i.e. some accessible index is reached by no monomial image.
bool has_derived_singular(const DiffOperator& op, const EchelonResult& ech);

}  // namespace taurec
