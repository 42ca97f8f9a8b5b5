#pragma once

#include "taurec/canonical.hpp"
#include "taurec/tau.hpp"

#include <random>
#include <vector>

namespace taurec::testing {

/// Example operators used across suites.
DiffOperator example1_op();  // d4 + x d3 - 3 d2
DiffOperator example2_op();  // (x^2+1) d4 + (1-3x) d3 + 3 d2

/// Random operator with order <= max_nu, coefficient degrees <= max_deg and
/// integer coefficients in [-mag, mag]; the top coefficient is nonzero.
DiffOperator random_operator(std::mt19937& rng, unsigned max_nu = 4, unsigned max_deg = 4,
                             long mag = 5);

Polynomial random_polynomial(std::mt19937& rng, unsigned max_deg, long mag);

/// A problem whose exact solution is the returned polynomial: the right-hand
/// side is its image and the conditions are derivative evaluations read off
/// it at small integer points.
struct ManufacturedProblem {
    TauProblem problem;
    Polynomial truth;
};
ManufacturedProblem manufactured_problem(std::mt19937& rng, const DiffOperator& op,
                                         unsigned degree);

}  // namespace taurec::testing
