#pragma once

#include "taurec/polynomial.hpp"

#include <optional>
#include <span>
#include <vector>

namespace taurec {

using RatMatrix = std::vector<std::vector<Rational>>;

/// Unique solution of a square system by exact elimination; throws
/// std::domain_error when the matrix is singular.
std::vector<Rational> solve_square(RatMatrix a, std::vector<Rational> b);

/// Any exact solution of a (possibly rectangular) system, free unknowns set
/// to zero; nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_any(RatMatrix a, std::vector<Rational> b);

std::size_t matrix_rank(RatMatrix a);

/// Exact membership of p in the linear span of the given polynomials.
bool in_span(std::span<const Polynomial> basis, const Polynomial& p);
bool same_span(std::span<const Polynomial> a, std::span<const Polynomial> b);

}  // namespace taurec
