#pragma once

#include "taurec/polynomial.hpp"

namespace taurec {

enum class PolyKind { chebyshev_first, legendre };

/// T_k or P_k composed with the affine map sending [a, b] onto [-1, 1].
/// Requires a < b.
Polynomial classical_poly(PolyKind kind, unsigned k, const Rational& a, const Rational& b);

}  // namespace taurec
