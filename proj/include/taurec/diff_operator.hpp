#pragma once

#include "taurec/polynomial.hpp"

#include <set>
#include <span>
#include <vector>

namespace taurec {

/// Linear differential operator sum_i p_i(x) d^i/dx^i with polynomial
/// coefficients, acting on polynomials. The top coefficient is nonzero,
/// so order() is exact.
class DiffOperator {
  public:
    /// coeffs[i] multiplies d^i/dx^i. Trailing zero coefficients are trimmed;
    /// the zero operator is rejected.
    explicit DiffOperator(std::vector<Polynomial> coeffs);

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const Polynomial& coeff(unsigned i) const { return coeffs_[i]; }
    std::span<const Polynomial> coeffs() const { return coeffs_; }

    Polynomial apply(const Polynomial& p) const;
    /// Image of x^n; its coefficient vector is row n of the operator matrix.
    Polynomial monomial_image(unsigned n) const;

    bool operator==(const DiffOperator&) const = default;

  private:
    std::vector<Polynomial> coeffs_;
};

/// Structural constants of an operator: height, depth, the super-diagonal
/// polynomial xi(n), its natural roots Omega, and the cutoff N (-1 when
/// Omega is empty); xi(n) != 0 for every natural n > N.
struct OperatorProfile {
    int height = 0;
    int depth = 0;
    Polynomial xi;
    std::set<unsigned> omega;
    int cutoff = -1;
};

OperatorProfile profile(const DiffOperator& op);

/// Height/index consistency: h == deficiency - kernel_dim.
bool verify_height_index(const DiffOperator& op, std::size_t kernel_dim, std::size_t deficiency);

}  // namespace taurec
