#pragma once

#include "taurec/polynomial.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace taurec {

/// Scalar affine in a fixed tuple of unknowns: constant + coeffs . u.
struct AffineForm {
    Rational constant;
    std::vector<Rational> coeffs;

    AffineForm() = default;
    explicit AffineForm(std::size_t arity) : coeffs(arity) {}
    static AffineForm of_constant(const Rational& c, std::size_t arity);
    static AffineForm of_unknown(std::size_t j, std::size_t arity);

    std::size_t arity() const { return coeffs.size(); }
    bool is_zero() const;

    AffineForm& operator+=(const AffineForm& o);
    AffineForm& operator-=(const AffineForm& o);
    AffineForm& operator*=(const Rational& c);
    friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
    friend AffineForm operator-(AffineForm a, const AffineForm& b) { return a -= b; }
    friend AffineForm operator*(AffineForm a, const Rational& c) { return a *= c; }
    friend AffineForm operator*(const Rational& c, AffineForm a) { return a *= c; }
    bool operator==(const AffineForm&) const = default;

    Rational evaluate(std::span<const Rational> unknowns) const;
};

/// Polynomial whose coefficients are affine forms over one shared tuple of
/// unknowns; realizes right-hand sides like f + sum tau_i rho_i without a
/// symbolic-algebra engine.
class SymbolicPolynomial {
  public:
    explicit SymbolicPolynomial(std::size_t arity) : arity_(arity), zero_(arity) {}
    static SymbolicPolynomial from(const Polynomial& p, std::size_t arity);

    std::size_t arity() const { return arity_; }
    int degree() const;
    const AffineForm& coeff(int power) const;

    /// this += c * p
    void add_scaled(const Polynomial& p, const Rational& c);
    /// this += u_j * p
    void add_unknown_multiple(const Polynomial& p, std::size_t j);
    /// this += form * p
    void add_form_multiple(const Polynomial& p, const AffineForm& form);

    SymbolicPolynomial derivative(unsigned order = 1) const;
    AffineForm evaluate(const Rational& at) const;
    Polynomial substitute(std::span<const Rational> unknowns) const;

  private:
    void ensure(std::size_t size);
    std::size_t arity_;
    AffineForm zero_;
    std::vector<AffineForm> coeffs_;
};

}  // namespace taurec
