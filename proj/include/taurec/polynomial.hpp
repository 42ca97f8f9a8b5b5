#pragma once

#include "taurec/rational.hpp"

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace taurec {

/// Dense univariate polynomial over Rational, coefficients indexed by power.
/// Invariant: the highest-index coefficient is nonzero; zero is the empty list.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(const Rational& constant);
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);
    static Polynomial monomial(unsigned degree, const Rational& coeff = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    /// Index of the last nonzero coefficient; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Lowest nonzero power; -1 for the zero polynomial.
    int low_degree() const;
    const Rational& coeff(int power) const;
    std::span<const Rational> coeffs() const { return coeffs_; }
    Rational leading() const;

    Rational operator()(const Rational& at) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    Polynomial& operator/=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
    friend Polynomial operator/(Polynomial p, const Rational& c) { return p /= c; }

    bool operator==(const Polynomial&) const = default;

    Polynomial derivative(unsigned order = 1) const;
    /// Substitution of `inner` for the variable.
    Polynomial composed_with(const Polynomial& inner) const;

    /// Display form with the given variable name, descending powers.
    std::string str(std::string_view var = "x") const;
    /// Shared wire format: ascending "num/den" strings; zero is the empty list.
    std::vector<std::string> coeff_strings() const;
    static std::optional<Polynomial> from_coeff_strings(std::span<const std::string> items);

  private:
    void normalize();
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// The polynomial n(n-1)...(n-i+1) in the variable n; 1 for i = 0.
Polynomial falling_factorial(unsigned i);

/// Exact set of nonnegative integer roots, exhaustive up to the Cauchy bound.
/// The zero polynomial is rejected (every natural is a root).
std::set<unsigned> natural_roots(const Polynomial& p);

}  // namespace taurec
