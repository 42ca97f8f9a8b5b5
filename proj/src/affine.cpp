#include "taurec/affine.hpp"

#include <cassert>
#include <stdexcept>

namespace taurec {

AffineForm AffineForm::of_constant(const Rational& c, std::size_t arity) {
    AffineForm f(arity);
    f.constant = c;
    return f;
}

AffineForm AffineForm::of_unknown(std::size_t j, std::size_t arity) {
    AffineForm f(arity);
    f.coeffs.at(j) = Rational(1);
    return f;
}

bool AffineForm::is_zero() const {
    if (!constant.is_zero()) return false;
    for (const auto& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

AffineForm& AffineForm::operator+=(const AffineForm& o) {
    assert(coeffs.size() == o.coeffs.size());
    constant += o.constant;
    for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs[j] += o.coeffs[j];
    return *this;
}

AffineForm& AffineForm::operator-=(const AffineForm& o) {
    assert(coeffs.size() == o.coeffs.size());
    constant -= o.constant;
    for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs[j] -= o.coeffs[j];
    return *this;
}

AffineForm& AffineForm::operator*=(const Rational& c) {
    constant *= c;
    for (auto& x : coeffs) x *= c;
    return *this;
}

Rational AffineForm::evaluate(std::span<const Rational> unknowns) const {
    if (unknowns.size() != coeffs.size())
        throw std::invalid_argument("AffineForm::evaluate: arity mismatch");
    Rational acc = constant;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (!coeffs[j].is_zero()) acc += coeffs[j] * unknowns[j];
    return acc;
}

SymbolicPolynomial SymbolicPolynomial::from(const Polynomial& p, std::size_t arity) {
    SymbolicPolynomial s(arity);
    s.add_scaled(p, Rational(1));
    return s;
}

int SymbolicPolynomial::degree() const {
    for (std::size_t k = coeffs_.size(); k-- > 0;)
        if (!coeffs_[k].is_zero()) return static_cast<int>(k);
    return -1;
}

const AffineForm& SymbolicPolynomial::coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return zero_;
    return coeffs_[static_cast<std::size_t>(power)];
}

void SymbolicPolynomial::ensure(std::size_t size) {
    while (coeffs_.size() < size) coeffs_.emplace_back(arity_);
}

void SymbolicPolynomial::add_scaled(const Polynomial& p, const Rational& c) {
    if (c.is_zero() || p.is_zero()) return;
    ensure(static_cast<std::size_t>(p.degree()) + 1);
    for (int k = 0; k <= p.degree(); ++k)
        coeffs_[static_cast<std::size_t>(k)].constant += c * p.coeff(k);
}

void SymbolicPolynomial::add_unknown_multiple(const Polynomial& p, std::size_t j) {
    if (p.is_zero()) return;
    ensure(static_cast<std::size_t>(p.degree()) + 1);
    for (int k = 0; k <= p.degree(); ++k)
        coeffs_[static_cast<std::size_t>(k)].coeffs.at(j) += p.coeff(k);
}

void SymbolicPolynomial::add_form_multiple(const Polynomial& p, const AffineForm& form) {
    if (p.is_zero()) return;
    ensure(static_cast<std::size_t>(p.degree()) + 1);
    for (int k = 0; k <= p.degree(); ++k) {
        const Rational& c = p.coeff(k);
        if (!c.is_zero()) coeffs_[static_cast<std::size_t>(k)] += form * c;
    }
}

SymbolicPolynomial SymbolicPolynomial::derivative(unsigned order) const {
    SymbolicPolynomial out = *this;
    for (unsigned pass = 0; pass < order; ++pass) {
        std::vector<AffineForm> next;
        for (std::size_t k = 1; k < out.coeffs_.size(); ++k)
            next.push_back(out.coeffs_[k] * Rational(static_cast<long>(k)));
        out.coeffs_ = std::move(next);
    }
    return out;
}

AffineForm SymbolicPolynomial::evaluate(const Rational& at) const {
    AffineForm acc(arity_);
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        acc *= at;
        acc += coeffs_[k];
    }
    return acc;
}

Polynomial SymbolicPolynomial::substitute(std::span<const Rational> unknowns) const {
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (const auto& f : coeffs_) out.push_back(f.evaluate(unknowns));
    return Polynomial(std::move(out));
}

}  // namespace taurec
