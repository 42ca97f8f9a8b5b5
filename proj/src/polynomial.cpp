#include "taurec/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace taurec {

namespace {
const Rational kZero{};
}

Polynomial::Polynomial(const Rational& constant) {
    if (!constant.is_zero()) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
    normalize();
}

Polynomial Polynomial::monomial(unsigned degree, const Rational& coeff) {
    Polynomial p;
    if (!coeff.is_zero()) {
        p.coeffs_.assign(degree + 1, Rational());
        p.coeffs_.back() = coeff;
    }
    return p;
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int Polynomial::low_degree() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero()) return static_cast<int>(k);
    return -1;
}

const Rational& Polynomial::coeff(int power) const {
    if (power < 0 || power > degree()) return kZero;
    return coeffs_[static_cast<std::size_t>(power)];
}

Rational Polynomial::leading() const {
    return coeffs_.empty() ? Rational() : coeffs_.back();
}

Rational Polynomial::operator()(const Rational& at) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(*this);
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Polynomial& Polynomial::operator/=(const Rational& c) {
    return *this *= c.inverse();
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative(unsigned order) const {
    Polynomial p(*this);
    for (unsigned pass = 0; pass < order && !p.is_zero(); ++pass) {
        std::vector<Rational> out;
        out.reserve(p.coeffs_.size());
        for (std::size_t k = 1; k < p.coeffs_.size(); ++k)
            out.push_back(Rational(static_cast<long>(k)) * p.coeffs_[k]);
        p = Polynomial(std::move(out));
    }
    return p;
}

Polynomial Polynomial::composed_with(const Polynomial& inner) const {
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * inner;
        acc += Polynomial(*it);
    }
    return acc;
}

std::string Polynomial::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeff(k);
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = mag == Rational(1) && k > 0;
        if (!unit) os << mag.pretty();
        if (k > 0) {
            if (!unit) os << " ";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::vector<std::string> Polynomial::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.str());
    return out;
}

std::optional<Polynomial> Polynomial::from_coeff_strings(std::span<const std::string> items) {
    std::vector<Rational> coeffs;
    coeffs.reserve(items.size());
    for (const auto& s : items) {
        auto r = Rational::parse(s);
        if (!r) return std::nullopt;
        coeffs.push_back(std::move(*r));
    }
    return Polynomial(std::move(coeffs));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.str();
}

Polynomial falling_factorial(unsigned i) {
    Polynomial p(Rational(1));
    for (unsigned j = 0; j < i; ++j)
        p = p * Polynomial{Rational(-static_cast<long>(j)), Rational(1)};
    return p;
}

std::set<unsigned> natural_roots(const Polynomial& p) {
    if (p.is_zero())
        throw std::invalid_argument("natural_roots: zero polynomial has every natural as a root");

    // Clear denominators, then test every natural up to the Cauchy bound
    // B = 1 + max|a_i| / |a_d| of the integer polynomial.
    mpz_class lcm_den(1);
    for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> a;
    a.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) a.push_back(c.num() * (lcm_den / c.den()));

    mpz_class lead = ::abs(a.back());
    mpz_class maxmag(0);
    for (const auto& v : a)
        if (::abs(v) > maxmag) maxmag = ::abs(v);
    mpz_class bound = 1 + maxmag / lead + 1;  // +1 absorbs the ceiling

    std::set<unsigned> roots;
    for (mpz_class n(0); n <= bound; ++n) {
        mpz_class acc(0);
        for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * n + *it;
        if (acc == 0) roots.insert(static_cast<unsigned>(n.get_ui()));
    }
    return roots;
}

}  // namespace taurec
