#include "taurec/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace taurec {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
    v_.canonicalize();
}

std::optional<Rational> Rational::parse(std::string_view text) {
    auto is_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!is_integer(num) || !is_integer(den)) return std::nullopt;
    if (num.front() == '+') num.remove_prefix(1);  // mpz rejects a leading plus
    if (den.front() == '+') den.remove_prefix(1);
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::pretty() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return str();
}

std::string Rational::decimal(std::size_t digits) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class n = num() < 0 ? mpz_class(-num()) : num();
    mpz_class scaled = n * scale;
    mpz_class q = scaled / den();
    mpz_class r = scaled % den();
    if (2 * r >= den()) q += 1;

    std::string body = q.get_str();
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    std::string out = body.substr(0, body.size() - digits);
    if (digits > 0) {
        std::string frac = body.substr(body.size() - digits);
        while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
        out += "." + frac;
    }
    if (sign() < 0 && q != 0) out.insert(0, 1, '-');
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.pretty();
}

}  // namespace taurec
