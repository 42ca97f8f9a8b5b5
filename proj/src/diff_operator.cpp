#include "taurec/diff_operator.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace taurec {

DiffOperator::DiffOperator(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (coeffs_.empty()) throw std::invalid_argument("zero differential operator");
}

Polynomial DiffOperator::apply(const Polynomial& p) const {
    Polynomial out;
    Polynomial d = p;
    for (unsigned i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) d = d.derivative();
        if (!coeffs_[i].is_zero() && !d.is_zero()) out += coeffs_[i] * d;
    }
    return out;
}

Polynomial DiffOperator::monomial_image(unsigned n) const {
    return apply(Polynomial::monomial(n));
}

OperatorProfile profile(const DiffOperator& op) {
    OperatorProfile prof;
    bool first = true;
    for (unsigned i = 0; i <= op.order(); ++i) {
        const Polynomial& p = op.coeff(i);
        if (p.is_zero()) continue;
        int up = p.degree() - static_cast<int>(i);
        int down = p.low_degree() - static_cast<int>(i);
        if (first) {
            prof.height = up;
            prof.depth = down;
            first = false;
        } else {
            prof.height = std::max(prof.height, up);
            prof.depth = std::min(prof.depth, down);
        }
    }

    // xi(n) = sum of lead(p_i) * n(n-1)...(n-i+1) over the height-attaining i.
    for (unsigned i = 0; i <= op.order(); ++i) {
        const Polynomial& p = op.coeff(i);
        if (p.is_zero() || p.degree() - static_cast<int>(i) != prof.height) continue;
        prof.xi += p.leading() * falling_factorial(i);
    }

    prof.omega = natural_roots(prof.xi);
    prof.cutoff = prof.omega.empty() ? -1 : static_cast<int>(*prof.omega.rbegin());
    return prof;
}

bool verify_height_index(const DiffOperator& op, std::size_t kernel_dim, std::size_t deficiency) {
    return profile(op).height ==
           static_cast<int>(deficiency) - static_cast<int>(kernel_dim);
}

}  // namespace taurec
