#include "support.hpp"

namespace taurec::testing {

DiffOperator example1_op() {
    return DiffOperator{{Polynomial{}, Polynomial{}, Polynomial{Rational(-3)},
                         Polynomial{Rational(0), Rational(1)}, Polynomial{Rational(1)}}};
}

DiffOperator example2_op() {
    return DiffOperator{{Polynomial{}, Polynomial{}, Polynomial{Rational(3)},
                         Polynomial{Rational(1), Rational(-3)},
                         Polynomial{Rational(1), Rational(0), Rational(1)}}};
}

Polynomial random_polynomial(std::mt19937& rng, unsigned max_deg, long mag) {
    std::uniform_int_distribution<unsigned> deg_of(0, max_deg);
    std::uniform_int_distribution<long> coeff_of(-mag, mag);
    std::vector<Rational> coeffs(deg_of(rng) + 1);
    for (auto& c : coeffs) c = Rational(coeff_of(rng));
    return Polynomial(std::move(coeffs));
}

DiffOperator random_operator(std::mt19937& rng, unsigned max_nu, unsigned max_deg, long mag) {
    std::uniform_int_distribution<unsigned> nu_of(0, max_nu);
    std::bernoulli_distribution keep(0.7);
    for (;;) {
        unsigned nu = nu_of(rng);
        std::vector<Polynomial> coeffs(nu + 1);
        for (unsigned i = 0; i <= nu; ++i)
            if (i == nu || keep(rng)) coeffs[i] = random_polynomial(rng, max_deg, mag);
        if (coeffs[nu].is_zero()) continue;
        return DiffOperator(std::move(coeffs));
    }
}

ManufacturedProblem manufactured_problem(std::mt19937& rng, const DiffOperator& op,
                                         unsigned degree) {
    std::uniform_int_distribution<long> coeff_of(-5, 5);
    std::vector<Rational> coeffs(degree + 1);
    for (auto& c : coeffs) c = Rational(coeff_of(rng));
    Polynomial truth(std::move(coeffs));

    ManufacturedProblem out{TauProblem{op, op.apply(truth), {}, {}}, truth};
    // Conditions y^{(k)}(x_j) over small integer points and low orders.
    const unsigned nu = op.order();
    for (unsigned k = 0; k < nu; ++k) {
        Condition c;
        Rational pt = Rational(static_cast<long>(k % 3) - 1);
        unsigned ord = k / 3;
        c.terms.push_back({Rational(1), ord, pt});
        c.rhs = condition_lhs(c, truth);
        out.problem.conditions.push_back(std::move(c));
    }
    return out;
}

}  // namespace taurec::testing
