#include "taurec/oracle.hpp"

#include "taurec/linear_system.hpp"

#include <algorithm>

namespace taurec {

std::optional<OracleCp> truncated_system_cp(const DiffOperator& op, unsigned m,
                                            const std::set<unsigned>& inaccessible,
                                            int height, int cutoff) {
    const int deg_cap = std::max(static_cast<int>(m) - height + 2, cutoff);
    if (deg_cap < 0) return std::nullopt;
    const std::size_t n_poly = static_cast<std::size_t>(deg_cap) + 1;
    const std::size_t n_res = inaccessible.size();

    // Unknowns: q coefficients, then one residual coefficient per element
    // of S. Equation rows: powers of x up to deg_cap + max(height, 0).
    std::vector<Polynomial> images;
    images.reserve(n_poly);
    int max_row = static_cast<int>(m);
    if (!inaccessible.empty())
        max_row = std::max(max_row, static_cast<int>(*inaccessible.rbegin()));
    for (std::size_t k = 0; k < n_poly; ++k) {
        images.push_back(op.monomial_image(static_cast<unsigned>(k)));
        max_row = std::max(max_row, images.back().degree());
    }

    const std::size_t rows = static_cast<std::size_t>(max_row) + 1;
    RatMatrix a(rows, std::vector<Rational>(n_poly + n_res));
    std::vector<Rational> b(rows);
    for (std::size_t k = 0; k < n_poly; ++k)
        for (int j = 0; j <= images[k].degree(); ++j)
            a[static_cast<std::size_t>(j)][k] = images[k].coeff(j);
    {
        std::size_t col = n_poly;
        for (unsigned s : inaccessible) a[s][col++] = Rational(-1);
    }
    b[m] = Rational(1);

    auto sol = solve_any(std::move(a), std::move(b));
    if (!sol) return std::nullopt;

    OracleCp out;
    std::vector<Rational> qc(sol->begin(), sol->begin() + static_cast<long>(n_poly));
    out.q = Polynomial(std::move(qc));
    std::size_t col = n_poly;
    Polynomial r;
    for (unsigned s : inaccessible) {
        const Rational& rho = (*sol)[col++];
        if (!rho.is_zero()) r += Polynomial::monomial(s, rho);
    }
    out.r = std::move(r);
    return out;
}

}  // namespace taurec
