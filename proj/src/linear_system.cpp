#include "taurec/linear_system.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace taurec {

namespace {

// Forward elimination to row echelon; returns pivot column per pivot row.
std::vector<std::size_t> eliminate(RatMatrix& a, std::vector<Rational>* b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (!a[i][c].is_zero()) {
                sel = i;
                break;
            }
        }
        if (sel == rows) continue;
        std::swap(a[r], a[sel]);
        if (b) std::swap((*b)[r], (*b)[sel]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            if (b) (*b)[i] -= f * (*b)[r];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

std::vector<Rational> back_substitute(const RatMatrix& a, const std::vector<Rational>& b,
                                      const std::vector<std::size_t>& pivot_cols) {
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    std::vector<Rational> x(cols);
    for (std::size_t k = pivot_cols.size(); k-- > 0;) {
        std::size_t c = pivot_cols[k];
        Rational acc = b[k];
        for (std::size_t j = c + 1; j < cols; ++j)
            if (!a[k][j].is_zero()) acc -= a[k][j] * x[j];
        x[c] = acc / a[k][c];
    }
    return x;
}

}  // namespace

std::vector<Rational> solve_square(RatMatrix a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("solve_square: size mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("solve_square: matrix not square");
    auto pivots = eliminate(a, &b);
    if (pivots.size() != n) throw std::domain_error("singular linear system");
    return back_substitute(a, b, pivots);
}

std::optional<std::vector<Rational>> solve_any(RatMatrix a, std::vector<Rational> b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve_any: size mismatch");
    auto pivots = eliminate(a, &b);
    for (std::size_t i = pivots.size(); i < a.size(); ++i)
        if (!b[i].is_zero()) return std::nullopt;
    return back_substitute(a, b, pivots);
}

std::size_t matrix_rank(RatMatrix a) {
    return eliminate(a, nullptr).size();
}

namespace {

RatMatrix poly_rows(std::span<const Polynomial> polys, std::size_t cols) {
    RatMatrix m;
    m.reserve(polys.size());
    for (const auto& p : polys) {
        std::vector<Rational> row(cols);
        for (int k = 0; k <= p.degree(); ++k) row[static_cast<std::size_t>(k)] = p.coeff(k);
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace

bool in_span(std::span<const Polynomial> basis, const Polynomial& p) {
    std::size_t cols = static_cast<std::size_t>(std::max(p.degree(), 0)) + 1;
    for (const auto& q : basis)
        cols = std::max(cols, static_cast<std::size_t>(std::max(q.degree(), 0)) + 1);
    RatMatrix m = poly_rows(basis, cols);
    std::size_t base_rank = matrix_rank(m);
    std::vector<Rational> extra(cols);
    for (int k = 0; k <= p.degree(); ++k) extra[static_cast<std::size_t>(k)] = p.coeff(k);
    m.push_back(std::move(extra));
    return matrix_rank(std::move(m)) == base_rank;
}

bool same_span(std::span<const Polynomial> a, std::span<const Polynomial> b) {
    for (const auto& p : a)
        if (!in_span(b, p)) return false;
    for (const auto& p : b)
        if (!in_span(a, p)) return false;
    return true;
}

}  // namespace taurec
