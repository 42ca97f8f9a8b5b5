#include "taurec/orthogonal.hpp"

#include <stdexcept>
#include <utility>

namespace taurec {

Polynomial classical_poly(PolyKind kind, unsigned k, const Rational& a, const Rational& b) {
    if (!(a < b)) throw std::invalid_argument("classical_poly: interval requires a < b");

    Polynomial prev(Rational(1));                       // T_0 = P_0 = 1
    Polynomial cur{Rational(0), Rational(1)};           // T_1 = P_1 = t
    const Polynomial t = cur;
    if (k >= 2) {
        for (unsigned j = 1; j < k; ++j) {
            Polynomial next;
            if (kind == PolyKind::chebyshev_first) {
                next = Rational(2) * (t * cur) - prev;
            } else {
                long n = static_cast<long>(j);
                next = (Rational(2 * n + 1) * (t * cur) - Rational(n) * prev) / Rational(n + 1);
            }
            prev = std::move(cur);
            cur = std::move(next);
        }
    }
    const Polynomial& on_unit = (k == 0) ? prev : cur;

    if (a == Rational(-1) && b == Rational(1)) return on_unit;
    // t = (2x - a - b) / (b - a)
    Rational width = b - a;
    Polynomial map{(-a - b) / width, Rational(2) / width};
    return on_unit.composed_with(map);
}

}  // namespace taurec
