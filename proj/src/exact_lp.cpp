#include "exact_lp.hpp"

#include "symfano/errors.hpp"

namespace symfano::detail {

std::optional<std::vector<Rational>> find_nonnegative_solution(const RationalMatrix& a,
                                                               std::vector<Rational> b)
{
    const std::size_t m = a.size();
    if (b.size() != m) {
        fail(Errc::DimensionMismatch, "right-hand side length");
    }
    const std::size_t n = m == 0 ? 0 : a.front().size();
    const std::size_t width = n + m + 1;
    // Columns: structural variables, then one artificial per row, then rhs.
    std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(width, 0));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) {
            t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
        }
        t[i][n + i] = 1;
        t[i][width - 1] = flip ? Rational(-b[i]) : b[i];
        basis[i] = n + i;
    }
    // Objective row holds reduced costs of "minimise the sum of artificials".
    auto& obj = t[m];
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            obj[j] -= t[i][j];
        }
        obj[width - 1] -= t[i][width - 1];
    }

    while (true) {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j) {
            if (obj[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == width) {
            break;
        }
        std::size_t leave = m;
        Rational best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] > 0) {
                Rational ratio = t[i][width - 1] / t[i][enter];
                if (leave == m || ratio < best_ratio
                    || (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
        }
        if (leave == m) {
            // Unbounded direction cannot occur for a bounded-below objective.
            fail(Errc::InternalInconsistency, "phase-one simplex unbounded");
        }
        Rational piv = t[leave][enter];
        for (auto& x : t[leave]) {
            x /= piv;
        }
        for (std::size_t i = 0; i <= m; ++i) {
            if (i != leave && t[i][enter] != 0) {
                Rational f = t[i][enter];
                for (std::size_t j = 0; j < width; ++j) {
                    t[i][j] -= f * t[leave][j];
                }
            }
        }
        basis[leave] = enter;
    }
    if (obj[width - 1] != 0) {
        return std::nullopt;
    }
    std::vector<Rational> x(n, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) {
            x[basis[i]] = t[i][width - 1];
        }
    }
    return x;
}

} // namespace symfano::detail
