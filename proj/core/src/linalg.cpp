#include "linalg.hpp"

#include <utility>

namespace primezero::detail {

std::size_t rank(RatMatrix m)
{
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const mpq_class f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

std::optional<std::vector<mpq_class>> solve(RatMatrix m, std::vector<mpq_class> rhs)
{
    const std::size_t n = m.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[c]);
        std::swap(rhs[piv], rhs[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            const mpq_class f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
            rhs[i] -= f * rhs[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
    return rhs;
}

} // namespace primezero::detail
