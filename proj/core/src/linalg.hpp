#ifndef PRIMEZERO_SRC_LINALG_HPP
#define PRIMEZERO_SRC_LINALG_HPP

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace primezero::detail {

using RatMatrix = std::vector<std::vector<mpq_class>>;

/// Rank by Gaussian elimination over Q.
std::size_t rank(RatMatrix m);

/// Solves m x = rhs for square nonsingular m; nullopt if singular.
std::optional<std::vector<mpq_class>> solve(RatMatrix m, std::vector<mpq_class> rhs);

} // namespace primezero::detail

#endif
