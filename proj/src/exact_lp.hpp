#pragma once

#include "symfano/lattice.hpp"

#include <optional>
#include <vector>

namespace symfano::detail {

/// Exact phase-one simplex (Bland's rule): a point x >= 0 with A x = b, or
/// nullopt if the system is infeasible.
std::optional<std::vector<Rational>> find_nonnegative_solution(const RationalMatrix& a,
                                                               std::vector<Rational> b);

} // namespace symfano::detail
