#pragma once

#include "symfano/fan.hpp"
#include "symfano/fano.hpp"

#include <vector>

namespace symfano::oracle {

/// Convex hull test: every generator is a vertex of the hull, the origin is
/// interior, every maximal cone is smooth and the facets are exactly the
/// maximal cones. Throws DimTooLarge above dimension 4.
bool brute_force_fano(const Fan& f);

/// Minimal non-faces found by scanning all subsets. `max_size` 0 means no
/// bound. Throws TooLarge for more than 16 generators.
std::vector<IndexSet> brute_force_primitive_collections(const Fan& f, std::size_t max_size = 0);

struct WallCurve {
    IndexSet wall;
    OneCycle cycle;
    Integer degree;
};

/// One entry per pair of maximal cones meeting in a common facet.
std::vector<WallCurve> wall_curve_degrees(const Fan& f);

} // namespace symfano::oracle
