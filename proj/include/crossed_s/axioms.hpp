#pragma once

#include "crossed_s/eqcat.hpp"
#include "crossed_s/report.hpp"

namespace crossed_s {

/// Exhaustive structural checks over the simples of a category: rigidity
/// zig-zags, F^N = id, crossed-braiding equivariance and naturality, both
/// hexagons (third object ranging over all simples when `full_hexagons`,
/// otherwise over the unit and the pair itself), and the three twist axioms.
Report verify_category_axioms(const CatPtr& cat, bool full_hexagons = true);

}  // namespace crossed_s
