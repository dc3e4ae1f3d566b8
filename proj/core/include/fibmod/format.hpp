#pragma once

#include <string>

#include "fibmod/hypercube.hpp"
#include "fibmod/module.hpp"

namespace fibmod {

/// First-quadrant layout: the first index runs left to right, the second
/// bottom to top (row 0 printed last).  Columns are right-aligned and
/// separated by one space.  Higher axes are printed as labelled 2D slices.
std::string format_grid(const Hypercube<ModuleElement>& block, const Index& origin);

/// Long format: header "n1,...,np,value" (value1..valuem for rank m), one
/// line per entry in axis-1-fastest order, absolute indices.
std::string format_csv(const Hypercube<ModuleElement>& block, const Index& origin);

}  // namespace fibmod
