#pragma once

#include <vector>

#include "tvb/config.hpp"

namespace tvb {

// Decides whether { lambda >= 0 : A lambda = b } is nonempty, by an exact
// rational phase-1 simplex with Bland's smallest-index anti-cycling rule
// (terminating, no tolerances). A is given row-major.
bool lp_equality_feasible(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b);

// Do the convex hulls of the given point-index blocks share a common
// point? Closed semantics: touching boundaries intersect. Feasibility of
// barycentric weights per block with equal weighted sums (one convexity
// row per block, d linkage rows per extra block).
bool hulls_intersect(const Config& cfg, const std::vector<std::vector<int>>& blocks);

// x in conv{points[i] : i in block}, closed.
bool point_in_hull(const Config& cfg, const std::vector<int>& block, const Point& x);

}  // namespace tvb
