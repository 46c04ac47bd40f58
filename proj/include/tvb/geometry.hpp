#pragma once

#include <vector>

#include "tvb/rational.hpp"

namespace tvb {

// A point is just its coordinate vector; dimension is coords.size().
using Point = std::vector<Rat>;

// Sign of det of a square rational matrix given by rows. Exact.
int det_sign(const std::vector<std::vector<Rat>>& rows);

// Orientation of d+1 points in R^d: sign of det(p1-p0, ..., pd-p0).
// +1 positively oriented / -1 negative / 0 affinely dependent.
// Throws "dimension mismatch" unless pts.size() == d+1 with equal dims.
int orientation(const std::vector<Point>& pts);

// True iff the given m points (m >= 1) are affinely independent.
bool affinely_independent(const std::vector<Point>& pts);

// Every subset of size 2..d+1 affinely independent. n below d+2 still
// checks all subsets that exist. Throws on mixed dimensions.
bool in_general_position(const std::vector<Point>& pts, int d);

// Strict interior containment of p in the simplex spanned by d+1 points.
// Throws "degenerate input" if the simplex is flat or p lies on a facet
// hyperplane (callers guarantee general position, where that never happens).
bool simplex_contains(const std::vector<Point>& simplex, const Point& p);

// q in the open cone { sum mu_i s_i : mu_i > 0 } spanned by d linearly
// independent vectors; boundary points are out. Throws "degenerate input"
// on dependent spans.
bool cone_member(const std::vector<Point>& span, const Point& q);

}  // namespace tvb
