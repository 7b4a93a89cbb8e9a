#pragma once

#include <string>

#include "bperm/expression.hpp"
#include "bperm/limits.hpp"

namespace bperm {

// A deterministic SVG picture of a planar instance: axes, quadrant shading,
// the polygon boundary (convex hull of the lattice points), all lattice
// points of P, and the points of P minus the unit square marked separately
// (circle elements with class "shifted").  Only n = 2 is supported and all
// coefficients must be nonnegative.
std::string render_svg(const MinkowskiExpression& p, const Limits& limits = {});

}  // namespace bperm
