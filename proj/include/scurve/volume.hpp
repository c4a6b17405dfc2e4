#pragma once

#include "scurve/linalg.hpp"

namespace scurve {

/// Facets of conv(points) for a full-dimensional polytope, each given as the
/// set of indices of the points lying on it. Points may include non-vertices.
std::vector<std::vector<int>> facet_point_sets(const QMat& points);

/// Lattice-normalized volume of conv(points): n! times the Euclidean volume,
/// an integer. Lower-dimensional hulls have volume zero.
Int lattice_volume(const std::vector<IVec>& points);

}  // namespace scurve
