#pragma once

#include "scurve/polynomial.hpp"
#include "scurve/volume.hpp"

#include <json.hpp>

namespace scurve {

/// Lattice-normalized mixed volume of m point sets in R^m (so the unit
/// axis segments give 1). Computed by recursive face decomposition along
/// one-dimensional cones of the prevariety of the first m-1 supports.
Int mixed_volume(const std::vector<std::vector<IVec>>& supports);

/// Independent evaluation by inclusion-exclusion over Minkowski sums of
/// subsets; exponential in m, meant for cross-checking small instances.
Int mixed_volume_by_inclusion_exclusion(const std::vector<std::vector<IVec>>& supports);

/// Intersection count of the curve of an (n-1)-polynomial system with a
/// generic hyperplane x1 = c: the mixed volume of the Newton polytopes
/// together with the x1-axis unit segment.
Int degree_bound(const PolynomialSystem& sys);

struct DegreeTerm {
    IVec ray;    // pretropism, first coordinate positive
    Int weight;  // first coordinate times the face system's mixed volume
};

struct DegreeDecomposition {
    Int total = 0;
    std::vector<DegreeTerm> terms;  // zero-weight rays omitted, lex-sorted
};

/// Splits the degree bound across pretropisms; the term weights always sum
/// to the bound.
DegreeDecomposition degree_decomposition(const PolynomialSystem& sys);

nlohmann::ordered_json decomposition_to_json(const DegreeDecomposition& d);

}  // namespace scurve
