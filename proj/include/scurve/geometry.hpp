#pragma once

#include "scurve/linalg.hpp"
#include "scurve/polynomial.hpp"

namespace scurve {

/// Point set with its extreme points. Vertices are found with exact LPs, so
/// near-coplanar supports cannot be misclassified.
struct LatticePolytope {
    int dim = 0;                // ambient dimension
    std::vector<IVec> points;   // deduplicated input points, lex-sorted
    std::vector<IVec> vertices; // extreme points, lex-sorted
};

LatticePolytope polytope_from_points(int dim, std::vector<IVec> pts);
LatticePolytope newton_polytope(const Polynomial& p);

Int min_support_value(const std::vector<IVec>& pts, const IVec& v);
Int max_support_value(const std::vector<IVec>& pts, const IVec& v);

/// Points minimizing / maximizing <a, v>.
std::vector<IVec> face_points_min(const std::vector<IVec>& pts, const IVec& v);
std::vector<IVec> face_points_max(const std::vector<IVec>& pts, const IVec& v);

/// Unimodular matrix whose first row is the primitive vector v, so that the
/// substitution exponent map a -> U a has first coordinate <v, a>.
IMat unimodular_extend(const IVec& v);

/// Coordinate change x_j = prod_i y_i^(U[i][j]) applied to a system: exponents
/// map a -> U a, then the componentwise minimum is split off per polynomial as
/// a monomial factor y^factor (entries may be negative for Laurent input).
struct TransformedSystem {
    PolynomialSystem reduced;
    std::vector<Expt> factors;
    IMat U;
};

TransformedSystem transform_system(const PolynomialSystem& sys, const IMat& U);

}  // namespace scurve
