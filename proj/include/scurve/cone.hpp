#pragma once

#include "scurve/linalg.hpp"

#include <string>

namespace scurve {

/// Rational polyhedral cone {v : eq*v = 0, ineq*v >= 0}, carrying its computed
/// V-description: a canonical lineality basis plus the extreme rays of the
/// pointed part (primitive, lex-sorted). Two cones are geometrically equal
/// exactly when their signatures match.
struct Cone {
    int n = 0;
    IMat eq, ineq;
    IMat lineality;
    IMat rays;
    int dim = 0;

    static Cone from_h(int n, IMat eq, IMat ineq);

    bool contains(const IVec& w) const;
    bool in_relint(const IVec& w) const;
    bool is_subset_of(const Cone& o) const;
    bool is_trivial() const { return dim == 0; }

    std::string signature() const;
};

Cone intersect_cones(const Cone& a, const Cone& b);

/// Extreme rays of the pointed cone {u : A u >= 0} in dimension d, where A has
/// rank d. Incremental double description with the combinatorial adjacency test.
IMat pointed_cone_rays(const IMat& a, int d);

/// Nonnegative combination of `rays` (plus an arbitrary lineality part)
/// expressing w; nullopt when w is not in the cone. The returned coefficients
/// come from a basic feasible solution, so at most dim-many are nonzero.
std::optional<std::vector<Rational>> cone_combination(const Cone& c, const IVec& w);

}  // namespace scurve
