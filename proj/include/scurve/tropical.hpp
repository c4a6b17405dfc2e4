#pragma once

#include "scurve/cone.hpp"
#include "scurve/polynomial.hpp"

#include <json.hpp>

namespace scurve {

/// Terms where <a, v> is minimal over the support (min convention throughout).
Polynomial initial_form(const Polynomial& p, const IVec& v);

PolynomialSystem initial_system(const PolynomialSystem& sys, const IVec& v);

/// The set of directions v for which every polynomial's initial form keeps at
/// least two terms, presented as its maximal cones in canonical order.
struct TropicalFan {
    int n = 0;
    std::vector<Cone> cones;
};

TropicalFan tropical_prevariety(int n, const std::vector<std::vector<IVec>>& supports);
TropicalFan tropical_prevariety(const PolynomialSystem& sys);

/// Distinct primitive generators with positive first coordinate: every extreme
/// ray of every cone plus both signs of each lineality basis vector. Lex-sorted.
std::vector<IVec> pretropism_rays(const TropicalFan& fan);

struct Membership {
    enum class Kind { outside, ray_generator, interior_of_cone };
    Kind kind = Kind::outside;
    int cone_index = -1;
    std::vector<IVec> generators;  // rays witnessing an interior point
};

/// Locates the direction w in the fan: a generator of a 1-dim cone, a point
/// interior to a higher-dimensional cone (with a witness decomposition), or
/// outside the prevariety altogether.
Membership interior_membership(const TropicalFan& fan, const IVec& w);

nlohmann::ordered_json fan_to_json(const TropicalFan& fan);

}  // namespace scurve
