#pragma once

#include "scurve/homotopy.hpp"
#include "scurve/polynomial.hpp"

#include <json.hpp>
#include <optional>

namespace scurve {

/// The torus part of the initial system is empty: every candidate start has a
/// zero coordinate. Usually means the chosen direction hides a sharper one.
struct NoTorusSolutions : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The initial system does not determine isolated leading coefficients; the
/// missing ones have to be recovered order by order.
struct DegenerateInitialSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Leading coefficients per coordinate. `approx` always holds the numeric
/// view; `coeff` entries are set where exact values are known (all of them
/// when `exact`). Entries left empty are recovered by the order-by-order
/// solve where possible.
struct BranchStart {
    std::vector<std::optional<QC>> coeff;
    std::vector<CD> approx;
    bool exact = false;
};

/// All exact mu in Q(i) with mu^g = a. Even g is reduced through exact complex
/// square roots; odd g covers rational multiples of the fourth roots of unity.
std::vector<QC> gaussian_roots(const QC& a, unsigned g);

/// Branch starts for the direction v: solves the transformed initial system on
/// the torus, snaps to exact values (verified by exact evaluation), and maps
/// back with the parameter rescaling fixed by coeff[pin_var] = pin_value.
/// Throws NoTorusSolutions / DegenerateInitialSystem as appropriate.
std::vector<BranchStart> leading_terms(const PolynomialSystem& sys, const IVec& v,
                                       int pin_var, const QC& pin_value,
                                       const SolverConfig& cfg = SolverConfig{});

struct PuiseuxExpansion {
    IVec tropism;                    // primitive, first entry positive
    int winding = 1;                 // first entry of the tropism
    std::vector<Polynomial> coords;  // univariate Laurent polynomials in t
    int order = 0;                   // coefficients fixed through t^(v_i + order)
    int parameter_coord = 0;         // coordinate held to a single term
    std::string normalization;
};

/// Extends a branch start to the requested order. Uses the fixed initial
/// Jacobian when it is invertible and falls back to a staggered elimination
/// that carries undetermined coefficients symbolically until equations of
/// higher order resolve them.
PuiseuxExpansion extend_series(const PolynomialSystem& sys, const IVec& v,
                               const BranchStart& start, int order, int pin_var);

struct CertifyReport {
    bool ok = false;
    std::vector<int> required;  // per polynomial: valuation + order + 1
    std::vector<int> achieved;  // vanishing order of the exact residual
};

/// Exact substitution check: every residual f_j(x(t)) must vanish to the
/// order the truncation promises.
CertifyReport certify(const PolynomialSystem& sys, const PuiseuxExpansion& exp);

/// Rows t, x1_re, x1_im, ..., xn_re, xn_im for the given parameter values.
std::string sample_csv(const PuiseuxExpansion& exp, const std::vector<double>& ts);

nlohmann::ordered_json expansion_to_json(const PuiseuxExpansion& exp);

}  // namespace scurve
