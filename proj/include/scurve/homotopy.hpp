#pragma once

#include "scurve/numeric.hpp"
#include "scurve/rational.hpp"

#include <json.hpp>
#include <map>
#include <optional>
#include <string>

namespace scurve {

struct SolverConfig {
    uint64_t seed = 20177;
    double newton_tolerance = 1e-8;
    int newton_iters = 10;
    int max_steps = 2000;
    double blowup = 1e10;          // path declared divergent beyond this norm
    double escalate_128 = 1e-8;    // inverse-condition floor for double tracking
    double escalate_256 = 1e-16;   // inverse-condition floor for 128-bit tracking

    // Shrinking-slice endgame.
    double s0 = 0.1;
    double ratio = 0.4;
    int max_winding = 8;
    int max_samples = 28;
    double slope_agree_tol = 1e-3;
};

/// Solutions of a square polynomial system (m polynomials, m variables) from a
/// total-degree start with a random gamma blend. Exponents must be >= 0.
struct SquareSolveResult {
    std::vector<std::vector<CD>> solutions;
    int paths = 0;
    int diverged = 0;
    int failed = 0;
    int escalations = 0;
};

SquareSolveResult solve_square(const PolynomialSystem& sys, const SolverConfig& cfg);

/// Replaces x1 by the constant gamma, renumbering x2..xn to x1..x(n-1); the
/// result carries numeric coefficients.
PolynomialSystem slice_system(const PolynomialSystem& sys, CD gamma);

/// Points of the curve over the hyperplane x1 = gamma (torus solutions of the
/// sliced square system, with the full n coordinates restored).
std::vector<std::vector<CD>> solve_slice(const PolynomialSystem& sys, CD gamma,
                                         const SolverConfig& cfg);

/// Pure slope analysis: given |x_i| samples along s_k = s0 * r^k, estimate the
/// per-coordinate exponents v_i / v_1 by Aitken-accelerated slopes, then read
/// off the winding from the least common denominator.
struct WindingEstimate {
    bool settled = false;
    std::vector<double> slopes;        // extrapolated d log|x_i| / d log s
    std::vector<Rational> exponents;   // rational snap, denominator <= max_winding
    int winding = 0;                   // lcm of the denominators
};

WindingEstimate estimate_winding(const std::vector<std::vector<double>>& abs_samples,
                                 double ratio, int max_winding, double agree_tol);

struct PathResult {
    enum class Status { converged, diverged, inconclusive };
    Status status = Status::inconclusive;
    IVec tropism;             // primitive, first entry = winding (converged only)
    int winding = 0;
    std::vector<CD> leading;  // coefficients in the normalization x1 = t^w exactly
    int samples_used = 0;
    std::string note;
};

/// Tracks every curve point at x1 = s0 down the geometric ladder s0 * r^k and
/// classifies its branch.
struct CurveRun {
    Int slice_count = 0;
    std::vector<PathResult> paths;
    std::vector<std::string> warnings;
};

CurveRun run_curve(const PolynomialSystem& sys, const SolverConfig& cfg);

nlohmann::ordered_json curve_run_to_json(const CurveRun& run);

}  // namespace scurve
