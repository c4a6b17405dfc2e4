#pragma once

#include "scurve/linalg.hpp"

namespace scurve {

// Exact linear programming over the rationals, used for vertex and cone
// membership questions where floating point would misclassify ties.
//
// Variables are implicitly nonnegative; callers encode free variables as
// differences of two nonnegative ones.

enum class Rel { le, eq, ge };

enum class LPStatus { optimal, infeasible, unbounded };

struct LPResult {
    LPStatus status = LPStatus::infeasible;
    Rational value;  // objective at the optimum (maximization)
    QVec x;          // basic feasible solution, one entry per variable
};

struct LinearProgram {
    int nvars = 0;
    QMat a;
    std::vector<Rel> rel;
    QVec b;
    QVec c;  // maximized; defaults to 0 (pure feasibility)

    explicit LinearProgram(int n) : nvars(n), c(n, 0) {}
    void add(QVec row, Rel r, Rational rhs);
};

/// Two-phase simplex with Bland's rule; terminates on degenerate inputs.
LPResult lp_solve(const LinearProgram& lp);

bool lp_feasible(const LinearProgram& lp);

}  // namespace scurve
