#include "scurve/lp.hpp"

#include <stdexcept>

namespace scurve {

void LinearProgram::add(QVec row, Rel r, Rational rhs) {
    if (static_cast<int>(row.size()) != nvars)
        throw std::invalid_argument("constraint arity mismatch");
    a.push_back(std::move(row));
    rel.push_back(r);
    b.push_back(std::move(rhs));
}

namespace {

struct Tableau {
    QMat t;                 // m rows, ncols = nvar_total columns
    QVec rhs;               // m entries, kept >= 0
    std::vector<int> basis; // row -> column index
    std::vector<bool> banned;

    int rows() const { return static_cast<int>(t.size()); }
    int cols() const { return t.empty() ? 0 : static_cast<int>(t[0].size()); }

    void pivot(int r, int c) {
        Rational p = t[r][c];
        for (auto& v : t[r]) v /= p;
        rhs[r] /= p;
        for (int i = 0; i < rows(); ++i) {
            if (i == r || t[i][c] == 0) continue;
            Rational f = t[i][c];
            for (int j = 0; j < cols(); ++j) t[i][j] -= f * t[r][j];
            rhs[i] -= f * rhs[r];
        }
        basis[r] = c;
    }

    // Maximizes cost over the current basis. Returns false on unboundedness.
    bool run(const QVec& cost) {
        for (;;) {
            // Reduced costs from scratch: cheap at these sizes and immune to
            // drift bugs in incremental objective-row updates.
            int enter = -1;
            for (int j = 0; j < cols(); ++j) {
                if (banned[j]) continue;
                Rational red = cost[j];
                for (int i = 0; i < rows(); ++i)
                    if (cost[basis[i]] != 0 && t[i][j] != 0)
                        red -= cost[basis[i]] * t[i][j];
                if (red > 0) { enter = j; break; }  // Bland: first improving column
            }
            if (enter < 0) return true;
            int leave = -1;
            Rational best;
            for (int i = 0; i < rows(); ++i) {
                if (t[i][enter] <= 0) continue;
                Rational ratio = rhs[i] / t[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    Rational objective(const QVec& cost) const {
        Rational v = 0;
        for (int i = 0; i < rows(); ++i)
            if (cost[basis[i]] != 0) v += cost[basis[i]] * rhs[i];
        return v;
    }
};

}  // namespace

LPResult lp_solve(const LinearProgram& lp) {
    const int m = static_cast<int>(lp.a.size());
    const int n = lp.nvars;

    // Column layout: [original | slack/surplus | artificial].
    int nslack = 0;
    for (Rel r : lp.rel)
        if (r != Rel::eq) ++nslack;

    Tableau tb;
    tb.t.assign(m, QVec(n + nslack + m, 0));
    tb.rhs.resize(m);
    tb.basis.assign(m, -1);
    int slack_at = n, art_at = n + nslack;
    int nart = 0;

    for (int i = 0; i < m; ++i) {
        Rational sgn = lp.b[i] < 0 ? -1 : 1;
        for (int j = 0; j < n; ++j) tb.t[i][j] = sgn * lp.a[i][j];
        tb.rhs[i] = sgn * lp.b[i];
        Rel r = lp.rel[i];
        if (sgn < 0 && r != Rel::eq) r = (r == Rel::le) ? Rel::ge : Rel::le;
        if (r != Rel::eq) {
            tb.t[i][slack_at] = (r == Rel::le) ? 1 : -1;
            if (r == Rel::le) tb.basis[i] = slack_at;
            ++slack_at;
        }
        if (tb.basis[i] < 0) {
            int ac = art_at + nart++;
            tb.t[i][ac] = 1;
            tb.basis[i] = ac;
        }
    }
    const int total = n + nslack + nart;
    for (auto& row : tb.t) row.resize(total);
    tb.banned.assign(total, false);

    LPResult res;
    if (nart > 0) {
        QVec phase1(total, 0);
        for (int j = art_at; j < total; ++j) phase1[j] = -1;
        tb.run(phase1);  // bounded by construction: objective <= 0
        if (tb.objective(phase1) != 0) {
            res.status = LPStatus::infeasible;
            return res;
        }
        // Pivot lingering zero-level artificials out of the basis.
        for (int i = 0; i < tb.rows(); ++i) {
            if (tb.basis[i] < art_at) continue;
            int c = -1;
            for (int j = 0; j < art_at; ++j)
                if (tb.t[i][j] != 0) { c = j; break; }
            if (c >= 0) tb.pivot(i, c);
            // else: redundant row, harmless to keep with its artificial at 0
        }
        for (int j = art_at; j < total; ++j) tb.banned[j] = true;
    }

    QVec cost(total, 0);
    for (int j = 0; j < n; ++j) cost[j] = lp.c[j];
    if (!tb.run(cost)) {
        res.status = LPStatus::unbounded;
        return res;
    }
    res.status = LPStatus::optimal;
    res.value = tb.objective(cost);
    res.x.assign(n, 0);
    for (int i = 0; i < tb.rows(); ++i)
        if (tb.basis[i] < n) res.x[tb.basis[i]] = tb.rhs[i];
    return res;
}

bool lp_feasible(const LinearProgram& lp) {
    LinearProgram f = lp;
    f.c.assign(f.nvars, 0);
    return lp_solve(f).status == LPStatus::optimal;
}

}  // namespace scurve
