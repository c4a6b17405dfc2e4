#include "scurve/cone.hpp"

#include "scurve/lp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace scurve {

namespace {

IMat drop_zero_rows(IMat m) {
    m.erase(std::remove_if(m.begin(), m.end(),
                           [](const IVec& r) { return ivec_is_zero(r); }),
            m.end());
    return m;
}

IMat sorted_unique(IMat m) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    return m;
}

}  // namespace

IMat pointed_cone_rays(const IMat& a, int d) {
    if (d == 0) return {};
    const int m = static_cast<int>(a.size());

    // Greedy independent row subset for the initial simplicial cone.
    std::vector<int> init;
    QMat acc;
    for (int i = 0; i < m && static_cast<int>(init.size()) < d; ++i) {
        QMat trial = acc;
        trial.push_back(QVec(a[i].begin(), a[i].end()));
        if (rank(trial) > static_cast<int>(acc.size())) {
            acc = std::move(trial);
            init.push_back(i);
        }
    }
    if (static_cast<int>(init.size()) < d)
        throw std::logic_error("constraint matrix rank below ambient dimension");

    QMat ai(d, QVec(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) ai[i][j] = Rational(a[init[i]][j]);
    auto inv = inverse(ai);
    if (!inv) throw std::logic_error("initial rows not invertible");

    IMat rays;
    for (int j = 0; j < d; ++j) {
        QVec col(d);
        for (int i = 0; i < d; ++i) col[i] = (*inv)[i][j];
        IVec r = primitive_from_rational(col);
        if (ivec_dot(a[init[j]], r) < 0)
            for (auto& x : r) x = -x;
        rays.push_back(std::move(r));
    }

    std::vector<int> processed = init;
    std::vector<bool> used(m, false);
    for (int i : init) used[i] = true;

    for (int k = 0; k < m; ++k) {
        if (used[k]) continue;
        std::vector<Int> dot(rays.size());
        for (size_t r = 0; r < rays.size(); ++r) dot[r] = ivec_dot(a[k], rays[r]);

        bool cuts = false;
        for (const auto& s : dot)
            if (s < 0) cuts = true;
        if (!cuts) {
            processed.push_back(k);
            used[k] = true;
            continue;
        }

        // Zero sets of the current rays over the processed constraints.
        std::vector<std::vector<bool>> zero(rays.size());
        for (size_t r = 0; r < rays.size(); ++r) {
            zero[r].resize(processed.size());
            for (size_t c = 0; c < processed.size(); ++c)
                zero[r][c] = ivec_dot(a[processed[c]], rays[r]) == 0;
        }

        IMat next;
        for (size_t r = 0; r < rays.size(); ++r)
            if (dot[r] >= 0) next.push_back(rays[r]);

        for (size_t p = 0; p < rays.size(); ++p) {
            if (dot[p] <= 0) continue;
            for (size_t q = 0; q < rays.size(); ++q) {
                if (dot[q] >= 0) continue;
                // p, q adjacent iff no third ray is zero on all constraints
                // tight at both.
                bool adjacent = true;
                for (size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == q) continue;
                    bool covers = true;
                    for (size_t c = 0; c < processed.size() && covers; ++c)
                        if (zero[p][c] && zero[q][c] && !zero[r][c]) covers = false;
                    if (covers) adjacent = false;
                }
                if (!adjacent) continue;
                IVec w(d, 0);
                for (int i = 0; i < d; ++i)
                    w[i] = dot[p] * rays[q][i] - dot[q] * rays[p][i];
                next.push_back(make_primitive(std::move(w)));
            }
        }
        rays = std::move(next);
        processed.push_back(k);
        used[k] = true;
        if (rays.empty()) break;
    }

    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    return rays;
}

Cone Cone::from_h(int n, IMat eq_in, IMat ineq_in) {
    Cone c;
    c.n = n;
    c.eq = sorted_unique(drop_zero_rows(std::move(eq_in)));
    c.ineq = sorted_unique(drop_zero_rows(std::move(ineq_in)));

    IMat all = c.eq;
    all.insert(all.end(), c.ineq.begin(), c.ineq.end());
    c.lineality = kernel_primitive(all, n);

    IMat eq_and_lin = c.eq;
    eq_and_lin.insert(eq_and_lin.end(), c.lineality.begin(), c.lineality.end());
    IMat k = kernel_primitive(eq_and_lin, n);
    const int d = static_cast<int>(k.size());

    if (d > 0) {
        IMat a;
        for (const auto& g : c.ineq) {
            IVec row(d);
            for (int j = 0; j < d; ++j) row[j] = ivec_dot(g, k[j]);
            if (!ivec_is_zero(row)) a.push_back(std::move(row));
        }
        for (const auto& mu : pointed_cone_rays(a, d)) {
            IVec v(n, 0);
            for (int j = 0; j < d; ++j)
                for (int i = 0; i < n; ++i) v[i] += mu[j] * k[j][i];
            c.rays.push_back(make_primitive(std::move(v)));
        }
        std::sort(c.rays.begin(), c.rays.end());
    }

    c.dim = static_cast<int>(c.lineality.size());
    if (!c.rays.empty()) c.dim += rank(qmat_from_int(c.rays));
    return c;
}

bool Cone::contains(const IVec& w) const {
    for (const auto& e : eq)
        if (ivec_dot(e, w) != 0) return false;
    for (const auto& g : ineq)
        if (ivec_dot(g, w) < 0) return false;
    return true;
}

bool Cone::in_relint(const IVec& w) const {
    if (!contains(w)) return false;
    if (rays.empty()) return true;  // the cone is its own lineality space

    // max t  s.t.  w = lineality part + sum_j (t + mu_j) r_j,  mu_j >= 0.
    const int nl = static_cast<int>(lineality.size());
    const int nr = static_cast<int>(rays.size());
    const int nv = 2 * nl + nr + 2;  // alpha+/-, mu, t+/-
    LinearProgram lp(nv);
    for (int i = 0; i < n; ++i) {
        QVec row(nv, 0);
        for (int k = 0; k < nl; ++k) {
            row[2 * k] = Rational(lineality[k][i]);
            row[2 * k + 1] = -Rational(lineality[k][i]);
        }
        Rational rsum = 0;
        for (int j = 0; j < nr; ++j) {
            row[2 * nl + j] = Rational(rays[j][i]);
            rsum += Rational(rays[j][i]);
        }
        row[2 * nl + nr] = rsum;
        row[2 * nl + nr + 1] = -rsum;
        lp.add(std::move(row), Rel::eq, Rational(w[i]));
    }
    lp.c[2 * nl + nr] = 1;
    lp.c[2 * nl + nr + 1] = -1;
    LPResult res = lp_solve(lp);
    if (res.status == LPStatus::unbounded) return true;
    return res.status == LPStatus::optimal && res.value > 0;
}

bool Cone::is_subset_of(const Cone& o) const {
    for (const auto& r : rays)
        if (!o.contains(r)) return false;
    for (const auto& l : lineality) {
        if (!o.contains(l)) return false;
        IVec neg(l.size());
        for (size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
        if (!o.contains(neg)) return false;
    }
    return true;
}

std::string Cone::signature() const {
    std::ostringstream os;
    os << "L";
    for (const auto& l : lineality) os << ivec_str(l);
    os << "R";
    for (const auto& r : rays) os << ivec_str(r);
    return os.str();
}

Cone intersect_cones(const Cone& a, const Cone& b) {
    IMat eq = a.eq;
    eq.insert(eq.end(), b.eq.begin(), b.eq.end());
    IMat ineq = a.ineq;
    ineq.insert(ineq.end(), b.ineq.begin(), b.ineq.end());
    return Cone::from_h(a.n, std::move(eq), std::move(ineq));
}

std::optional<std::vector<Rational>> cone_combination(const Cone& c, const IVec& w) {
    const int nl = static_cast<int>(c.lineality.size());
    const int nr = static_cast<int>(c.rays.size());
    const int nv = 2 * nl + nr;
    if (nv == 0) {
        if (ivec_is_zero(w)) return std::vector<Rational>{};
        return std::nullopt;
    }
    LinearProgram lp(nv);
    for (int i = 0; i < c.n; ++i) {
        QVec row(nv, 0);
        for (int k = 0; k < nl; ++k) {
            row[2 * k] = Rational(c.lineality[k][i]);
            row[2 * k + 1] = -Rational(c.lineality[k][i]);
        }
        for (int j = 0; j < nr; ++j) row[2 * nl + j] = Rational(c.rays[j][i]);
        lp.add(std::move(row), Rel::eq, Rational(w[i]));
    }
    LPResult res = lp_solve(lp);
    if (res.status != LPStatus::optimal) return std::nullopt;
    return std::vector<Rational>(res.x.begin() + 2 * nl, res.x.end());
}

}  // namespace scurve
