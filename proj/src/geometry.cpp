#include "scurve/geometry.hpp"

#include "scurve/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace scurve {

namespace {

// a in conv(others)? Feasibility of sum(l_i b_i) = a, sum(l_i) = 1, l >= 0.
bool in_convex_hull(const IVec& a, const std::vector<IVec>& others) {
    if (others.empty()) return false;
    const int n = static_cast<int>(a.size());
    const int m = static_cast<int>(others.size());
    LinearProgram lp(m);
    for (int i = 0; i < n; ++i) {
        QVec row(m);
        for (int j = 0; j < m; ++j) row[j] = Rational(others[j][i]);
        lp.add(std::move(row), Rel::eq, Rational(a[i]));
    }
    lp.add(QVec(m, 1), Rel::eq, 1);
    return lp_feasible(lp);
}

}  // namespace

LatticePolytope polytope_from_points(int dim, std::vector<IVec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    LatticePolytope p;
    p.dim = dim;
    p.points = std::move(pts);
    for (size_t i = 0; i < p.points.size(); ++i) {
        std::vector<IVec> others;
        others.reserve(p.points.size() - 1);
        for (size_t j = 0; j < p.points.size(); ++j)
            if (j != i) others.push_back(p.points[j]);
        if (!in_convex_hull(p.points[i], others)) p.vertices.push_back(p.points[i]);
    }
    return p;
}

LatticePolytope newton_polytope(const Polynomial& p) {
    return polytope_from_points(p.nvars(), p.support());
}

Int min_support_value(const std::vector<IVec>& pts, const IVec& v) {
    if (pts.empty()) throw std::invalid_argument("empty support");
    Int best = ivec_dot(pts[0], v);
    for (size_t i = 1; i < pts.size(); ++i) best = std::min(best, ivec_dot(pts[i], v));
    return best;
}

Int max_support_value(const std::vector<IVec>& pts, const IVec& v) {
    if (pts.empty()) throw std::invalid_argument("empty support");
    Int best = ivec_dot(pts[0], v);
    for (size_t i = 1; i < pts.size(); ++i) best = std::max(best, ivec_dot(pts[i], v));
    return best;
}

std::vector<IVec> face_points_min(const std::vector<IVec>& pts, const IVec& v) {
    Int m = min_support_value(pts, v);
    std::vector<IVec> f;
    for (const auto& p : pts)
        if (ivec_dot(p, v) == m) f.push_back(p);
    return f;
}

std::vector<IVec> face_points_max(const std::vector<IVec>& pts, const IVec& v) {
    Int m = max_support_value(pts, v);
    std::vector<IVec> f;
    for (const auto& p : pts)
        if (ivec_dot(p, v) == m) f.push_back(p);
    return f;
}

IMat unimodular_extend(const IVec& v) {
    const int n = static_cast<int>(v.size());
    if (ivec_is_zero(v)) throw std::invalid_argument("zero direction");
    if (ivec_gcd(v) != 1) throw std::invalid_argument("direction must be primitive");

    // Column Euclid: reduce the row vector v to +-e_k with column operations,
    // mirrored on W so that cur = v * W throughout.
    IVec cur = v;
    IMat w(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) w[i][i] = 1;

    auto col_op = [&](int dst, int src, const Int& q) {
        // column dst -= q * column src
        cur[dst] -= q * cur[src];
        for (int i = 0; i < n; ++i) w[i][dst] -= q * w[i][src];
    };

    for (;;) {
        int piv = -1;
        for (int j = 0; j < n; ++j) {
            if (cur[j] == 0) continue;
            if (piv < 0 || abs(cur[j]) < abs(cur[piv])) piv = j;
        }
        bool more = false;
        for (int j = 0; j < n; ++j) {
            if (j == piv || cur[j] == 0) continue;
            Int q = cur[j] / cur[piv];
            col_op(j, piv, q);
            if (cur[j] != 0) more = true;
        }
        if (!more) {
            // Only the pivot column survives; primitivity forces +-1 there.
            if (cur[piv] == -1) {
                cur[piv] = 1;
                for (int i = 0; i < n; ++i) w[i][piv] = -w[i][piv];
            }
            if (piv != 0) {
                std::swap(cur[piv], cur[0]);
                for (int i = 0; i < n; ++i) std::swap(w[i][piv], w[i][0]);
            }
            break;
        }
    }

    IMat u = unimodular_inverse(w);
    if (u[0] != v) throw std::logic_error("unimodular extension lost its first row");
    return u;
}

TransformedSystem transform_system(const PolynomialSystem& sys, const IMat& U) {
    const int n = sys.nvars;
    TransformedSystem out;
    out.U = U;
    out.reduced.nvars = n;
    for (const auto& p : sys.polys) {
        if (p.is_zero()) throw std::invalid_argument("zero polynomial in system");
        std::vector<std::pair<Expt, Coefficient>> mapped;
        Expt lo(n, 0);
        bool first = true;
        for (const auto& [e, c] : p.terms()) {
            IVec ua = imat_vec(U, expt_to_ivec(e));
            Expt d(n);
            for (int i = 0; i < n; ++i) d[i] = ua[i].convert_to<int32_t>();
            if (first) lo = d;
            else
                for (int i = 0; i < n; ++i) lo[i] = std::min(lo[i], d[i]);
            first = false;
            mapped.emplace_back(std::move(d), c);
        }
        Polynomial q(n);
        for (auto& [e, c] : mapped) {
            for (int i = 0; i < n; ++i) e[i] -= lo[i];
            q.add_term(e, c);
        }
        out.reduced.polys.push_back(std::move(q));
        out.factors.push_back(std::move(lo));
    }
    return out;
}

}  // namespace scurve
