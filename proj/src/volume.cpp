#include "scurve/volume.hpp"

#include "scurve/cone.hpp"

#include <algorithm>
#include <stdexcept>

namespace scurve {

namespace {

IVec scale_to_int(const QVec& row) {
    Int lcm = 1;
    for (const auto& q : row) {
        Int d(denominator(q));
        lcm = lcm / gcd(lcm, d) * d;
    }
    IVec out(row.size());
    for (size_t i = 0; i < row.size(); ++i)
        out[i] = Int(numerator(row[i]) * (lcm / denominator(row[i])));
    return out;
}

QVec affine_coords(const QMat& basis, const QVec& offset, const QVec& p) {
    const int d = static_cast<int>(p.size());
    const int r = static_cast<int>(basis.size());
    QMat a(d, QVec(r));
    QVec b(d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < r; ++j) a[i][j] = basis[j][i];
        b[i] = p[i] - offset[i];
    }
    auto x = solve_linear(std::move(a), std::move(b));
    if (!x) throw std::logic_error("facet point outside its affine hull");
    return *x;
}

// Pulling triangulation of conv(points) (full-dimensional in R^d); returns
// simplices as index tuples. Facet triangulations are built independently,
// which is fine for volume: cones over distinct facets overlap in measure zero.
std::vector<std::vector<int>> triangulate(const QMat& points, int d) {
    const int s = static_cast<int>(points.size());
    if (d == 1) {
        int lo = 0, hi = 0;
        for (int i = 1; i < s; ++i) {
            if (points[i][0] < points[lo][0]) lo = i;
            if (points[i][0] > points[hi][0]) hi = i;
        }
        return {{lo, hi}};
    }
    int i0 = 0;
    for (int i = 1; i < s; ++i)
        if (points[i] < points[i0]) i0 = i;

    if (s == d + 1) {
        QMat diff;
        for (int i = 0; i < s; ++i)
            if (i != i0) {
                QVec r(d);
                for (int j = 0; j < d; ++j) r[j] = points[i][j] - points[i0][j];
                diff.push_back(std::move(r));
            }
        if (rank(std::move(diff)) == d) {
            std::vector<int> all(s);
            for (int i = 0; i < s; ++i) all[i] = i;
            return {all};
        }
    }

    std::vector<std::vector<int>> out;
    for (const auto& facet : facet_point_sets(points)) {
        bool has_i0 = false;
        for (int idx : facet)
            if (idx == i0) has_i0 = true;
        if (has_i0) continue;

        // Rational affine chart on the facet.
        QMat diff;
        for (size_t k = 1; k < facet.size(); ++k) {
            QVec r(d);
            for (int j = 0; j < d; ++j)
                r[j] = points[facet[k]][j] - points[facet[0]][j];
            diff.push_back(std::move(r));
        }
        rref(diff);
        QMat basis(diff.begin(), diff.begin() + (d - 1));
        QMat sub;
        for (int idx : facet)
            sub.push_back(affine_coords(basis, points[facet[0]], points[idx]));

        for (const auto& simplex : triangulate(sub, d - 1)) {
            std::vector<int> lifted;
            lifted.push_back(i0);
            for (int k : simplex) lifted.push_back(facet[k]);
            out.push_back(std::move(lifted));
        }
    }
    return out;
}

}  // namespace

std::vector<std::vector<int>> facet_point_sets(const QMat& points) {
    const int s = static_cast<int>(points.size());
    const int d = static_cast<int>(points[0].size());
    IMat m;
    m.reserve(s);
    for (const auto& p : points) {
        QVec row(d + 1);
        row[0] = 1;
        for (int j = 0; j < d; ++j) row[j + 1] = p[j];
        m.push_back(scale_to_int(row));
    }
    IMat rays = pointed_cone_rays(m, d + 1);
    std::vector<std::vector<int>> facets;
    for (const auto& r : rays) {
        std::vector<int> f;
        for (int i = 0; i < s; ++i) {
            Rational v(r[0]);
            for (int j = 0; j < d; ++j) v += Rational(r[j + 1]) * points[i][j];
            if (v == 0) f.push_back(i);
        }
        facets.push_back(std::move(f));
    }
    return facets;
}

Int lattice_volume(const std::vector<IVec>& points) {
    if (points.empty()) return 0;
    const int d = static_cast<int>(points[0].size());
    std::vector<IVec> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (static_cast<int>(pts.size()) <= d) return 0;

    IMat diff;
    for (size_t i = 1; i < pts.size(); ++i) {
        IVec r(d);
        for (int j = 0; j < d; ++j) r[j] = pts[i][j] - pts[0][j];
        diff.push_back(std::move(r));
    }
    if (rank(qmat_from_int(diff)) < d) return 0;

    if (d == 1) {
        Int lo = pts[0][0], hi = pts[0][0];
        for (const auto& p : pts) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        return hi - lo;
    }

    QMat qpts(pts.size(), QVec(d));
    for (size_t i = 0; i < pts.size(); ++i)
        for (int j = 0; j < d; ++j) qpts[i][j] = Rational(pts[i][j]);

    Int vol = 0;
    for (const auto& simplex : triangulate(qpts, d)) {
        IMat edges;
        for (size_t k = 1; k < simplex.size(); ++k) {
            IVec r(d);
            for (int j = 0; j < d; ++j)
                r[j] = pts[simplex[k]][j] - pts[simplex[0]][j];
            edges.push_back(std::move(r));
        }
        Int dv = det_int(edges);
        vol += dv < 0 ? Int(-dv) : dv;
    }
    return vol;
}

}  // namespace scurve
